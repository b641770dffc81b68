#include "sofic/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace sofic {

std::uint64_t fnv1a(std::string_view text, std::uint64_t seed) {
  std::uint64_t h = seed;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "PASS";
    case CheckStatus::fail: return "FAIL";
    case CheckStatus::skip: return "SKIP";
  }
  return "?";
}

void RunReport::add_input(std::string_view label, std::string_view text) {
  inputs_.emplace_back(label);
  digest_ = fnv1a(label, digest_);
  digest_ = fnv1a(std::string_view("\0", 1), digest_);
  digest_ = fnv1a(text, digest_);
}

void RunReport::add_check(std::string name, CheckStatus status, std::string detail) {
  checks_.push_back({std::move(name), status, std::move(detail)});
}

void RunReport::add_count(std::string name, std::size_t vertices, std::size_t edges) {
  counts_.push_back({std::move(name), vertices, edges});
}

void RunReport::add_timing(std::string name, double milliseconds) { timings_.emplace_back(std::move(name), milliseconds); }

bool RunReport::passed() const {
  return std::none_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.status == CheckStatus::fail; });
}

std::string RunReport::digest_hex() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(digest_));
  return buf;
}

std::string RunReport::text() const {
  std::ostringstream out;
  out << command_ << " (inputs " << digest_hex() << ")\n";
  for (const Count& c : counts_) out << c.name << ": " << c.vertices << " vertices / " << c.edges << " edges\n";
  for (const Check& c : checks_) {
    out << to_string(c.status) << "  " << c.name;
    if (!c.detail.empty()) out << "  (" << c.detail << ")";
    out << '\n';
  }
  for (const std::string& n : notes_) out << "note: " << n << '\n';
  for (const auto& [name, ms] : timings_) out << "time " << name << ": " << ms << " ms\n";
  if (!checks_.empty()) out << (passed() ? "all checks passed" : "some checks failed") << '\n';
  return out.str();
}

Json RunReport::json() const {
  Json j;
  j["command"] = command_;
  j["inputs"] = inputs_;
  j["digest"] = digest_hex();
  Json counts = Json::array();
  for (const Count& c : counts_) counts.push_back({{"name", c.name}, {"vertices", c.vertices}, {"edges", c.edges}});
  j["counts"] = std::move(counts);
  Json checks = Json::array();
  for (const Check& c : checks_) {
    checks.push_back({{"name", c.name}, {"status", std::string(to_string(c.status))}, {"detail", c.detail}});
  }
  j["checks"] = std::move(checks);
  j["notes"] = notes_;
  if (!timings_.empty()) {
    Json t = Json::object();
    for (const auto& [name, ms] : timings_) t[name] = ms;
    j["timings_ms"] = std::move(t);
  }
  if (!output_.is_null()) j["output"] = output_;
  j["passed"] = passed();
  return j;
}

}  // namespace sofic
