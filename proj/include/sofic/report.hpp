#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sofic/io.hpp"

namespace sofic {

enum class CheckStatus { pass, fail, skip };
std::string_view to_string(CheckStatus s);

// Outcome of one CLI command. Everything except the timings is a function
// of the inputs and bounds alone.
class RunReport {
 public:
  explicit RunReport(std::string command) : command_(std::move(command)) {}

  // Folds text into the FNV-1a input digest.
  void add_input(std::string_view label, std::string_view text);
  void add_check(std::string name, CheckStatus status, std::string detail = {});
  void add_check(std::string name, bool passed, std::string detail = {}) {
    add_check(std::move(name), passed ? CheckStatus::pass : CheckStatus::fail, std::move(detail));
  }
  void add_count(std::string name, std::size_t vertices, std::size_t edges);
  void add_note(std::string note) { notes_.push_back(std::move(note)); }
  void add_timing(std::string name, double milliseconds);
  void set_output(Json output) { output_ = std::move(output); }

  bool passed() const;
  std::uint64_t digest() const { return digest_; }
  std::string digest_hex() const;

  std::string text() const;
  Json json() const;

 private:
  struct Check {
    std::string name;
    CheckStatus status;
    std::string detail;
  };
  struct Count {
    std::string name;
    std::size_t vertices;
    std::size_t edges;
  };

  std::string command_;
  std::uint64_t digest_ = 0xcbf29ce484222325ULL;
  std::vector<std::string> inputs_;
  std::vector<Check> checks_;
  std::vector<Count> counts_;
  std::vector<std::string> notes_;
  std::vector<std::pair<std::string, double>> timings_;
  Json output_;
};

std::uint64_t fnv1a(std::string_view text, std::uint64_t seed = 0xcbf29ce484222325ULL);

}  // namespace sofic
