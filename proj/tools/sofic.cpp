#include "sofic/cli.hpp"

int main(int argc, char** argv) { return sofic::run_cli(argc, argv); }
