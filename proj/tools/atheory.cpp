#include <iostream>

#include "atheory/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const auto result = atheory::cli::run(args);
  std::cout << result.report;
  std::cerr << result.diagnostics;
  return result.exit_code();
}
