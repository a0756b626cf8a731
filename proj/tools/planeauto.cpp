#include <iostream>

#include "planeauto/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const auto result = planeauto::cli::run_args(args);
  std::cout << result.output;
  return result.exit_code;
}
