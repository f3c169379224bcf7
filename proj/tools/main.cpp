#include <iostream>
#include <string>
#include <vector>

#include "coprime/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const auto result = coprime::cli::run(args);
  std::cout << result.output;
  if (!result.error.empty()) std::cerr << result.error << '\n';
  return coprime::cli::exit_code(result.status);
}
