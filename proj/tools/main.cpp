#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "graphlab/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  std::optional<std::string> kcap;
  if (const char* env = std::getenv("GRAPHLAB_KCAP"); env != nullptr) {
    kcap = env;
  }
  try {
    return graphlab::cli::run(args, std::cout, std::cerr, kcap);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return EXIT_FAILURE;
  }
}
