#include <vector>

#include "uhs/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return uhs::cli::run(args);
}
