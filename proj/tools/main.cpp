#include <string>
#include <vector>

#include "cpnum/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cpnum::run_cli(args);
}
