#include <string>
#include <vector>

#include "ppos/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ppos::run_cli(args);
}
