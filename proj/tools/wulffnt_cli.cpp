#include <string>
#include <vector>

#include "wulffnt/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return wulffnt::cli::run(args);
}
