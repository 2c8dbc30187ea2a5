#include <iostream>
#include <string>
#include <vector>

#include "exemplar/cli.hpp"
#include "exemplar/demo/prices.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto env = exemplar::demo::demo_environment();
  return exemplar::cli::run_cli(args, env, std::cout, std::cerr);
}
