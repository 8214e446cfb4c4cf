#include <iostream>
#include <string>
#include <vector>

#include <lel/cli.hpp>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const lel::CliResult r = lel::run_cli(args);
  std::cout << r.out;
  std::cerr << r.err;
  return r.code;
}
