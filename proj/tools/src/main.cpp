#include <iostream>
#include <string>
#include <vector>

#include "wellconn_cli/cli.hpp"

int main(int argc, char** argv) {
  return wellconn::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
