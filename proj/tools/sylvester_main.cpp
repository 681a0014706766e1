#include <iostream>

#include "sylvester/cli/app.hpp"

int main(int argc, char** argv) {
  return sylvester::cli::main_entry(argc, argv, std::cout, std::cerr);
}
