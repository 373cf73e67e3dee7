#include <iostream>

#include "centerbound/cli.hpp"

int main(int argc, char** argv) {
  return centerbound::cli::run(argc, argv, {std::cout, std::cerr});
}
