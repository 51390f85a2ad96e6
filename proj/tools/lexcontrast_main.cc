#include <iostream>

#include "lexcontrast/cli.h"

int main(int argc, char **argv) {
  return lexcontrast::RunCli(argc, argv, std::cout, std::cerr);
}
