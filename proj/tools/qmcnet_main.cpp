#include <iostream>

#include "qmcnet/cli.hpp"

int main(int argc, char** argv) {
    return qmcnet::cli::run(argc, argv, std::cout, std::cerr);
}
