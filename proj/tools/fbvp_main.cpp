#include "fbvp/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return fbvp::cli::run(argc, argv, std::cout, std::cerr);
}
