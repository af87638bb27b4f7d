#include <iostream>

#include "macmahon/cli.hpp"

int main(int argc, char** argv) {
    return macmahon::cli::run(argc, argv, std::cout, std::cerr);
}
