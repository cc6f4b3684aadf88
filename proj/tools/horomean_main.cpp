#include "horomean/cli.hpp"

#include <iostream>
#include <vector>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return horomean::cli::run(args, std::cout, std::cerr);
}
