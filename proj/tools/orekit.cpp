#include <iostream>
#include <string>
#include <vector>

#include "orekit/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return orekit::cli::run(args, std::cout, std::cerr);
}
