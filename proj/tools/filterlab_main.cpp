#include <iostream>
#include <string>
#include <vector>

#include "filterlab/commands.hpp"

int main(int argc, char** argv)
{
    const std::vector<std::string> args(argv, argv + argc);
    return filterlab::cli::run(args, std::cout, std::cerr);
}
