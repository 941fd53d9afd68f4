#include <iostream>

#include "propb/cli.hpp"

int main(int argc, char** argv)
{
    return propb::run_cli(argc, argv, std::cout, std::cerr);
}
