#include <iostream>

#include "rotsys/cli.hpp"

int main(int argc, char** argv)
{
    return rotsys::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
