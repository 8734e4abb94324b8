#include <iostream>

#include "rotsys/cli.hpp"

int main(int argc, char** argv)
{
    const std::string dir = argc > 1 ? argv[1] : rotsys::fixture_dir();
    int failed = 0;
    for (const auto& c : rotsys::run_acceptance(dir)) {
        std::cout << rotsys::format_criterion(c) << std::endl;
        failed += c.pass ? 0 : 1;
    }
    std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed") << "\n";
    return failed ? 1 : 0;
}
