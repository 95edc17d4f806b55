#include <iostream>

#include "isys/cli.hpp"

int main(int argc, char** argv)
{
    return isys::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
