#include <iostream>

#include "thermoplan/cli.hpp"

int main(int argc, char** argv)
{
    return thermoplan::run(argc, argv, std::cout, std::cerr);
}
