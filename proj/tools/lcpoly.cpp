#include <iostream>

#include "lcpoly/cli.hpp"

int main(int argc, char** argv)
{
    return lcpoly::cli::run(argc, argv, std::cout, std::cerr);
}
