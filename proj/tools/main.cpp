#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv)
{
    return hyperrig::cli::run(argc, argv, std::cout, std::cerr);
}
