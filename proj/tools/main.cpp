#include "hdepth/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return hdepth::cli::run({argv + 1, argv + argc}, std::cout, std::cin);
}
