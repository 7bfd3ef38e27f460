#include "mod2cohom/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return mod2cohom::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
