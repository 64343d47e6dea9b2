#include "hcg/commands.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return hcg::cli_main(argc, argv, std::cout, std::cerr);
}
