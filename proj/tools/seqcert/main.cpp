#include "seqcert/cli/run.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return seqcert::cli::run_cli(argc, argv, std::cout, std::cerr);
}
