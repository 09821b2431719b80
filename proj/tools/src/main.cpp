#include <iostream>

#include "coverlab/cli/app.hpp"

int main(int argc, char** argv) {
    return coverlab::cli::run_command({argv + 1, argv + argc}, std::cout, std::cerr);
}
