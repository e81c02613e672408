#include <iostream>
#include <string>
#include <vector>

#include "tfvs/cli.hpp"

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    return tfvs::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
