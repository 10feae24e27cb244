#include <iostream>
#include <string>
#include <vector>

#include "kneser/commands.hpp"

int main(int argc, char** argv) {
    kneser::cli::apply_thread_env();
    std::vector<std::string> args(argv + 1, argv + argc);
    return kneser::cli::run(args, std::cout, std::cerr);
}
