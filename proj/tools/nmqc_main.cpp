#include <string>
#include <vector>

#include "nmqc/cli.hpp"

int main(int argc, char* argv[]) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return nmqc::run_cli(args);
}
