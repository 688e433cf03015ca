#include <string>
#include <vector>

#include "rookdist/cli_app.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return rookdist::cli::run(args);
}
