#include <mtp/cli.hpp>

#include <iostream>
#include <vector>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    mtp::cli::RunResult result = mtp::cli::run(args);
    if (!result.out.empty()) std::cout << result.out;
    if (!result.err.empty()) std::cerr << result.err;
    return result.exit_code;
}
