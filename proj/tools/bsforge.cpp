#include <bsforge/cli.hpp>

int main(int argc, char** argv) { return bsforge::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
