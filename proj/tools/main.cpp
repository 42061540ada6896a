#include "hwobs_cli.hpp"

int main(int argc, char** argv) { return hwobs::cli::run(argc, argv, std::cout, std::cerr); }
