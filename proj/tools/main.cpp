#include "cli.hpp"

int main(int argc, char** argv) { return cwlcp::cli::run(argc, argv, std::cout, std::cerr); }
