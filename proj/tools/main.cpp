#include "cli.hpp"

int main(int argc, char** argv) { return unruh_otto::cli::run(argc, argv); }
