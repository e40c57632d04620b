#include "cli.hpp"

int main(int argc, char** argv) { return lpt::cli::run(argc, argv); }
