#include "aslkit/cli.hpp"

int main(int argc, char** argv) { return aslkit::cli::run(argc, argv); }
