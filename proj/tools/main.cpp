#include "lsx/cli.hpp"

int main(int argc, char** argv) { return lsx::cli::run(argc, argv); }
