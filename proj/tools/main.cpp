#include "mtc/cli.hpp"

int main(int argc, char** argv) { return mtc::cli::run_main(argc, argv); }
