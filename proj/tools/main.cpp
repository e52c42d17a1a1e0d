#include "hahnrank/cli.hpp"

int main(int argc, char** argv) { return hahnrank::cli_main(argc, argv); }
