#include "wsd/cli.hpp"

int main(int argc, char** argv) { return wsd::cli_main(argc, argv); }
