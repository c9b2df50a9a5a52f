#include "hulthen/cli.hpp"

int main(int argc, char** argv) { return hulthen::cli::run(argc, argv); }
