#include "detsing/cli.hpp"

int main(int argc, char** argv) { return detsing::cli::run(argc, argv); }
