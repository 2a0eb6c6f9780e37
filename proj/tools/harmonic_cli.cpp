#include "harmonic/cli.hpp"

int main(int argc, char** argv) { return harmonic::cli::run(argc, argv); }
