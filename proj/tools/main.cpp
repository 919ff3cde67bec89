#include "cli.hpp"
int main(int argc, char** argv) { return adiabatic::cli::run(argc, argv); }
