#include "cli.hpp"

int main(int argc, char** argv) { return riesz::cli::run(argc, argv); }
