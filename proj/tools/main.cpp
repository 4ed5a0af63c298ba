#include "paramspec/cli.hpp"

int main(int argc, char** argv) { return paramspec::run(argc, argv); }
