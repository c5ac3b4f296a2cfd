#include "cyclodet/cli.hpp"

int main(int argc, char** argv) { return cyclodet::run(argc, argv); }
