#include "cubix/cli.hpp"

int main(int argc, char** argv) { return cubix::run_cli(argc, argv); }
