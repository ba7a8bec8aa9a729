#include <radolab/cli.hpp>

int main(int argc, char ** argv) { return radolab::cli::run_command(argc, argv); }
