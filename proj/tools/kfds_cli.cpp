#include "kfds/cli.hpp"

int main(int argc, char** argv) { return kfds::cli_main(argc, argv); }
