#include "slopelab/cli.hpp"

int main(int argc, char** argv) { return slopelab::cmd_dispatch(argc, argv); }
