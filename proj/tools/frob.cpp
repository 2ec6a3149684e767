#include "frob/cli.hpp"

int main(int argc, char** argv) { return frob::cli::dispatch(argc, argv); }
