#include "fpsp/cli.hpp"

int main(int argc, char** argv) { return fpsp::dispatch(argc, argv); }
