#include "gtrskit/commands.hpp"

int main(int argc, char** argv) { return gtrskit::run_cli(argc, argv); }
