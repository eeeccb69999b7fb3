#include "dphlog/cli.hpp"

int main(int argc, char** argv) { return dphlog::main_entry(argc, argv); }
