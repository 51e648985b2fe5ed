#include "lsdc_cli.hpp"

int main(int argc, char** argv) { return lsdc::cli::run(argc, argv); }
