#include <mcop/cli.hpp>

int main(int argc, char** argv) { return mcop::cli::run(argc, argv); }
