#include <intersect/cli.hpp>

int main(int argc, char** argv) { return intersect::run_cli(argc, argv); }
