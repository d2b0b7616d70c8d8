#include "../src/cli_app.hpp"

int main(int argc, char** argv) { return solenoid::cli::run(argc, argv); }
