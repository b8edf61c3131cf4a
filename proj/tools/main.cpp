#include "cli.hpp"

int main(int argc, char** argv) {
    return geomint::cli::run(argc, argv);
}
