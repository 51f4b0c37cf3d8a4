#include "betasum/cli_app.hpp"

int main(int argc, char** argv) {
    return betasum::cli::run(argc, argv);
}
