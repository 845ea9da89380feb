#include "kodaira/cli.hpp"

int main(int argc, char** argv) {
    return kodaira::run(argc, argv);
}
