#include "polargrass/cli.hpp"

int main(int argc, char** argv) { return polargrass::run(argc, argv); }
