#include <iostream>

#include "fbq/app/commands.hpp"

int main(int argc, char** argv) { return fbq::cli_main(argc, argv, std::cout, std::cerr); }
