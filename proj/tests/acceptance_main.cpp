#include <iostream>

#include "omlkit/acceptance.hpp"

int main() { return omlkit::acceptance::run_all(std::cout) ? 0 : 1; }
