#include <cstdint>
#include <cstring>
#include <iostream>
#include <string>

#include "acceptance.hpp"

int main(int argc, char** argv) {
    std::uint64_t seed = 0;
    for (int i = 1; i < argc - 1; ++i)
        if (std::strcmp(argv[i], "--seed") == 0) seed = std::stoull(argv[i + 1]);

    const auto results = crosscaps::acceptance::run_all(seed, std::cout);
    return crosscaps::acceptance::all_passed(results) ? 0 : 1;
}
