#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>

#include "equiloc/laurent.hpp"

namespace equiloc::testing {

// deterministic generator for property checks; not a quality rng, just stable
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return state >> 33;
    }
    int range(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

inline LaurentPoly random_poly(Rng& rng, int max_terms = 5) {
    LaurentPoly p;
    int n = rng.range(0, max_terms);
    for (int k = 0; k < n; ++k) {
        int c = rng.range(-4, 4);
        if (c == 0) continue;
        p += LaurentPoly::term(Rational(c), rng.range(-6, 6));
    }
    return p;
}

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace equiloc::testing
