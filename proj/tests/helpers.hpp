#pragma once

#include <random>

#include "plbranch/poly.hpp"

namespace testutil {

// mt19937 output used directly via modulo so sequences stay identical across
// standard libraries.
inline unsigned long pick(std::mt19937& rng, unsigned long n) {
    return rng() % n;
}

inline plbranch::Rational random_rational(std::mt19937& rng) {
    long num = static_cast<long>(pick(rng, 21)) - 10;
    long den = 1 + static_cast<long>(pick(rng, 6));
    return plbranch::rational(num, den);
}

inline plbranch::Poly random_poly(std::mt19937& rng, unsigned max_terms = 6,
                                  unsigned max_degree = 6) {
    plbranch::Poly p;
    unsigned terms = 1 + static_cast<unsigned>(pick(rng, max_terms));
    for (unsigned t = 0; t < terms; ++t) {
        std::uint32_t a = static_cast<std::uint32_t>(pick(rng, max_degree + 1));
        std::uint32_t b = static_cast<std::uint32_t>(pick(rng, max_degree + 1));
        p.add_term({a, b}, random_rational(rng));
    }
    return p;
}

inline plbranch::Poly random_nonzero_poly(std::mt19937& rng, unsigned max_terms = 6,
                                          unsigned max_degree = 6) {
    while (true) {
        plbranch::Poly p = random_poly(rng, max_terms, max_degree);
        if (!p.is_zero()) return p;
    }
}

}  // namespace testutil
