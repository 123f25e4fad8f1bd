#pragma once
// Shared deterministic random generators for the property tests.

#include <random>
#include <vector>

#include "hyperlog/ratfun.hpp"

namespace hlog::testing {

inline std::mt19937& rng() {
    static std::mt19937 gen(0x5eed);
    return gen;
}

inline long rand_int(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng());
}

inline BigRational rand_rat(long max_abs = 6) {
    long num = rand_int(-max_abs, max_abs);
    long den = rand_int(1, 4);
    return rat(num, den);
}

// Random polynomial in the given symbols with bounded degree and term count.
inline Polynomial rand_poly(const std::vector<Sym>& vars, long max_deg = 2,
                            long terms = 3, bool nonzero = false) {
    Polynomial p;
    for (long t = 0; t < terms; t++) {
        Mono m;
        for (Sym v : vars) {
            long e = rand_int(0, max_deg);
            if (e > 0) {
                if ((size_t)v >= m.exps.size()) m.exps.resize((size_t)v + 1, 0);
                m.exps[(size_t)v] = (int32_t)e;
            }
        }
        m.normalize();
        p.add_term(m, rand_rat());
    }
    if (nonzero && p.is_zero()) p = Polynomial(rand_int(1, 5));
    return p;
}

}  // namespace hlog::testing
