#pragma once

#include <cstdint>

#include "hmf/qseries.hpp"

namespace hmf::testutil {

// deterministic xorshift generator for the randomized property suites
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed = 0x9e3779b97f4a7c15ULL) : state(seed) {}
    std::uint64_t next()
    {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    std::int64_t range(std::int64_t lo, std::int64_t hi) // inclusive
    {
        return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

inline QSeries random_series(Rng& rng, int vars, std::int64_t prec, int terms)
{
    QSeries f(vars, prec);
    for (int i = 0; i < terms; ++i) {
        std::int64_t e0 = rng.range(0, prec - 1);
        std::int64_t e1 = vars == 2 ? rng.range(-3, 3) : 0;
        Rational c = rat(rng.range(-9, 9), rng.range(1, 4));
        f.set_coeff(e0, e1, f.coeff(e0, e1) + c);
    }
    return f;
}

} // namespace hmf::testutil
