#include "holoform/weights.hpp"

#include <random>

namespace holoform {

std::vector<std::vector<Scalar>> seeded_points(int nvars, int count, unsigned long long seed) {
    std::mt19937_64 rng(seed);
    // rationals q/16 with q in [8, 32] => values in [1/2, 2]
    std::uniform_int_distribution<int> num(8, 32);
    std::vector<std::vector<Scalar>> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        std::vector<Scalar> p;
        p.reserve(nvars);
        for (int j = 0; j < nvars; ++j)
            p.emplace_back(Rational(num(rng), 16), Rational(num(rng), 16));
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace holoform
