#pragma once

#include "nfc/core.hpp"

#include <cstdint>
#include <random>

namespace nfc {

// Seeded generator with a fixed integer mapping, so draws do not depend on the
// standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}
    Int uniform(Int lo, Int hi) {
        auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<Int>(gen_() % span);
    }
    IVec vec(int n, Int lo, Int hi) {
        IVec v(n);
        for (auto& x : v) x = uniform(lo, hi);
        return v;
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace nfc
