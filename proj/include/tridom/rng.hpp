#pragma once

#include <cstdint>
#include <random>

namespace tridom {

/// Seeded generator with portable derived draws. std::mt19937_64 output is
/// pinned by the standard; the bounded/bernoulli draws below avoid
/// std::uniform_int_distribution, whose mapping is implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    /// Uniform draw from {0..m-1}, unbiased via rejection.
    std::uint32_t below(std::uint32_t m) {
        const std::uint64_t span = ~0ULL - ~0ULL % m;  // largest multiple of m
        std::uint64_t r;
        do {
            r = gen_();
        } while (r >= span);
        return static_cast<std::uint32_t>(r % m);
    }

    /// True with probability p.
    bool bernoulli(double p) {
        if (p <= 0.0) return false;
        if (p >= 1.0) return true;
        const auto threshold =
            static_cast<std::uint64_t>(p * 18446744073709551616.0L);  // p * 2^64
        return gen_() < threshold;
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace tridom
