// Counter-based deterministic randomness (Philox 4x32-10). Streams are
// keyed by (seed, stream index) so parallel trials draw from disjoint
// counter ranges and results do not depend on scheduling.
//
// LazyUniform supports exact inverse-CDF sampling against rational
// thresholds: a uniform U in [0,1) is refined one bit at a time until the
// comparison U < s is decided, so pmf draws are exact with probability 1.
#pragma once

#include <padichl/rational.hpp>

#include <array>
#include <cstdint>

namespace padichl {

class RandomStream {
public:
    RandomStream(uint64_t seed, uint64_t stream);

    uint32_t next_u32();
    uint64_t next_u64();
    int next_bit();
    // Uniform on {0, 1, ..., bound-1} by rejection.
    uint64_t uniform_below(uint64_t bound);
    double next_double();  // 53-bit uniform in [0,1)

    uint64_t seed() const { return seed_; }
    uint64_t stream() const { return stream_; }

private:
    void refill();

    uint64_t seed_, stream_;
    std::array<uint32_t, 2> key_;
    std::array<uint32_t, 4> ctr_;
    std::array<uint32_t, 4> buf_{};
    int buf_pos_ = 4;
    uint64_t bit_buf_ = 0;
    int bits_left_ = 0;
};

// One uniform in [0,1), revealed lazily as a binary expansion. Thresholds
// queried within a single draw must be nondecreasing (an inverse-CDF scan).
class LazyUniform {
public:
    explicit LazyUniform(RandomStream& rs) : rs_(&rs) {}

    // true iff U < s, refining bits until decidable
    bool less_than(const Rat& s);

private:
    RandomStream* rs_;
    Int num_{0};
    long bits_ = 0;
};

// Exact Bernoulli(r) for rational r in [0,1].
bool bernoulli_exact(RandomStream& rs, const Rat& r);

// Exact Geom(x): Pr(X = l) = (1-x) x^l, l >= 0.
long long geometric_exact(RandomStream& rs, const Rat& x);

}  // namespace padichl
