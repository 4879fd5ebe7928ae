#include <padichl/rng.hpp>

namespace padichl {

namespace {

constexpr uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr uint32_t kWeyl0 = 0x9E3779B9u;
constexpr uint32_t kWeyl1 = 0xBB67AE85u;

inline void philox_round(std::array<uint32_t, 4>& c, const std::array<uint32_t, 2>& k) {
    uint64_t p0 = static_cast<uint64_t>(kPhiloxM0) * c[0];
    uint64_t p1 = static_cast<uint64_t>(kPhiloxM1) * c[2];
    uint32_t hi0 = static_cast<uint32_t>(p0 >> 32), lo0 = static_cast<uint32_t>(p0);
    uint32_t hi1 = static_cast<uint32_t>(p1 >> 32), lo1 = static_cast<uint32_t>(p1);
    c = {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
}

std::array<uint32_t, 4> philox10(std::array<uint32_t, 4> ctr, std::array<uint32_t, 2> key) {
    for (int r = 0; r < 10; ++r) {
        philox_round(ctr, key);
        key[0] += kWeyl0;
        key[1] += kWeyl1;
    }
    return ctr;
}

}  // namespace

RandomStream::RandomStream(uint64_t seed, uint64_t stream)
    : seed_(seed), stream_(stream) {
    key_ = {static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32)};
    // counter words 2,3 carry the stream id; words 0,1 count blocks
    ctr_ = {0, 0, static_cast<uint32_t>(stream), static_cast<uint32_t>(stream >> 32)};
}

void RandomStream::refill() {
    buf_ = philox10(ctr_, key_);
    buf_pos_ = 0;
    if (++ctr_[0] == 0) ++ctr_[1];
}

uint32_t RandomStream::next_u32() {
    if (buf_pos_ >= 4) refill();
    return buf_[buf_pos_++];
}

uint64_t RandomStream::next_u64() {
    uint64_t hi = next_u32();
    return (hi << 32) | next_u32();
}

int RandomStream::next_bit() {
    if (bits_left_ == 0) {
        bit_buf_ = next_u64();
        bits_left_ = 64;
    }
    int b = static_cast<int>(bit_buf_ & 1u);
    bit_buf_ >>= 1;
    --bits_left_;
    return b;
}

uint64_t RandomStream::uniform_below(uint64_t bound) {
    if (bound == 0) throw argument_error("uniform_below: bound must be positive");
    uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    for (;;) {
        uint64_t v = next_u64();
        if (v < limit) return v % bound;
    }
}

double RandomStream::next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

bool LazyUniform::less_than(const Rat& s) {
    if (s <= 0) return false;
    if (s >= 1) return true;
    const Int& sn = numerator(s);
    const Int& sd = denominator(s);
    for (;;) {
        // interval [num/2^bits, (num+1)/2^bits)
        Int scale = Int(1) << static_cast<unsigned>(bits_);
        if ((num_ + 1) * sd <= sn * scale) return true;
        if (num_ * sd >= sn * scale) return false;
        num_ = (num_ << 1) + rs_->next_bit();
        ++bits_;
    }
}

bool bernoulli_exact(RandomStream& rs, const Rat& r) {
    LazyUniform u(rs);
    return u.less_than(r);
}

long long geometric_exact(RandomStream& rs, const Rat& x) {
    if (!(x >= 0 && x < 1)) throw argument_error("geometric_exact: need 0 <= x < 1");
    long long n = 0;
    while (bernoulli_exact(rs, x)) ++n;
    return n;
}

}  // namespace padichl
