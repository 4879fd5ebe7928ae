// Zero-randomness oracles: the singular-number laws are verified by
// exhaustive counting over finite matrix groups and compared with the
// exact Hall-Littlewood formulas as rational numbers. Any mismatch is an
// exact inequality, not a statistical fluctuation.
#include <doctest.h>

#include <padichl/kernels.hpp>
#include <padichl/measures.hpp>
#include <padichl/padic.hpp>

#include <map>

using namespace padichl;
using namespace padichl::padic;

namespace {

Signature sig(std::initializer_list<long long> parts) {
    return Signature(std::vector<long long>(parts));
}

Rat prob_of(const hlproc::ExactDist& law, const Signature& atom) {
    auto it = law.probs.find(atom);
    return it == law.probs.end() ? Rat(0) : it->second;
}

// all n x n matrices over Z/p^D, invertible mod p
template <typename Fn>
void for_each_gl(int n, long long p, int precision, Fn&& fn) {
    PadicRing ring(p, precision);
    long long mod = 1;
    for (int i = 0; i < precision; ++i) mod *= p;
    long long cells = static_cast<long long>(n) * n;
    long long total = 1;
    for (long long i = 0; i < cells; ++i) total *= mod;
    std::vector<Int> entries(static_cast<size_t>(cells));
    for (long long code = 0; code < total; ++code) {
        long long rest = code;
        for (long long i = 0; i < cells; ++i) {
            entries[static_cast<size_t>(i)] = rest % mod;
            rest /= mod;
        }
        PadicMatrix m(ring, n, n, entries);
        if (invertible_mod_p(m)) fn(m);
    }
}

}  // namespace

TEST_CASE("corner law by exhaustive count over GL_3(Z/4)") {
    // top-left 2x2 corner of a uniform element; D = 2 censors parts >= 2
    Rat t(1, 2);
    std::map<Signature, long long> counts;
    long long censored = 0, total = 0;
    for_each_gl(3, 2, 2, [&](const PadicMatrix& m) {
        ++total;
        auto sn = smith(corner(m, 2, 2));
        if (sn.is_censored())
            ++censored;
        else
            ++counts[sn.to_signature()];
    });
    CHECK(total == 86016);  // |GL_3(F_2)| * 2^{9}
    auto law = hlproc::corner_sn_measure(2, 2, 3, t);
    Rat below_precision = 0;
    for (auto atom : {sig({0, 0}), sig({1, 0}), sig({1, 1})}) {
        CHECK(Rat(counts[atom], total) == prob_of(law, atom));
        below_precision += prob_of(law, atom);
    }
    // a corner that vanishes mod 2 forces dependent rows, so (1,1) has
    // exactly zero mass both in the count and in the formula
    CHECK(counts[sig({1, 1})] == 0);
    CHECK(Rat(censored, total) == 1 - below_precision);
}

TEST_CASE("column-removal kernel by exhaustive count over GL_3(Z/4)") {
    // A = diag_{2x3}(p^{(1,0)}) V with V uniform; drop the last column
    Rat t(1, 2);
    PadicRing ring(2, 2);
    auto d = PadicMatrix::diagonal_powers(ring, 2, 3, sig({1, 0}));
    std::map<Signature, long long> counts;
    long long censored = 0, total = 0;
    for_each_gl(3, 2, 2, [&](const PadicMatrix& v) {
        ++total;
        auto sn = smith(corner(matmul(d, v), 2, 2));
        if (sn.is_censored())
            ++censored;
        else
            ++counts[sn.to_signature()];
    });
    auto law = hlproc::corners_col_dist(sig({1, 0}), 2, 3, 1, t);
    Rat below_precision = 0;
    for (auto atom : {sig({1, 0}), sig({1, 1})}) {
        CHECK(Rat(counts[atom], total) == prob_of(law, atom));
        below_precision += prob_of(law, atom);
    }
    CHECK(Rat(censored, total) == 1 - below_precision);
}

TEST_CASE("row-removal kernel by exhaustive count over GL_2(Z/4)") {
    // first row of U diag(2,1) with U uniform; right factor is irrelevant
    Rat t(1, 2);
    PadicRing ring(2, 2);
    auto d = PadicMatrix::diagonal_powers(ring, 2, 2, sig({1, 0}));
    std::map<Signature, long long> counts;
    long long total = 0;
    for_each_gl(2, 2, 2, [&](const PadicMatrix& u) {
        ++total;
        auto sn = smith(corner(matmul(u, d), 1, 2));
        REQUIRE(!sn.is_censored());
        ++counts[sn.to_signature()];
    });
    CHECK(total == 96);  // |GL_2(F_2)| * 2^{4}
    auto law = hlproc::corners_row_dist(sig({1, 0}), 1, t);
    CHECK(Rat(counts[sig({0})], total) == law.probs.at(sig({0})));
    CHECK(Rat(counts[sig({1})], total) == law.probs.at(sig({1})));
    CHECK(law.probs.at(sig({0})) == Rat(2, 3));
}

TEST_CASE("product convolution by exhaustive count over GL_2(Z/8)") {
    // SN(AB) for A = U1 d V1, B = U2 d V2 reduces to SN(d W d) with W
    // uniform, since V1 U2 is again uniform
    Rat t(1, 2);
    PadicRing ring(2, 3);
    auto d = PadicMatrix::diagonal_powers(ring, 2, 2, sig({1, 0}));
    std::map<Signature, long long> counts;
    long long total = 0;
    for_each_gl(2, 2, 3, [&](const PadicMatrix& w) {
        ++total;
        auto sn = smith(matmul(matmul(d, w), d));
        REQUIRE(!sn.is_censored());  // parts are at most 2 < D = 3
        ++counts[sn.to_signature()];
    });
    CHECK(total == 1536);  // |GL_2(F_2)| * 2^{8}
    auto law = hlproc::product_convolution_dist(sig({1, 0}), sig({1, 0}), t);
    REQUIRE(counts.size() == law.probs.size());
    for (const auto& [nu, c] : counts) CHECK(Rat(c, total) == law.probs.at(nu));
    CHECK(law.probs.at(sig({2, 0})) == Rat(2, 3));
    CHECK(law.probs.at(sig({1, 1})) == Rat(1, 3));
}

TEST_CASE("iid-entry law by exhaustive count over M_2(Z/4)") {
    // all 2x2 matrices mod 4 with uniform entries; parts >= 2 censored
    Rat t(1, 2);
    PadicRing ring(2, 2);
    std::map<Signature, long long> counts;
    long long censored = 0, total = 0;
    std::vector<Int> entries(4);
    for (long long code = 0; code < 256; ++code) {
        long long rest = code;
        for (int i = 0; i < 4; ++i) {
            entries[static_cast<size_t>(i)] = rest % 4;
            rest /= 4;
        }
        ++total;
        auto sn = smith(PadicMatrix(ring, 2, 2, entries));
        if (sn.is_censored())
            ++censored;
        else
            ++counts[sn.to_signature()];
    }
    auto law = hlproc::additive_sn_measure(2, 2, t);
    Rat below_precision = 0;
    for (auto atom : {sig({0, 0}), sig({1, 0}), sig({1, 1})}) {
        CHECK(Rat(counts[atom], total) == prob_of(law, atom));
        below_precision += prob_of(law, atom);
    }
    CHECK(Rat(censored, total) == 1 - below_precision);
}

TEST_CASE("joint two-step chain law by exhaustive count over GL_2(Z/4)^2") {
    // n=1 corners of two independent Haar elements of GL_2: the joint law
    // of (SN(A_1), SN(A_2 A_1)) is the Hall-Littlewood process with one
    // geometric variable per step,
    //   Pr(a, b) = t^a (1-t)^{1(a>0)} t^{b-a} (1-t)^{1(b>a)} / (1+t)^2.
    Rat t(1, 2);
    std::vector<Int> corners;
    for_each_gl(2, 2, 2, [&](const PadicMatrix& m) { corners.push_back(m.entry(0, 0)); });
    REQUIRE(corners.size() == 96);
    std::map<std::pair<long long, long long>, long long> joint;
    long long censored = 0, total = 0;
    PadicRing ring(2, 2);
    for (const Int& u1 : corners) {
        for (const Int& u2 : corners) {
            ++total;
            PadicMatrix a1(ring, 1, 1, {u1});
            PadicMatrix prod(ring, 1, 1, {u2 * u1});
            auto s1 = smith(a1), s2 = smith(prod);
            if (s1.is_censored() || s2.is_censored()) {
                ++censored;
                continue;
            }
            ++joint[{s1.to_signature()[0], s2.to_signature()[0]}];
        }
    }
    auto predicted = [&](long long a, long long b) {
        Rat r = rat_pow(t, a) * rat_pow(t, b - a) / ((1 + t) * (1 + t));
        if (a > 0) r *= 1 - t;
        if (b > a) r *= 1 - t;
        return r;
    };
    Rat seen = 0;
    for (auto [a, b] : {std::pair<long long, long long>{0, 0}, {0, 1}, {1, 1}}) {
        CHECK(Rat(joint[{a, b}], total) == predicted(a, b));
        seen += predicted(a, b);
    }
    CHECK(Rat(censored, total) == 1 - seen);
}
