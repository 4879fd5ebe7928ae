// Finite-precision p-adic matrix algebra: arithmetic mod p^D, Smith
// normal form with precision censoring, Haar sampling of GL_N and of
// iid additive-Haar matrices, corners and product chains.
//
// Entries live in Z/p^D. A fixed-width uint64 path is used whenever p^D
// fits; otherwise entries are arbitrary-precision. Parts of the Smith
// form below D are exact singular numbers of any p-adic lift; parts that
// vanish mod p^D are reported as censored (">= D").
#pragma once

#include <padichl/rng.hpp>
#include <padichl/signature.hpp>
#include <padichl/trajectory.hpp>

#include <variant>
#include <vector>

namespace padichl {
namespace padic {

bool is_prime(long long p);

struct PadicRing {
    long long p = 2;
    int precision = 1;  // D
    Int modulus = 2;    // p^D
    bool fits64 = false;
    uint64_t modulus64 = 0;

    PadicRing() = default;
    PadicRing(long long p_, int precision_);

    bool operator==(const PadicRing& o) const {
        return p == o.p && precision == o.precision;
    }
};

class PadicMatrix {
public:
    PadicMatrix(const PadicRing& ring, int rows, int cols);  // zero matrix
    PadicMatrix(const PadicRing& ring, int rows, int cols, std::vector<Int> entries);

    static PadicMatrix identity(const PadicRing& ring, int n);
    static PadicMatrix diagonal_powers(const PadicRing& ring, int rows, int cols,
                                       const Signature& exponents);

    const PadicRing& ring() const { return ring_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int entry(int i, int j) const;
    void set_entry(int i, int j, const Int& value);

    bool uses_fixed_width() const { return std::holds_alternative<std::vector<uint64_t>>(e_); }

    friend PadicMatrix matmul(const PadicMatrix& a, const PadicMatrix& b);
    friend PadicMatrix corner(const PadicMatrix& a, int nrows, int ncols);
    friend ExtendedSignature smith(const PadicMatrix& a);
    friend bool invertible_mod_p(const PadicMatrix& a);
    friend PadicMatrix haar_additive(int rows, int cols, long long p, int precision,
                                     RandomStream& rng);

private:
    PadicRing ring_;
    int rows_, cols_;
    std::variant<std::vector<uint64_t>, std::vector<Int>> e_;
};

// Top-left nrows x ncols submatrix.
PadicMatrix corner(const PadicMatrix& a, int nrows, int ncols);

PadicMatrix matmul(const PadicMatrix& a, const PadicMatrix& b);

// Singular numbers mod p^D: pivot on a minimum-valuation entry
// (deterministic (row,col) tie-break), clear its row and column by unit
// multiplications, recurse. Entries annihilated mod p^D give censored
// parts.
ExtendedSignature smith(const PadicMatrix& a);

bool invertible_mod_p(const PadicMatrix& a);

// Uniform over GL_N(Z/p^D): uniform entries rejected until invertible
// mod p. Acceptance probability prod_{i=1}^{N} (1 - p^{-i}).
PadicMatrix haar_gl(int n, long long p, int precision, RandomStream& rng);

// iid entries uniform mod p^D (additive Haar measure pushforward)
PadicMatrix haar_additive(int rows, int cols, long long p, int precision,
                          RandomStream& rng);

inline constexpr long long kInfiniteN = -1;

struct ChainOptions {
    int precision = 0;   // 0 = auto
    int max_retries = 3;
    bool identity_test_hook = false;  // every factor is the identity
};

// Trajectory SN(A_1), SN(A_2 A_1), ..., SN(A_k...A_1) where A_j is the
// n x n corner of a Haar element of GL_{N_j} (or has iid additive-Haar
// entries when N_j = kInfiniteN). Ns is cycled when shorter than k.
hlproc::Trajectory sn_product_chain(int n, const std::vector<long long>& Ns, long long p,
                                    int k, RandomStream& rng, ChainOptions opts = {});

}  // namespace padic
}  // namespace padichl
