#include <padichl/padic.hpp>

#include <padichl/asym.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace padichl {
namespace padic {

namespace {

constexpr int kHaarRejectionCap = 1'000'000;

long long modpow_ll(long long base, long long exp, long long mod) {
    long long r = 1 % mod;
    base %= mod;
    while (exp > 0) {
        if (exp & 1) r = static_cast<long long>((__int128)r * base % mod);
        base = static_cast<long long>((__int128)base * base % mod);
        exp >>= 1;
    }
    return r;
}

bool miller_rabin(long long n, long long a) {
    if (n % a == 0) return n == a;
    long long d = n - 1;
    int s = 0;
    while (d % 2 == 0) d /= 2, ++s;
    long long x = modpow_ll(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 0; i < s - 1; ++i) {
        x = static_cast<long long>((__int128)x * x % n);
        if (x == n - 1) return true;
    }
    return false;
}

// unit inverse mod p^D by lifting the inverse mod p
Int inverse_mod_prime_power(const Int& u, const PadicRing& ring) {
    long long u0 = static_cast<long long>(u % ring.p);
    long long inv0 = modpow_ll(u0, ring.p - 2, ring.p);
    Int y = inv0;
    Int m = ring.p;
    while (m < ring.modulus) {
        m = m * m;
        if (m > ring.modulus) m = ring.modulus;
        y = y * (2 - u * y) % m;
        if (y < 0) y += m;
    }
    return y;
}

template <typename T>
struct Elem;

template <>
struct Elem<uint64_t> {
    static uint64_t from_int(const Int& v, const PadicRing& ring) {
        Int r = v % ring.modulus;
        if (r < 0) r += ring.modulus;
        return r.convert_to<uint64_t>();
    }
    static Int to_int(uint64_t v) { return Int(v); }
    static uint64_t mul(uint64_t a, uint64_t b, const PadicRing& ring) {
        return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % ring.modulus64);
    }
    static uint64_t sub(uint64_t a, uint64_t b, const PadicRing& ring) {
        return a >= b ? a - b : a + (ring.modulus64 - b);
    }
    static uint64_t add(uint64_t a, uint64_t b, const PadicRing& ring) {
        uint64_t s = a + b;
        return s >= ring.modulus64 ? s - ring.modulus64 : s;
    }
    static int valuation(uint64_t v, const PadicRing& ring) {
        if (v == 0) return ring.precision;
        int val = 0;
        uint64_t p = static_cast<uint64_t>(ring.p);
        while (v % p == 0) {
            v /= p;
            ++val;
        }
        return val;
    }
    static uint64_t shift_down(uint64_t v, int val, const PadicRing& ring) {
        uint64_t p = static_cast<uint64_t>(ring.p);
        for (int i = 0; i < val; ++i) v /= p;
        return v;
    }
    static uint64_t sample(RandomStream& rng, const PadicRing& ring) {
        return rng.uniform_below(ring.modulus64);
    }
};

template <>
struct Elem<Int> {
    static Int from_int(const Int& v, const PadicRing& ring) {
        Int r = v % ring.modulus;
        if (r < 0) r += ring.modulus;
        return r;
    }
    static Int to_int(const Int& v) { return v; }
    static Int mul(const Int& a, const Int& b, const PadicRing& ring) {
        return a * b % ring.modulus;
    }
    static Int sub(const Int& a, const Int& b, const PadicRing& ring) {
        Int r = a - b;
        if (r < 0) r += ring.modulus;
        return r;
    }
    static Int add(const Int& a, const Int& b, const PadicRing& ring) {
        Int r = a + b;
        if (r >= ring.modulus) r -= ring.modulus;
        return r;
    }
    static int valuation(Int v, const PadicRing& ring) {
        if (v == 0) return ring.precision;
        int val = 0;
        while (v % ring.p == 0) {
            v /= ring.p;
            ++val;
        }
        return val;
    }
    static Int shift_down(Int v, int val, const PadicRing& ring) {
        return v / int_pow(Int(ring.p), val);
    }
    static Int sample(RandomStream& rng, const PadicRing& ring) {
        size_t bits = mpz_sizeinbase(ring.modulus.backend().data(), 2);
        size_t words = (bits + 63) / 64;
        for (;;) {
            Int v = 0;
            for (size_t w = 0; w < words; ++w) v = (v << 64) | Int(rng.next_u64());
            v >>= (words * 64 - bits);
            if (v < ring.modulus) return v;
        }
    }
};

template <typename T>
ExtendedSignature smith_impl(std::vector<T> e, int rows, int cols, const PadicRing& ring) {
    auto at = [&](int i, int j) -> T& {
        return e[static_cast<size_t>(i) * static_cast<size_t>(cols) + static_cast<size_t>(j)];
    };
    int steps = std::min(rows, cols);
    std::vector<long long> vals;
    int censored = 0;
    for (int s = 0; s < steps; ++s) {
        int best_v = ring.precision, bi = -1, bj = -1;
        for (int i = s; i < rows && best_v > 0; ++i) {
            for (int j = s; j < cols; ++j) {
                int v = Elem<T>::valuation(at(i, j), ring);
                if (v < best_v) {
                    best_v = v;
                    bi = i;
                    bj = j;
                    if (v == 0) break;
                }
            }
        }
        if (bi < 0) {  // everything left vanishes mod p^D
            censored = steps - s;
            break;
        }
        if (bi != s)
            for (int j = s; j < cols; ++j) std::swap(at(s, j), at(bi, j));
        if (bj != s)
            for (int i = s; i < rows; ++i) std::swap(at(i, s), at(i, bj));

        T unit = Elem<T>::shift_down(at(s, s), best_v, ring);
        Int uinv_int = inverse_mod_prime_power(Elem<T>::to_int(unit), ring);
        T uinv = Elem<T>::from_int(uinv_int, ring);

        for (int i = s + 1; i < rows; ++i) {
            if (Elem<T>::valuation(at(i, s), ring) >= ring.precision) continue;
            T m = Elem<T>::mul(Elem<T>::shift_down(at(i, s), best_v, ring), uinv, ring);
            for (int j = s; j < cols; ++j)
                at(i, j) = Elem<T>::sub(at(i, j), Elem<T>::mul(m, at(s, j), ring), ring);
        }
        // rows below s now vanish in column s, so clearing row s only
        // changes row s itself
        for (int j = s + 1; j < cols; ++j) at(s, j) = T(0);
        vals.push_back(best_v);
    }
    std::vector<long long> finite(vals.rbegin(), vals.rend());
    return ExtendedSignature(censored, std::move(finite), ring.precision);
}

}  // namespace

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (p == a) return true;
        if (!miller_rabin(p, a)) return false;
    }
    return true;
}

PadicRing::PadicRing(long long p_, int precision_) : p(p_), precision(precision_) {
    if (!is_prime(p)) throw argument_error("PadicRing: p must be prime");
    if (precision < 1) throw argument_error("PadicRing: precision must be >= 1");
    modulus = int_pow(Int(p), precision);
    fits64 = modulus <= (Int(1) << 62);
    modulus64 = fits64 ? modulus.convert_to<uint64_t>() : 0;
}

PadicMatrix::PadicMatrix(const PadicRing& ring, int rows, int cols)
    : ring_(ring), rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1) throw argument_error("PadicMatrix: bad dimensions");
    size_t total = static_cast<size_t>(rows) * static_cast<size_t>(cols);
    if (ring_.fits64)
        e_ = std::vector<uint64_t>(total, 0);
    else
        e_ = std::vector<Int>(total, Int(0));
}

PadicMatrix::PadicMatrix(const PadicRing& ring, int rows, int cols,
                         std::vector<Int> entries)
    : PadicMatrix(ring, rows, cols) {
    if (entries.size() != static_cast<size_t>(rows) * static_cast<size_t>(cols))
        throw argument_error("PadicMatrix: wrong entry count");
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            set_entry(i, j, entries[static_cast<size_t>(i) * static_cast<size_t>(cols) +
                                    static_cast<size_t>(j)]);
}

PadicMatrix PadicMatrix::identity(const PadicRing& ring, int n) {
    PadicMatrix m(ring, n, n);
    for (int i = 0; i < n; ++i) m.set_entry(i, i, Int(1));
    return m;
}

PadicMatrix PadicMatrix::diagonal_powers(const PadicRing& ring, int rows, int cols,
                                         const Signature& exponents) {
    if (exponents.length() != std::min(rows, cols))
        throw argument_error("diagonal_powers: wrong signature length");
    if (!exponents.nonnegative())
        throw argument_error("diagonal_powers: exponents must be nonnegative");
    PadicMatrix m(ring, rows, cols);
    for (int i = 0; i < exponents.length(); ++i)
        m.set_entry(i, i, int_pow(Int(ring.p), exponents[i]));
    return m;
}

Int PadicMatrix::entry(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        throw argument_error("PadicMatrix: index out of range");
    size_t idx = static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j);
    if (auto* v = std::get_if<std::vector<uint64_t>>(&e_)) return Int((*v)[idx]);
    return std::get<std::vector<Int>>(e_)[idx];
}

void PadicMatrix::set_entry(int i, int j, const Int& value) {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        throw argument_error("PadicMatrix: index out of range");
    size_t idx = static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j);
    if (auto* v = std::get_if<std::vector<uint64_t>>(&e_))
        (*v)[idx] = Elem<uint64_t>::from_int(value, ring_);
    else
        std::get<std::vector<Int>>(e_)[idx] = Elem<Int>::from_int(value, ring_);
}

PadicMatrix corner(const PadicMatrix& a, int nrows, int ncols) {
    if (nrows < 1 || nrows > a.rows_ || ncols < 1 || ncols > a.cols_)
        throw argument_error("corner: dimensions out of range");
    PadicMatrix out(a.ring_, nrows, ncols);
    std::visit(
        [&](const auto& src) {
            auto& dst = std::get<std::decay_t<decltype(src)>>(out.e_);
            for (int i = 0; i < nrows; ++i)
                for (int j = 0; j < ncols; ++j)
                    dst[static_cast<size_t>(i) * static_cast<size_t>(ncols) +
                        static_cast<size_t>(j)] =
                        src[static_cast<size_t>(i) * static_cast<size_t>(a.cols_) +
                            static_cast<size_t>(j)];
        },
        a.e_);
    return out;
}

PadicMatrix matmul(const PadicMatrix& a, const PadicMatrix& b) {
    if (!(a.ring_ == b.ring_))
        throw argument_error("matmul: prime/precision mismatch");
    if (a.cols_ != b.rows_) throw argument_error("matmul: dimension mismatch");
    PadicMatrix out(a.ring_, a.rows_, b.cols_);
    std::visit(
        [&](const auto& ea) {
            using V = std::decay_t<decltype(ea)>;
            using T = typename V::value_type;
            const auto& eb = std::get<V>(b.e_);
            auto& ec = std::get<V>(out.e_);
            int n = a.rows_, m = a.cols_, r = b.cols_;
            for (int i = 0; i < n; ++i) {
                for (int kk = 0; kk < m; ++kk) {
                    T aik = ea[static_cast<size_t>(i) * static_cast<size_t>(m) +
                               static_cast<size_t>(kk)];
                    if (aik == T(0)) continue;
                    for (int j = 0; j < r; ++j) {
                        size_t cidx = static_cast<size_t>(i) * static_cast<size_t>(r) +
                                      static_cast<size_t>(j);
                        ec[cidx] = Elem<T>::add(
                            ec[cidx],
                            Elem<T>::mul(aik,
                                         eb[static_cast<size_t>(kk) * static_cast<size_t>(r) +
                                            static_cast<size_t>(j)],
                                         a.ring_),
                            a.ring_);
                    }
                }
            }
        },
        a.e_);
    return out;
}

ExtendedSignature smith(const PadicMatrix& a) {
    return std::visit(
        [&](const auto& e) { return smith_impl(e, a.rows_, a.cols_, a.ring_); }, a.e_);
}

bool invertible_mod_p(const PadicMatrix& a) {
    if (a.rows_ != a.cols_) throw argument_error("invertible_mod_p: matrix not square");
    int n = a.rows_;
    long long p = a.ring_.p;
    std::vector<long long> m(static_cast<size_t>(n) * static_cast<size_t>(n));
    std::visit(
        [&](const auto& e) {
            for (size_t idx = 0; idx < m.size(); ++idx)
                m[idx] = static_cast<long long>(Elem<std::decay_t<decltype(e[0])>>::to_int(
                                                    e[idx]) %
                                                p);
        },
        a.e_);
    auto at = [&](int i, int j) -> long long& {
        return m[static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(j)];
    };
    for (int s = 0; s < n; ++s) {
        int piv = -1;
        for (int i = s; i < n; ++i)
            if (at(i, s) % p != 0) {
                piv = i;
                break;
            }
        if (piv < 0) return false;
        if (piv != s)
            for (int j = s; j < n; ++j) std::swap(at(s, j), at(piv, j));
        long long inv = modpow_ll(at(s, s) % p, p - 2, p);
        for (int i = s + 1; i < n; ++i) {
            long long f = (__int128)at(i, s) * inv % p;
            if (f == 0) continue;
            for (int j = s; j < n; ++j)
                at(i, j) = static_cast<long long>(
                    ((at(i, j) - (__int128)f * at(s, j)) % p + p) % p);
        }
    }
    return true;
}

PadicMatrix haar_additive(int rows, int cols, long long p, int precision,
                          RandomStream& rng) {
    PadicRing ring(p, precision);
    PadicMatrix out(ring, rows, cols);
    std::visit(
        [&](auto& e) {
            using T = typename std::decay_t<decltype(e)>::value_type;
            for (auto& v : e) v = Elem<T>::sample(rng, ring);
        },
        out.e_);
    return out;
}

PadicMatrix haar_gl(int n, long long p, int precision, RandomStream& rng) {
    for (int attempt = 0; attempt < kHaarRejectionCap; ++attempt) {
        PadicMatrix m = haar_additive(n, n, p, precision, rng);
        if (invertible_mod_p(m)) return m;
    }
    throw internal_error("haar_gl: rejection cap reached");
}

namespace {

PadicMatrix sample_chain_factor(int n, long long big_n, long long p, int precision,
                                RandomStream& rng, bool identity_hook) {
    PadicRing ring(p, precision);
    if (identity_hook) return PadicMatrix::identity(ring, n);
    if (big_n == kInfiniteN) return haar_additive(n, n, p, precision, rng);
    return corner(haar_gl(static_cast<int>(big_n), p, precision, rng), n, n);
}

int auto_precision(int n, const std::vector<long long>& Ns, long long p, int k) {
    hlproc::Specialization spec;
    spec.t = Rat(1, p);
    for (long long N : Ns) spec.vars.push_back(hlproc::matrix_step_variable(n, N, spec.t));
    double center = to_double(asym::lln_center(1, spec, k));
    double d = center + 8.0 * std::sqrt(static_cast<double>(k) + 1.0) + 8.0;
    return static_cast<int>(std::ceil(d));
}

}  // namespace

hlproc::Trajectory sn_product_chain(int n, const std::vector<long long>& Ns, long long p,
                                    int k, RandomStream& rng, ChainOptions opts) {
    if (n < 1) throw argument_error("sn_product_chain: n must be >= 1");
    if (k < 1) throw argument_error("sn_product_chain: k must be >= 1");
    if (Ns.empty()) throw argument_error("sn_product_chain: empty N list");
    for (long long N : Ns)
        if (N != kInfiniteN && N <= n)
            throw argument_error("sn_product_chain: need N > n");

    bool auto_d = opts.precision <= 0;
    int precision = auto_d ? auto_precision(n, Ns, p, k) : opts.precision;

    int attempts = auto_d ? opts.max_retries + 1 : 1;
    for (int attempt = 0; attempt < attempts; ++attempt) {
        hlproc::Trajectory traj;
        traj.n = n;
        traj.seed = rng.seed();
        traj.stream = rng.stream();
        traj.source = "matrix";
        {
            std::ostringstream os;
            os << "p=" << p << " D=" << precision << " n=" << n << " Ns=";
            for (size_t i = 0; i < Ns.size(); ++i) {
                if (i) os << ",";
                if (Ns[i] == kInfiniteN)
                    os << "inf";
                else
                    os << Ns[i];
            }
            traj.spec_desc = os.str();
        }
        traj.steps.push_back(Signature::zeros(n));

        PadicRing ring(p, precision);
        PadicMatrix product = PadicMatrix::identity(ring, n);
        bool censored = false;
        for (int j = 0; j < k; ++j) {
            long long big_n = Ns[static_cast<size_t>(j) % Ns.size()];
            PadicMatrix a = sample_chain_factor(n, big_n, p, precision, rng,
                                                opts.identity_test_hook);
            product = matmul(a, product);
            ExtendedSignature sn = smith(product);
            if (sn.is_censored()) {
                censored = true;
                break;
            }
            traj.steps.push_back(sn.to_signature());
        }
        if (!censored) return traj;
        if (!auto_d) {
            traj.censored = true;
            return traj;
        }
        precision *= 2;
    }
    throw resource_error("sn_product_chain: still censored after precision retries");
}

}  // namespace padic
}  // namespace padichl
