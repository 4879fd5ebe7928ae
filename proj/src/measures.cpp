#include <padichl/measures.hpp>

#include <functional>

namespace padichl {
namespace hlproc {

using symfunc::principal_p;
using symfunc::principal_q;

namespace {

// enumerate nonnegative signatures of length n with largest part == top
template <typename Fn>
void for_each_sig_with_top(int n, long long top, Fn&& fn) {
    std::vector<long long> parts(static_cast<size_t>(n));
    parts[0] = top;
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            fn(Signature(parts));
            return;
        }
        for (long long v = parts[static_cast<size_t>(i - 1)]; v >= 0; --v) {
            parts[static_cast<size_t>(i)] = v;
            rec(i + 1);
        }
    };
    if (n == 0)
        fn(Signature());
    else
        rec(1);
}

template <typename Atom>
ExactDist enumerate_measure(int n, const Rat& tail_bound, Atom&& atom) {
    ExactDist dist;
    Rat total = 0;
    if (n == 0) {
        dist.probs.emplace(Signature(), Rat(1));
        return dist;
    }
    for (long long top = 0;; ++top) {
        for_each_sig_with_top(n, top, [&](const Signature& lam) {
            Rat p = atom(lam);
            if (p != 0) {
                dist.probs.emplace(lam, p);
                total += p;
            }
        });
        if (1 - total < tail_bound) break;
        if (top > 10000)
            throw resource_error("sn measure: support enumeration ran away");
    }
    dist.tail = 1 - total;
    return dist;
}

}  // namespace

ExactDist corner_sn_measure(int n, int m, int N, const Rat& t, const Rat& tail_bound) {
    if (!(1 <= n && n <= m && m <= N))
        throw argument_error("corner_sn_measure: need 1 <= n <= m <= N");
    Rat x_q = rat_pow(t, m - n + 1);
    long long q_vars = N - m;
    Rat norm = symfunc::cauchy_kernel_hl(symfunc::geometric_values(Rat(1), t, n),
                                         symfunc::geometric_values(x_q, t, q_vars), t);
    return enumerate_measure(n, tail_bound, [&](const Signature& lam) {
        return principal_p(lam, Rat(1), t) * principal_q(lam, x_q, q_vars, t) / norm;
    });
}

Rat additive_sn_atom(const Signature& lambda, int m, const Rat& t) {
    int n = lambda.length();
    if (!(1 <= n && n <= m)) throw argument_error("additive_sn_atom: need 1 <= n <= m");
    if (!lambda.nonnegative()) return Rat(0);
    // 1/Pi = prod_{i=1}^{n} (1 - t^{m-n+i})
    Rat inv_norm = 1;
    for (int i = 1; i <= n; ++i) inv_norm *= 1 - rat_pow(t, m - n + i);
    return principal_p(lambda, Rat(1), t) *
           principal_q(lambda, rat_pow(t, m - n + 1), symfunc::kInfiniteVars, t) * inv_norm;
}

ExactDist additive_sn_measure(int n, int m, const Rat& t, const Rat& tail_bound) {
    if (!(1 <= n && n <= m)) throw argument_error("additive_sn_measure: need 1 <= n <= m");
    return enumerate_measure(n, tail_bound,
                             [&](const Signature& lam) { return additive_sn_atom(lam, m, t); });
}

}  // namespace hlproc
}  // namespace padichl
