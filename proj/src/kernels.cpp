#include <padichl/kernels.hpp>

#include <functional>

namespace padichl {
namespace hlproc {

using symfunc::hl_skew_p;
using symfunc::hl_skew_q;
using symfunc::principal_p;
using symfunc::psi_step_hl;
using symfunc::phi_step_hl;

Rat cauchy_kernel_prob_product_form(const Signature& lambda, const Signature& nu,
                                    const Rat& x, const Rat& t) {
    int n = lambda.length();
    if (nu.length() != n) throw argument_error("cauchy_kernel_prob: length mismatch");
    if (!interlaces_q(lambda, nu)) return Rat(0);
    Rat r = (1 - x) / (1 - rat_pow(t, n) * x);
    // multiplicity product indexed by the starting signature: values j
    // with m_j(lambda) = m_j(nu) + 1 contribute (1 - t^{m_j(lambda)}).
    // Note this differs from the skew-Q branching convention, which
    // indexes by the new signature; the two routes still agree.
    auto nu_mult = nu.multiplicities();
    for (const auto& [value, m_old] : lambda.multiplicities()) {
        auto it = nu_mult.find(value);
        int m_new = it == nu_mult.end() ? 0 : it->second;
        if (m_old == m_new + 1) r *= 1 - rat_pow(t, m_old);
    }
    Rat xt = x;
    for (int i = 0; i < n; ++i) {
        r *= rat_pow(xt, nu[i] - lambda[i]);
        xt *= t;
    }
    return r;
}

Rat cauchy_kernel_prob_symfunc_form(const Signature& lambda, const Signature& nu,
                                    const Rat& x, const Rat& t) {
    int n = lambda.length();
    if (nu.length() != n) throw argument_error("cauchy_kernel_prob: length mismatch");
    // Pi(x; 1, t, ..., t^{n-1}) telescopes to (1 - t^n x)/(1 - x)
    Rat kernel = (1 - rat_pow(t, n) * x) / (1 - x);
    return hl_skew_q(nu, lambda, {x}, t) * principal_p(nu, Rat(1), t) /
           (principal_p(lambda, Rat(1), t) * kernel);
}

Rat cauchy_kernel_prob(const Signature& lambda, const Signature& nu, const Rat& x,
                       const Rat& t) {
    if (!(x > 0 && x < 1)) throw argument_error("cauchy_kernel_prob: need 0 < x < 1");
    Rat a = cauchy_kernel_prob_product_form(lambda, nu, x, t);
    Rat b = cauchy_kernel_prob_symfunc_form(lambda, nu, x, t);
    if (a != b) throw internal_error("cauchy_kernel_prob: product and symmetric-function forms disagree");
    return a;
}

namespace {

// enumerate nu with lambda prec_Q nu and nu_1 = lambda_1 + g
template <typename Fn>
void for_each_q_successor_at_gap(const Signature& lambda, long long g, Fn&& fn) {
    int n = lambda.length();
    std::vector<long long> nu(static_cast<size_t>(n));
    nu[0] = lambda[0] + g;
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            fn(Signature(nu));
            return;
        }
        // nu_i in [lambda_i, lambda_{i-1}], also nu_i <= nu_{i-1}
        long long hi = std::min(lambda[i - 1], nu[static_cast<size_t>(i - 1)]);
        for (long long v = hi; v >= lambda[i]; --v) {
            nu[static_cast<size_t>(i)] = v;
            rec(i + 1);
        }
    };
    rec(1);
}

}  // namespace

ExactDist cauchy_kernel_distribution(const Signature& lambda, const Rat& x, const Rat& t,
                                     const Rat& tail_bound) {
    if (!(x > 0 && x < 1)) throw argument_error("cauchy_kernel_distribution: need 0 < x < 1");
    ExactDist dist;
    Rat total = 0;
    for (long long g = 0;; ++g) {
        for_each_q_successor_at_gap(lambda, g, [&](const Signature& nu) {
            Rat p = cauchy_kernel_prob_product_form(lambda, nu, x, t);
            if (p != 0) {
                dist.probs.emplace(nu, p);
                total += p;
            }
        });
        if (1 - total < tail_bound) break;
        if (g > 100000)
            throw resource_error("cauchy_kernel_distribution: support enumeration ran away");
    }
    dist.tail = 1 - total;
    return dist;
}

ExactDist product_convolution_dist(const Signature& lambda, const Signature& mu,
                                   const Rat& t) {
    if (lambda.length() != mu.length())
        throw argument_error("product_convolution_dist: length mismatch");
    int n = lambda.length();
    auto coeffs = symfunc::structure_coeffs(lambda, mu, Rat(0), t);
    Rat p_lambda = principal_p(lambda, Rat(1), t);
    Rat p_mu = principal_p(mu, Rat(1), t);
    ExactDist dist;
    Rat total = 0;
    for (const auto& [nu, c] : coeffs) {
        Rat p = c * principal_p(nu, Rat(1), t) / (p_lambda * p_mu);
        if (p != 0) {
            dist.probs.emplace(nu, p);
            total += p;
        }
    }
    if (total != 1)
        throw internal_error("product_convolution_dist: probabilities do not sum to 1");
    (void)n;
    return dist;
}

ExactDist corners_row_dist(const Signature& lambda, int d, const Rat& t) {
    int n = lambda.length();
    if (d < 0 || d > n) throw argument_error("corners_row_dist: need 0 <= d <= n");
    ExactDist dist;
    if (d == 0) {
        dist.probs.emplace(lambda, Rat(1));
        return dist;
    }
    Rat denom = principal_p(lambda, Rat(1), t);
    auto values = symfunc::geometric_values(Rat(1), t, d);
    // mu_i ranges over [lambda_{i+d}, lambda_i]
    int m = n - d;
    std::vector<long long> mu(static_cast<size_t>(m));
    Rat total = 0;
    std::function<void(int)> rec = [&](int i) {
        if (i == m) {
            Signature musig(mu);
            Rat p = hl_skew_p(lambda, musig, values, t) *
                    principal_p(musig, rat_pow(t, d), t) / denom;
            if (p != 0) {
                dist.probs.emplace(musig, p);
                total += p;
            }
            return;
        }
        long long hi = lambda[i];
        if (i > 0) hi = std::min(hi, mu[static_cast<size_t>(i - 1)]);
        for (long long v = hi; v >= lambda[i + d]; --v) {
            mu[static_cast<size_t>(i)] = v;
            rec(i + 1);
        }
    };
    if (m == 0) {
        dist.probs.emplace(Signature(), Rat(1));
        return dist;
    }
    rec(0);
    if (total != 1)
        throw internal_error("corners_row_dist: probabilities do not sum to 1");
    return dist;
}

ExactDist corners_col_dist(const Signature& lambda, int n, int N, int k, const Rat& t,
                           const Rat& tail_bound) {
    if (lambda.length() != n) throw argument_error("corners_col_dist: bad length");
    if (!(1 <= n && n <= N)) throw argument_error("corners_col_dist: need 1 <= n <= N");
    if (k < 0 || k > N - n)
        throw argument_error("corners_col_dist: need 0 <= k <= N - n");
    ExactDist dist;
    if (k == 0) {
        dist.probs.emplace(lambda, Rat(1));
        return dist;
    }
    // Q specialization values 1, t^{-1}, ..., t^{-(k-1)}
    std::vector<Rat> qvalues;
    for (int j = 0; j < k; ++j) qvalues.push_back(rat_pow(t, -j));
    std::vector<Rat> pvalues = symfunc::geometric_values(rat_pow(t, N - n), t, n);
    Rat norm = principal_p(lambda, rat_pow(t, N - n), t) *
               symfunc::cauchy_kernel_hl(qvalues, pvalues, t);
    Rat total = 0;
    // nu >= lambda coordinatewise; after k interlacing steps
    // nu_i <= lambda_{max(i-k, 1)}, so only nu_1..nu_k are unbounded
    long long cap = 4;
    for (;;) {
        dist.probs.clear();
        total = 0;
        std::vector<long long> nu(static_cast<size_t>(n));
        std::function<void(int)> rec = [&](int i) {
            if (i == n) {
                Signature nusig(nu);
                Rat p = hl_skew_q(nusig, lambda, qvalues, t) *
                        principal_p(nusig, rat_pow(t, N - n), t) / norm;
                if (p != 0) {
                    dist.probs.emplace(nusig, p);
                    total += p;
                }
                return;
            }
            long long hi = i >= k ? lambda[i - k] : lambda[0] + cap;
            if (i > 0) hi = std::min(hi, nu[static_cast<size_t>(i - 1)]);
            for (long long v = hi; v >= lambda[i]; --v) {
                nu[static_cast<size_t>(i)] = v;
                rec(i + 1);
            }
        };
        rec(0);
        if (1 - total < tail_bound) break;
        cap *= 2;
        if (cap > 100000)
            throw resource_error("corners_col_dist: support enumeration ran away");
    }
    dist.tail = 1 - total;
    return dist;
}

}  // namespace hlproc
}  // namespace padichl
