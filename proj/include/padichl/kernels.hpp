// Exact Markov kernel probabilities and distributions for
// Hall-Littlewood dynamics: the one-variable Cauchy kernel (in both its
// product and symmetric-function forms, asserted equal), product
// convolution, and the corners kernels.
#pragma once

#include <padichl/expand.hpp>
#include <padichl/hl.hpp>
#include <padichl/hlproc_types.hpp>

#include <map>

namespace padichl {
namespace hlproc {

struct ExactDist {
    std::map<Signature, Rat> probs;
    Rat tail = 0;  // exact mass not enumerated

    Rat total() const {
        Rat s = tail;
        for (const auto& [sig, p] : probs) s += p;
        return s;
    }
};

// Pr(iota(X_1..X_n; lambda) = nu) for X_i ~ G_{x t^{i-1}}:
//   (1-x)/(1-t^n x) * prod_{j: m_j(lambda)=m_j(nu)+1} (1-t^{m_j(lambda)})
//   * prod_i (x t^{i-1})^{nu_i - lambda_i},
// equal to Q_{nu/lambda}(x) P_nu(1..t^{n-1}) /
//          (P_lambda(1..t^{n-1}) Pi(x; 1..t^{n-1})).
// Both routes are evaluated and must agree exactly; 0 unless
// lambda prec_Q nu.
Rat cauchy_kernel_prob(const Signature& lambda, const Signature& nu, const Rat& x,
                       const Rat& t);

// The two routes separately (for the identity suite).
Rat cauchy_kernel_prob_product_form(const Signature& lambda, const Signature& nu,
                                    const Rat& x, const Rat& t);
Rat cauchy_kernel_prob_symfunc_form(const Signature& lambda, const Signature& nu,
                                    const Rat& x, const Rat& t);

// Full one-step kernel distribution, enumerated until the exact tail
// mass drops below tail_bound.
ExactDist cauchy_kernel_distribution(const Signature& lambda, const Rat& x, const Rat& t,
                                     const Rat& tail_bound = Rat(1, Int(1000000000000)));

// Pr(lambda boxtimes mu = nu) = c_{lambda,mu}^nu(0,t)
//   P_nu(1..t^{n-1}) / (P_lambda(1..t^{n-1}) P_mu(1..t^{n-1})).
// Exact; sums to exactly 1.
ExactDist product_convolution_dist(const Signature& lambda, const Signature& mu,
                                   const Rat& t);

// Corners kernels for a bi-invariant matrix with singular numbers
// lambda. Row mode (drop d of n rows):
//   Pr(mu) = P_{lambda/mu}(1..t^{d-1}) P_mu(t^d..t^{n-1}) / P_lambda(1..t^{n-1});
// finite support, sums to exactly 1. Column mode (drop k of N columns):
//   Pr(nu) = Q_{nu/lambda}(1..t^{-(k-1)}) P_nu(t^{N-n}..t^{N-1}) /
//            (P_lambda(t^{N-n}..t^{N-1}) Pi(1..t^{-(k-1)}; t^{N-n}..t^{N-1}));
// enumerated until the tail is below tail_bound.
ExactDist corners_row_dist(const Signature& lambda, int d, const Rat& t);
ExactDist corners_col_dist(const Signature& lambda, int n, int N, int k, const Rat& t,
                           const Rat& tail_bound = Rat(1, Int(1000000000)));

}  // namespace hlproc
}  // namespace padichl
