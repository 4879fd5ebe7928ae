// q-Pochhammer symbols and the Cauchy kernel Pi_{(q,t)}.
#pragma once

#include <padichl/rational.hpp>

#include <vector>

namespace padichl {
namespace symfunc {

// (a;q)_n = (1-a)(1-aq)...(1-aq^{n-1}), exact.
Rat pochhammer(const Rat& a, const Rat& q, long long n);

struct InfProduct {
    double value;
    double tail_bound;  // multiplicative: true value in [value*(1-tb), value*(1+tb)]
};

// (a;q)_inf, truncated once |a q^m| < tol. Requires |q| < 1.
InfProduct pochhammer_inf(const Rat& a, const Rat& q, double tol = 1e-12);

// Pi_{(0,t)}(a;b) = prod_{i,j} (1 - t a_i b_j)/(1 - a_i b_j), exact.
// Requires a_i b_j < 1 for all pairs.
Rat cauchy_kernel_hl(const std::vector<Rat>& avals, const std::vector<Rat>& bvals,
                     const Rat& t);

// Pi_{(q,t)}(a;b) = prod_{i,j} (t a_i b_j; q)_inf / (a_i b_j; q)_inf.
double cauchy_kernel(const std::vector<Rat>& avals, const std::vector<Rat>& bvals,
                     const Rat& q, const Rat& t, double tol = 1e-12);

// Pi_{(0,t)}(a; (b0, b0 t, b0 t^2, ...)): the infinite geometric second
// specialization telescopes to prod_i 1/(1 - a_i b0), exact.
Rat cauchy_kernel_hl_geometric_tail(const std::vector<Rat>& avals, const Rat& b0,
                                    const Rat& t);

}  // namespace symfunc
}  // namespace padichl
