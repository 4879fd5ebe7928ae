// Hall-Littlewood polynomials P and Q on integer signatures, evaluated
// exactly at rational points via the Gelfand-Tsetlin branching recursion.
// Principal specializations use the closed product forms; the
// symmetrization formula is provided as an independent cross-check route.
#pragma once

#include <padichl/qseries.hpp>
#include <padichl/signature.hpp>

#include <vector>

namespace padichl {
namespace symfunc {

struct HLParams {
    Rat t;
    Rat q = 0;

    void validate() const {
        if (!(t > 0 && t < 1)) throw argument_error("HLParams: need 0 < t < 1");
        if (!(q >= 0 && q < 1)) throw domain_error("HLParams: need 0 <= q < 1");
    }
};

inline constexpr long long kInfiniteVars = -1;

// Single-step branching coefficients at q=0.
// psi: mu prec_P lambda (one row shorter), product of (1-t^{m_i(mu)})
//      over values i with m_i(mu) = m_i(lambda)+1.
// phi: nu prec_Q lambda (same length), product of (1-t^{m_i(lambda)})
//      over values i with m_i(lambda) = m_i(nu)+1.
// Both are 0 when the interlacing fails.
Rat psi_step_hl(const Signature& lambda, const Signature& mu, const Rat& t);
Rat phi_step_hl(const Signature& lambda, const Signature& nu, const Rat& t);

// P_lambda(values; 0, t); len(values) must equal len(lambda).
// Values must be >= 0; negative parts require strictly positive values.
Rat hl_eval_p(const Signature& lambda, const std::vector<Rat>& values, const Rat& t);

// Q_lambda(values; 0, t) for an arbitrary number of values (same-length
// skew convention: Q_lambda = Q_{lambda/(0[n])}). Zero unless lambda >= 0
// with at most len(values) nonzero parts.
Rat hl_eval_q(const Signature& lambda, const std::vector<Rat>& values, const Rat& t);

// Skew functions. P kind: len(lambda) = len(inner) + len(values).
// Q kind: len(lambda) = len(inner), any number of values.
// Both return 0 when no interlacing chain exists.
Rat hl_skew_p(const Signature& lambda, const Signature& inner,
              const std::vector<Rat>& values, const Rat& t);
Rat hl_skew_q(const Signature& lambda, const Signature& inner,
              const std::vector<Rat>& values, const Rat& t);

// Principal specializations at (x, xt, ..., xt^{n-1}); closed forms.
// principal_q takes the number of variables (kInfiniteVars for the
// infinite geometric specialization, where the form telescopes).
Rat principal_p(const Signature& lambda, const Rat& x, const Rat& t);
Rat principal_q(const Signature& lambda, const Rat& x, long long num_vars, const Rat& t);

// The symmetrization formula for P_lambda, valid for pairwise distinct
// values; used as an independent oracle against the branching recursion.
Rat symmetrized_p(const Signature& lambda, const std::vector<Rat>& values, const Rat& t);

// Geometric progression (x, xt, ..., xt^{m-1}); m = kInfiniteVars is
// truncated by the caller where a finite list is required.
std::vector<Rat> geometric_values(const Rat& x, const Rat& t, long long m);

}  // namespace symfunc
}  // namespace padichl
