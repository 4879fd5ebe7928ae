// Monomial expansions of Macdonald/Hall-Littlewood P polynomials,
// expansion of symmetric Laurent polynomials in the P basis, and the
// structure coefficients of P_lambda * P_mu.
#pragma once

#include <padichl/laurent.hpp>
#include <padichl/macdonald.hpp>

#include <map>

namespace padichl {
namespace symfunc {

// Caps n and the amount of enumeration work; exceeding either raises
// resource_error.
inline constexpr int kMaxExpansionVars = 6;

class PExpansionCache {
public:
    PExpansionCache(const Rat& q, const Rat& t) : q_(q), t_(t) {}

    // P_lambda(x_1..x_n; q, t) as a Laurent polynomial, n = len(lambda)
    const LaurentPolynomial& p_polynomial(const Signature& lambda);

    const Rat& q() const { return q_; }
    const Rat& t() const { return t_; }

private:
    Rat q_, t_;
    std::map<Signature, LaurentPolynomial> memo_;
    long long work_ = 0;
};

LaurentPolynomial p_polynomial(const Signature& lambda, const Rat& q, const Rat& t);

// coefficient of x^target in P_lambda, computed by a targeted chain walk
// (no full expansion)
Rat p_coefficient(const Signature& lambda, const std::vector<long long>& target,
                  const Rat& q, const Rat& t);

// f = sum c_nu P_nu by repeated subtraction of the lex-leading term;
// input must be symmetric.
std::map<Signature, Rat> expand_in_p(const LaurentPolynomial& f, const Rat& q,
                                     const Rat& t, PExpansionCache* cache = nullptr);

// c_{lambda,mu}^{nu}(q,t): coefficients of P_lambda * P_mu in the P basis
std::map<Signature, Rat> structure_coeffs(const Signature& lambda, const Signature& mu,
                                          const Rat& q, const Rat& t,
                                          PExpansionCache* cache = nullptr);

}  // namespace symfunc
}  // namespace padichl
