// Asymptotic block factorization of Macdonald polynomials: for
// lambda(D) built from blocks L_i*D + lambda^{(i)} with L_1 > ... > L_k,
// the normalized coefficients of P_{lambda(D)}/x^{hat{lambda}(D)}
// converge (and at q=0 stabilize exactly) to the coefficients of
//   prod_i P_{lambda^{(i)}}(block i) *
//   prod_{i<k} Pi_{(q,t)}(block_i vars inverted; all later vars).
#pragma once

#include <padichl/expand.hpp>

#include <optional>
#include <vector>

namespace padichl {
namespace symfunc {

struct FactorBlock {
    long long level;   // L_i
    Signature shape;   // lambda^{(i)}
};

struct FactorizationReport {
    std::vector<long long> d_values;
    std::vector<Rat> coefficients;      // one per D
    Rat limit_coefficient;              // from the factorized product
    bool stabilized = false;            // exact equality from stabilized_at on
    std::optional<long long> stabilized_at;
};

// Smallest D for which lambda(D) is a valid signature.
long long min_valid_d(const std::vector<FactorBlock>& blocks);

Signature block_signature(const std::vector<FactorBlock>& blocks, long long d);

// Coefficient of x^monomial in the factorized right-hand side.
Rat factorized_limit_coefficient(const std::vector<FactorBlock>& blocks,
                                 const std::vector<long long>& monomial, const Rat& q,
                                 const Rat& t);

FactorizationReport verify_factorization(const std::vector<FactorBlock>& blocks,
                                         long long d_max,
                                         const std::vector<long long>& monomial,
                                         const Rat& q, const Rat& t);

}  // namespace symfunc
}  // namespace padichl
