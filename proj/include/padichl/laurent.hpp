// Sparse multivariate Laurent polynomials with exact rational
// coefficients. Terms are keyed by exponent vectors in lexicographic
// order, so the lex-greatest monomial is the last map entry.
#pragma once

#include <padichl/rational.hpp>
#include <padichl/signature.hpp>

#include <map>
#include <vector>

namespace padichl {
namespace symfunc {

class LaurentPolynomial {
public:
    using Exponents = std::vector<long long>;
    using TermMap = std::map<Exponents, Rat>;

    explicit LaurentPolynomial(int nvars) : nvars_(nvars) {
        if (nvars < 0) throw argument_error("LaurentPolynomial: negative variable count");
    }

    static LaurentPolynomial monomial(int nvars, const Exponents& e, const Rat& c);
    static LaurentPolynomial one(int nvars);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    Rat coefficient(const Exponents& e) const;
    void add_term(const Exponents& e, const Rat& c);

    LaurentPolynomial& operator+=(const LaurentPolynomial& o);
    LaurentPolynomial& operator-=(const LaurentPolynomial& o);
    LaurentPolynomial operator*(const LaurentPolynomial& o) const;
    LaurentPolynomial& scale(const Rat& c);
    LaurentPolynomial scaled(const Rat& c) const;

    // multiply by the monomial x^e
    LaurentPolynomial shifted(const Exponents& e) const;

    Rat eval(const std::vector<Rat>& point) const;

    // lex-greatest term; polynomial must be nonzero
    const std::pair<const Exponents, Rat>& leading_term() const;

    // invariance under all adjacent transpositions of the variables
    // (these generate the symmetric group)
    bool is_symmetric() const;

    bool operator==(const LaurentPolynomial& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }

private:
    void check_arity(const Exponents& e) const;

    int nvars_;
    TermMap terms_;
};

}  // namespace symfunc
}  // namespace padichl
