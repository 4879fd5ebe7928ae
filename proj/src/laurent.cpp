#include <padichl/laurent.hpp>

#include <algorithm>

namespace padichl {
namespace symfunc {

void LaurentPolynomial::check_arity(const Exponents& e) const {
    if (static_cast<int>(e.size()) != nvars_)
        throw argument_error("LaurentPolynomial: exponent vector has wrong length");
}

LaurentPolynomial LaurentPolynomial::monomial(int nvars, const Exponents& e, const Rat& c) {
    LaurentPolynomial p(nvars);
    p.add_term(e, c);
    return p;
}

LaurentPolynomial LaurentPolynomial::one(int nvars) {
    return monomial(nvars, Exponents(static_cast<size_t>(nvars), 0), Rat(1));
}

Rat LaurentPolynomial::coefficient(const Exponents& e) const {
    check_arity(e);
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

void LaurentPolynomial::add_term(const Exponents& e, const Rat& c) {
    check_arity(e);
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
    if (o.nvars_ != nvars_) throw argument_error("LaurentPolynomial: arity mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
    if (o.nvars_ != nvars_) throw argument_error("LaurentPolynomial: arity mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
    if (o.nvars_ != nvars_) throw argument_error("LaurentPolynomial: arity mismatch");
    LaurentPolynomial out(nvars_);
    Exponents e(static_cast<size_t>(nvars_));
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            for (int i = 0; i < nvars_; ++i)
                e[static_cast<size_t>(i)] =
                    e1[static_cast<size_t>(i)] + e2[static_cast<size_t>(i)];
            out.add_term(e, c1 * c2);
        }
    }
    return out;
}

LaurentPolynomial& LaurentPolynomial::scale(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coef] : terms_) coef *= c;
    return *this;
}

LaurentPolynomial LaurentPolynomial::scaled(const Rat& c) const {
    LaurentPolynomial out = *this;
    out.scale(c);
    return out;
}

LaurentPolynomial LaurentPolynomial::shifted(const Exponents& e) const {
    check_arity(e);
    LaurentPolynomial out(nvars_);
    Exponents k(static_cast<size_t>(nvars_));
    for (const auto& [e1, c] : terms_) {
        for (int i = 0; i < nvars_; ++i)
            k[static_cast<size_t>(i)] = e1[static_cast<size_t>(i)] + e[static_cast<size_t>(i)];
        out.terms_.emplace(k, c);
    }
    return out;
}

Rat LaurentPolynomial::eval(const std::vector<Rat>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw argument_error("LaurentPolynomial: point has wrong arity");
    Rat total = 0;
    for (const auto& [e, c] : terms_) {
        Rat term = c;
        for (int i = 0; i < nvars_; ++i)
            term *= rat_pow(point[static_cast<size_t>(i)], e[static_cast<size_t>(i)]);
        total += term;
    }
    return total;
}

const std::pair<const LaurentPolynomial::Exponents, Rat>&
LaurentPolynomial::leading_term() const {
    if (terms_.empty()) throw domain_error("LaurentPolynomial: zero polynomial");
    return *terms_.rbegin();
}

bool LaurentPolynomial::is_symmetric() const {
    Exponents e;
    for (const auto& [exps, c] : terms_) {
        for (int i = 0; i + 1 < nvars_; ++i) {
            if (exps[static_cast<size_t>(i)] == exps[static_cast<size_t>(i + 1)]) continue;
            e = exps;
            std::swap(e[static_cast<size_t>(i)], e[static_cast<size_t>(i + 1)]);
            auto it = terms_.find(e);
            if (it == terms_.end() || it->second != c) return false;
        }
    }
    return true;
}

}  // namespace symfunc
}  // namespace padichl
