#include <padichl/expand.hpp>

#include <functional>

namespace padichl {
namespace symfunc {

namespace {

constexpr long long kExpansionBudget = 20'000'000;

template <typename Fn>
void for_each_p_predecessor(const Signature& lambda, Fn&& fn) {
    int n = lambda.length();
    std::vector<long long> mu(static_cast<size_t>(n - 1));
    std::function<void(int)> rec = [&](int i) {
        if (i == n - 1) {
            fn(Signature(mu));
            return;
        }
        for (long long v = lambda[i]; v >= lambda[i + 1]; --v) {
            mu[static_cast<size_t>(i)] = v;
            rec(i + 1);
        }
    };
    rec(0);
}

}  // namespace

const LaurentPolynomial& PExpansionCache::p_polynomial(const Signature& lambda) {
    auto it = memo_.find(lambda);
    if (it != memo_.end()) return it->second;
    int n = lambda.length();
    if (n > kMaxExpansionVars)
        throw resource_error("p_polynomial: too many variables");
    LaurentPolynomial out(n);
    if (n == 0) {
        out = LaurentPolynomial::one(0);
    } else if (n == 1) {
        out.add_term({lambda[0]}, Rat(1));
    } else {
        // branch on the last variable
        for_each_p_predecessor(lambda, [&](const Signature& mu) {
            Rat psi = psi_step(lambda, mu, q_, t_);
            if (psi == 0) return;
            const LaurentPolynomial& sub = p_polynomial(mu);
            long long deg = lambda.sum() - mu.sum();
            std::vector<long long> e(static_cast<size_t>(n));
            for (const auto& [exps, c] : sub.terms()) {
                for (int i = 0; i < n - 1; ++i) e[static_cast<size_t>(i)] = exps[static_cast<size_t>(i)];
                e[static_cast<size_t>(n - 1)] = deg;
                out.add_term(e, c * psi);
                if (++work_ > kExpansionBudget)
                    throw resource_error("p_polynomial: work budget exceeded");
            }
        });
    }
    return memo_.emplace(lambda, std::move(out)).first->second;
}

LaurentPolynomial p_polynomial(const Signature& lambda, const Rat& q, const Rat& t) {
    PExpansionCache cache(q, t);
    return cache.p_polynomial(lambda);
}

Rat p_coefficient(const Signature& lambda, const std::vector<long long>& target,
                  const Rat& q, const Rat& t) {
    int n = lambda.length();
    if (static_cast<int>(target.size()) != n)
        throw argument_error("p_coefficient: target has wrong arity");
    long long total = 0;
    for (long long d : target) total += d;
    if (total != lambda.sum()) return Rat(0);

    std::map<Signature, Rat> memo;
    std::function<Rat(const Signature&)> rec = [&](const Signature& lam) -> Rat {
        int level = lam.length();
        if (level == 0) return Rat(1);
        if (level == 1) return lam[0] == target[0] ? Rat(1) : Rat(0);
        auto it = memo.find(lam);
        if (it != memo.end()) return it->second;
        long long want = target[static_cast<size_t>(level - 1)];
        Rat total_c = 0;
        for_each_p_predecessor(lam, [&](const Signature& mu) {
            if (lam.sum() - mu.sum() != want) return;
            Rat psi = psi_step(lam, mu, q, t);
            if (psi == 0) return;
            total_c += psi * rec(mu);
        });
        memo.emplace(lam, total_c);
        return total_c;
    };
    return rec(lambda);
}

std::map<Signature, Rat> expand_in_p(const LaurentPolynomial& f, const Rat& q,
                                     const Rat& t, PExpansionCache* cache) {
    if (!f.is_symmetric())
        throw argument_error("expand_in_p: polynomial is not symmetric");
    PExpansionCache local(q, t);
    PExpansionCache& c = cache ? *cache : local;

    std::map<Signature, Rat> out;
    LaurentPolynomial rem = f;
    long long rounds = 0;
    while (!rem.is_zero()) {
        const auto& [exps, coef] = rem.leading_term();
        // leading exponent of a symmetric polynomial is weakly decreasing
        Signature nu(exps);
        out[nu] = coef;
        rem -= c.p_polynomial(nu).scaled(coef);
        if (++rounds > 1'000'000)
            throw resource_error("expand_in_p: too many reduction rounds");
    }
    return out;
}

std::map<Signature, Rat> structure_coeffs(const Signature& lambda, const Signature& mu,
                                          const Rat& q, const Rat& t,
                                          PExpansionCache* cache) {
    if (lambda.length() != mu.length())
        throw argument_error("structure_coeffs: signatures must have equal length");
    if (lambda.length() > kMaxExpansionVars)
        throw resource_error("structure_coeffs: length above cap");
    PExpansionCache local(q, t);
    PExpansionCache& c = cache ? *cache : local;
    LaurentPolynomial prod = c.p_polynomial(lambda) * c.p_polynomial(mu);
    return expand_in_p(prod, q, t, &c);
}

}  // namespace symfunc
}  // namespace padichl
