#include <padichl/hl.hpp>

#include <algorithm>
#include <map>
#include <numeric>

namespace padichl {
namespace symfunc {

namespace {

// Work budget guarding the exact kernels; exceeding it raises
// resource_error rather than grinding on.
constexpr long long kWorkBudget = 50'000'000;

struct Budget {
    long long left = kWorkBudget;
    void spend(long long units = 1) {
        left -= units;
        if (left < 0)
            throw resource_error("hl evaluation exceeded its work budget");
    }
};

Rat pow_table_product(const std::map<long long, int>& outer_mult,
                      const std::map<long long, int>& inner_mult, const Rat& t,
                      bool use_outer) {
    // product over values whose outer multiplicity exceeds inner by one
    Rat r = 1;
    const auto& probe = use_outer ? outer_mult : inner_mult;
    const auto& other = use_outer ? inner_mult : outer_mult;
    for (const auto& [value, m] : probe) {
        auto it = other.find(value);
        int m_other = it == other.end() ? 0 : it->second;
        if (m == m_other + 1) r *= (1 - rat_pow(t, m));
    }
    return r;
}

// Enumerate mu prec_P lambda, invoking fn(mu).
template <typename Fn>
void for_each_p_predecessor(const Signature& lambda, Budget& budget, Fn&& fn) {
    int n = lambda.length();
    std::vector<long long> mu(static_cast<size_t>(n - 1));
    // mu_i in [lambda_{i+1}, lambda_i]
    std::function<void(int)> rec = [&](int i) {
        if (i == n - 1) {
            budget.spend();
            fn(Signature(mu));
            return;
        }
        for (long long v = lambda[i]; v >= lambda[i + 1]; --v) {
            mu[static_cast<size_t>(i)] = v;
            rec(i + 1);
        }
    };
    if (n >= 1) rec(0);
}

// Enumerate kappa prec_Q lambda with kappa >= floor coordinatewise.
template <typename Fn>
void for_each_q_predecessor(const Signature& lambda, const Signature& floor,
                            Budget& budget, Fn&& fn) {
    int n = lambda.length();
    std::vector<long long> kappa(static_cast<size_t>(n));
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            budget.spend();
            fn(Signature(kappa));
            return;
        }
        long long lo = std::max(i + 1 < n ? lambda[i + 1] : floor[i], floor[i]);
        long long hi = lambda[i];
        if (i > 0) hi = std::min(hi, kappa[static_cast<size_t>(i - 1)]);
        for (long long v = hi; v >= lo; --v) {
            kappa[static_cast<size_t>(i)] = v;
            rec(i + 1);
        }
    };
    rec(0);
}

struct SkewPEvaluator {
    const Signature& inner;
    const std::vector<Rat>& values;  // one per branching level
    const Rat& t;
    Budget budget;
    std::map<Signature, Rat> memo;

    Rat eval(const Signature& lambda) {
        int level = lambda.length() - inner.length();  // variables left to absorb
        if (level == 0) return lambda == inner ? Rat(1) : Rat(0);
        // prune: chain forces lambda_i >= inner_i
        for (int i = 0; i < inner.length(); ++i)
            if (lambda[i] < inner[i]) return Rat(0);
        auto it = memo.find(lambda);
        if (it != memo.end()) return it->second;
        const Rat& x = values[static_cast<size_t>(level - 1)];
        Rat total = 0;
        for_each_p_predecessor(lambda, budget, [&](const Signature& mu) {
            Rat sub = eval(mu);
            if (sub == 0) return;
            Rat psi = pow_table_product(lambda.multiplicities(), mu.multiplicities(), t,
                                        /*use_outer=*/false);
            total += psi * rat_pow(x, lambda.sum() - mu.sum()) * sub;
        });
        memo.emplace(lambda, total);
        return total;
    }
};

struct SkewQEvaluator {
    const Signature& inner;
    const std::vector<Rat>& values;
    const Rat& t;
    Budget budget;
    std::map<std::pair<int, Signature>, Rat> memo;  // (steps left, outer)

    Rat eval(const Signature& lambda, int steps) {
        if (steps == 0) return lambda == inner ? Rat(1) : Rat(0);
        if (!dominates_coordinatewise(inner, lambda)) return Rat(0);
        auto key = std::make_pair(steps, lambda);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        const Rat& x = values[static_cast<size_t>(steps - 1)];
        Rat total = 0;
        for_each_q_predecessor(lambda, inner, budget, [&](const Signature& kappa) {
            Rat sub = eval(kappa, steps - 1);
            if (sub == 0) return;
            Rat phi = pow_table_product(lambda.multiplicities(), kappa.multiplicities(), t,
                                        /*use_outer=*/true);
            total += phi * rat_pow(x, lambda.sum() - kappa.sum()) * sub;
        });
        memo.emplace(std::move(key), total);
        return total;
    }
};

Rat product_of(const std::vector<Rat>& values) {
    Rat r = 1;
    for (const Rat& v : values) r *= v;
    return r;
}

}  // namespace

Rat psi_step_hl(const Signature& lambda, const Signature& mu, const Rat& t) {
    if (!interlaces_p(mu, lambda)) return Rat(0);
    return pow_table_product(lambda.multiplicities(), mu.multiplicities(), t,
                             /*use_outer=*/false);
}

Rat phi_step_hl(const Signature& lambda, const Signature& nu, const Rat& t) {
    if (!interlaces_q(nu, lambda)) return Rat(0);
    return pow_table_product(lambda.multiplicities(), nu.multiplicities(), t,
                             /*use_outer=*/true);
}

std::vector<Rat> geometric_values(const Rat& x, const Rat& t, long long m) {
    if (m < 0) throw argument_error("geometric_values: finite length required");
    std::vector<Rat> v;
    v.reserve(static_cast<size_t>(m));
    Rat cur = x;
    for (long long j = 0; j < m; ++j) {
        v.push_back(cur);
        cur *= t;
    }
    return v;
}

Rat hl_eval_p(const Signature& lambda, const std::vector<Rat>& values, const Rat& t) {
    if (static_cast<int>(values.size()) != lambda.length())
        throw argument_error("hl_eval_p: values length must equal signature length");
    for (const Rat& v : values)
        if (v < 0) throw argument_error("hl_eval_p: values must be nonnegative");
    if (lambda.length() == 0) return Rat(1);
    long long low = lambda[lambda.length() - 1];
    if (low < 0) {
        // shift law: P_{lambda+d} = (prod x_i)^d P_lambda
        Rat prod = product_of(values);
        if (prod == 0)
            throw domain_error("hl_eval_p: negative parts need positive values");
        Signature shifted = lambda.shifted(-low);
        return hl_eval_p(shifted, values, t) * rat_pow(prod, low);
    }
    SkewPEvaluator ev{Signature(), values, t, {}, {}};
    return ev.eval(lambda);
}

Rat hl_eval_q(const Signature& lambda, const std::vector<Rat>& values, const Rat& t) {
    if (!lambda.nonnegative()) return Rat(0);
    return hl_skew_q(lambda, Signature::zeros(lambda.length()), values, t);
}

Rat hl_skew_p(const Signature& lambda, const Signature& inner,
              const std::vector<Rat>& values, const Rat& t) {
    if (lambda.length() != inner.length() + static_cast<int>(values.size()))
        throw argument_error("hl_skew_p: len(lambda) must be len(inner) + len(values)");
    long long low = lambda.length() ? lambda[lambda.length() - 1] : 0;
    if (inner.length()) low = std::min(low, inner[inner.length() - 1]);
    if (low < 0) {
        Rat prod = product_of(values);
        if (prod == 0)
            throw domain_error("hl_skew_p: negative parts need nonzero values");
        return hl_skew_p(lambda.shifted(-low), inner.shifted(-low), values, t) *
               rat_pow(prod, low);
    }
    SkewPEvaluator ev{inner, values, t, {}, {}};
    return ev.eval(lambda);
}

Rat hl_skew_q(const Signature& lambda, const Signature& inner,
              const std::vector<Rat>& values, const Rat& t) {
    if (lambda.length() != inner.length())
        throw argument_error("hl_skew_q: signatures must have equal length");
    long long low = lambda.length() ? std::min(lambda[lambda.length() - 1],
                                               inner[inner.length() - 1])
                                    : 0;
    Signature lam = lambda, in = inner;
    if (low < 0) {  // shift-invariant for Q
        lam = lambda.shifted(-low);
        in = inner.shifted(-low);
    }
    SkewQEvaluator ev{in, values, t, {}, {}};
    return ev.eval(lam, static_cast<int>(values.size()));
}

Rat principal_p(const Signature& lambda, const Rat& x, const Rat& t) {
    int n = lambda.length();
    if (n == 0) return Rat(1);
    long long low = lambda[n - 1];
    if (low < 0) {
        // prod of the principal values is x^n t^{n(n-1)/2}
        Rat prod = rat_pow(x, n) * rat_pow(t, static_cast<long long>(n) * (n - 1) / 2);
        if (prod == 0) throw domain_error("principal_p: negative parts need x > 0");
        return principal_p(lambda.shifted(-low), x, t) * rat_pow(prod, low);
    }
    Rat denom = 1;
    for (const auto& [value, m] : lambda.multiplicities()) denom *= pochhammer(t, t, m);
    return rat_pow(x, lambda.sum()) * rat_pow(t, lambda.weighted_sum()) *
           pochhammer(t, t, n) / denom;
}

Rat principal_q(const Signature& lambda, const Rat& x, long long num_vars, const Rat& t) {
    if (!lambda.nonnegative()) return Rat(0);
    int nz = lambda.nonzero_count();
    Rat head = rat_pow(x, lambda.sum()) * rat_pow(t, lambda.weighted_sum());
    if (num_vars == kInfiniteVars) return head;
    if (num_vars < nz) return Rat(0);
    return head * pochhammer(t, t, num_vars) / pochhammer(t, t, num_vars - nz);
}

Rat symmetrized_p(const Signature& lambda, const std::vector<Rat>& values, const Rat& t) {
    int n = lambda.length();
    if (static_cast<int>(values.size()) != n)
        throw argument_error("symmetrized_p: values length must equal signature length");
    if (n > 8) throw resource_error("symmetrized_p: n > 8");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (values[static_cast<size_t>(i)] == values[static_cast<size_t>(j)])
                throw domain_error("symmetrized_p: values must be pairwise distinct");

    Rat v_lambda = 1;
    for (const auto& [value, m] : lambda.multiplicities())
        v_lambda *= pochhammer(t, t, m) / rat_pow(1 - t, m);

    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    Rat total = 0;
    do {
        Rat term = 1;
        for (int i = 0; i < n; ++i)
            term *= rat_pow(values[static_cast<size_t>(perm[static_cast<size_t>(i)])],
                            lambda[i]);
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                const Rat& xi = values[static_cast<size_t>(perm[static_cast<size_t>(i)])];
                const Rat& xj = values[static_cast<size_t>(perm[static_cast<size_t>(j)])];
                term *= (xi - t * xj) / (xi - xj);
            }
        }
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total / v_lambda;
}

}  // namespace symfunc
}  // namespace padichl
