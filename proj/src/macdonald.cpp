#include <padichl/macdonald.hpp>

namespace padichl {
namespace symfunc {

namespace {

// f(t^a q^b) / f(t^a q^{b+m}) for m >= 0:
//   prod_{r=0}^{m-1} (1 - t^{a+1} q^{b+r}) / prod_{r=1}^{m} (1 - t^a q^{b+r})
Rat f_ratio_down(long long a, long long b, long long m, const Rat& q, const Rat& t) {
    Rat num = 1, den = 1;
    Rat ta = rat_pow(t, a);
    Rat qb = rat_pow(q, b);
    Rat qr = qb;
    for (long long r = 0; r < m; ++r) {
        num *= 1 - t * ta * qr;
        den *= 1 - ta * (qr * q);
        qr *= q;
    }
    return num / den;
}

// f(t^a q^{b1}) / f(t^a q^{b2}) for arbitrary b1, b2 >= 0
Rat f_ratio(long long a, long long b1, long long b2, const Rat& q, const Rat& t) {
    if (b1 <= b2) return f_ratio_down(a, b1, b2 - b1, q, t);
    return 1 / f_ratio_down(a, b2, b1 - b2, q, t);
}

Rat psi_macdonald(const Signature& lambda, const Signature& mu, const Rat& q,
                  const Rat& t) {
    int n = lambda.length();
    Rat r = 1;
    for (int i = 1; i <= n - 1; ++i) {
        for (int j = i; j <= n - 1; ++j) {
            long long a = j - i;
            r *= f_ratio(a, mu[i - 1] - mu[j - 1], lambda[i - 1] - mu[j - 1], q, t);
            r *= f_ratio(a, lambda[i - 1] - lambda[j], mu[i - 1] - lambda[j], q, t);
        }
    }
    return r;
}

Rat phi_macdonald(const Signature& lambda, const Signature& nu, const Rat& q,
                  const Rat& t) {
    int n = lambda.length();
    Rat r = 1;
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
            long long a = j - i;
            r *= f_ratio(a, lambda[i - 1] - lambda[j - 1], lambda[i - 1] - nu[j - 1], q, t);
        }
    }
    for (int i = 1; i <= n - 1; ++i) {
        for (int j = i; j <= n - 1; ++j) {
            long long a = j - i;
            r *= f_ratio(a, nu[i - 1] - nu[j], nu[i - 1] - lambda[j], q, t);
        }
    }
    return r;
}

}  // namespace

Rat macdonald_branch(const Signature& outer, const Signature& inner, BranchKind kind,
                     const Rat& q, const Rat& t) {
    if (!(t > 0 && t < 1)) throw argument_error("macdonald_branch: need 0 < t < 1");
    if (q < 0) throw domain_error("macdonald_branch: negative q not supported");
    if (!(q < 1)) throw domain_error("macdonald_branch: need q < 1");
    // both formulas depend only on part differences, which interlacing
    // keeps nonnegative, so signatures with negative parts need no shift
    if (kind == BranchKind::Psi) {
        if (!interlaces_p(inner, outer)) return Rat(0);
        return psi_macdonald(outer, inner, q, t);
    }
    if (!interlaces_q(inner, outer)) return Rat(0);
    return phi_macdonald(outer, inner, q, t);
}

Rat psi_step(const Signature& lambda, const Signature& mu, const Rat& q, const Rat& t) {
    if (q == 0) return psi_step_hl(lambda, mu, t);
    return macdonald_branch(lambda, mu, BranchKind::Psi, q, t);
}

Rat phi_step(const Signature& lambda, const Signature& nu, const Rat& q, const Rat& t) {
    if (q == 0) return phi_step_hl(lambda, nu, t);
    return macdonald_branch(lambda, nu, BranchKind::Phi, q, t);
}

bool GTPattern::valid() const {
    if (rows.empty()) return false;
    for (size_t i = 1; i < rows.size(); ++i) {
        bool ok = kind == Kind::P ? interlaces_p(rows[i - 1], rows[i])
                                  : interlaces_q(rows[i - 1], rows[i]);
        if (!ok) return false;
    }
    return true;
}

Rat GTPattern::weight(const Rat& q, const Rat& t) const {
    Rat w = 1;
    for (size_t i = 1; i < rows.size(); ++i) {
        w *= kind == Kind::P ? psi_step(rows[i], rows[i - 1], q, t)
                             : phi_step(rows[i], rows[i - 1], q, t);
    }
    return w;
}

std::vector<long long> GTPattern::step_weights() const {
    std::vector<long long> w;
    for (size_t i = 1; i < rows.size(); ++i) w.push_back(rows[i].sum() - rows[i - 1].sum());
    if (kind == Kind::P && !rows.empty() && rows.front().length() > 0)
        w.insert(w.begin(), rows.front().sum());
    return w;
}

}  // namespace symfunc
}  // namespace padichl
