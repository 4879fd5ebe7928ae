#include <padichl/qseries.hpp>

#include <cmath>
#include <cstdlib>

namespace padichl {

Rat parse_rational(const std::string& s) {
    if (s.empty()) throw argument_error("parse_rational: empty string");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw argument_error("parse_rational: zero denominator");
        return Rat(num, den);
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        size_t frac_len = s.size() - dot - 1;
        bool neg = false;
        if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) {
            neg = digits[0] == '-';
            digits = digits.substr(1);
        }
        if (digits.empty()) throw argument_error("parse_rational: bad decimal");
        Int num(digits);
        if (neg) num = -num;
        return Rat(num, int_pow(Int(10), static_cast<long long>(frac_len)));
    }
    return Rat(Int(s));
}

namespace symfunc {

Rat pochhammer(const Rat& a, const Rat& q, long long n) {
    if (n < 0) throw argument_error("pochhammer: negative n");
    Rat r = 1, aq = a;
    for (long long i = 0; i < n; ++i) {
        r *= (1 - aq);
        aq *= q;
    }
    return r;
}

InfProduct pochhammer_inf(const Rat& a, const Rat& q, double tol) {
    if (!(abs(q) < 1)) throw domain_error("pochhammer_inf: need |q| < 1");
    if (tol <= 0) throw argument_error("pochhammer_inf: tol must be positive");
    double value = 1.0;
    Rat aq = a;
    while (true) {
        double f = std::abs(to_double(aq));
        if (f < tol) break;
        value *= 1.0 - to_double(aq);
        aq *= q;
    }
    // remaining factors: prod (1 - a q^m), |a q^m| < tol, geometric in |q|
    double tail = std::abs(to_double(aq)) / (1.0 - std::abs(to_double(q)));
    return {value, tail};
}

Rat cauchy_kernel_hl(const std::vector<Rat>& avals, const std::vector<Rat>& bvals,
                     const Rat& t) {
    Rat r = 1;
    for (const Rat& a : avals) {
        for (const Rat& b : bvals) {
            Rat ab = a * b;
            if (ab >= 1) throw domain_error("cauchy_kernel: a_i b_j >= 1 diverges");
            r *= (1 - t * ab) / (1 - ab);
        }
    }
    return r;
}

double cauchy_kernel(const std::vector<Rat>& avals, const std::vector<Rat>& bvals,
                     const Rat& q, const Rat& t, double tol) {
    if (q == 0) return to_double(cauchy_kernel_hl(avals, bvals, t));
    double r = 1.0;
    for (const Rat& a : avals) {
        for (const Rat& b : bvals) {
            Rat ab = a * b;
            if (ab >= 1) throw domain_error("cauchy_kernel: a_i b_j >= 1 diverges");
            r *= pochhammer_inf(t * ab, q, tol).value / pochhammer_inf(ab, q, tol).value;
        }
    }
    return r;
}

Rat cauchy_kernel_hl_geometric_tail(const std::vector<Rat>& avals, const Rat& b0,
                                    const Rat& t) {
    if (!(t > 0 && t < 1)) throw argument_error("cauchy_kernel: need t in (0,1)");
    Rat r = 1;
    for (const Rat& a : avals) {
        Rat ab = a * b0;
        if (ab >= 1) throw domain_error("cauchy_kernel: a_i b0 >= 1 diverges");
        r /= (1 - ab);
    }
    return r;
}

}  // namespace symfunc
}  // namespace padichl
