#include <padichl/gx.hpp>

namespace padichl {
namespace hlproc {

namespace {
void check_params(const Rat& x, const Rat& t) {
    if (!(x > 0 && x < 1)) throw argument_error("G_x: need 0 < x < 1");
    if (!(t > 0 && t < 1)) throw argument_error("G_x: need 0 < t < 1");
}
}  // namespace

Rat gx_pmf(long long ell, const Rat& x, const Rat& t) {
    check_params(x, t);
    if (ell < 0) return Rat(0);
    Rat head = (1 - x) / (1 - t * x);
    if (ell == 0) return head;
    return head * (1 - t) * rat_pow(x, ell);
}

Rat gx_mean(const Rat& x, const Rat& t) {
    check_params(x, t);
    return x * (1 - t) / ((1 - t * x) * (1 - x));
}

Rat gx_variance(const Rat& x, const Rat& t) {
    check_params(x, t);
    return x * (1 - t) * (1 - t * x * x) / ((1 - x) * (1 - x) * (1 - t * x) * (1 - t * x));
}

long long sample_gx(const Rat& x, const Rat& t, RandomStream& rng) {
    check_params(x, t);
    LazyUniform u(rng);
    // cdf(L) = 1 - (1-t) x^{L+1} / (1-tx)
    Rat tail_factor = (1 - t) / (1 - t * x);
    Rat xpow = x;
    for (long long ell = 0;; ++ell) {
        if (u.less_than(1 - tail_factor * xpow)) return ell;
        xpow *= x;
    }
}

}  // namespace hlproc
}  // namespace padichl
