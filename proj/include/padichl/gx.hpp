// The impulse law G_x = law of max(Geom(x) - Geom(t), 0):
//   G_x(l) = (1-x)/(1-tx) * (1-t)^{1(l>0)} * x^l.
// Draws are exact: inverse CDF against a lazily refined uniform, using
// the closed-form tail Pr(G_x > L) = (1-t) x^{L+1} / (1-tx).
#pragma once

#include <padichl/rng.hpp>

namespace padichl {
namespace hlproc {

Rat gx_pmf(long long ell, const Rat& x, const Rat& t);

// mean x(1-t)/((1-tx)(1-x)); variance x(1-t)(1-tx^2)/((1-x)^2(1-tx)^2)
Rat gx_mean(const Rat& x, const Rat& t);
Rat gx_variance(const Rat& x, const Rat& t);

long long sample_gx(const Rat& x, const Rat& t, RandomStream& rng);

}  // namespace hlproc
}  // namespace padichl
