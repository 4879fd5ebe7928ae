// Closed-form asymptotic predictors: per-step jump means/variances of
// the particle system, LLN centerings, CLT scalings, rescaled
// fluctuation paths, and Lyapunov exponents with their normalized
// large-n ratios. All means/variances are exact rationals: the defining
// sums telescope, e.g.
//   sum_j x t^{j+i-1}(1-t) / ((1-t^{j+i}x)(1-t^{j+i-1}x))
//     = 1/(1-t^{i-1}x) - 1/(1-t^{i-1+m}x),
// and the variance summand is h(y)-h(ty) for h(y) = y/(1-y)^2.
#pragma once

#include <padichl/hlproc_types.hpp>
#include <padichl/trajectory.hpp>

#include <vector>

namespace padichl {
namespace asym {

// Mean jump of particle i (1-based) per step with generalized variable
// xhat = (x, tx, ..., t^{m-1}x), m possibly infinite.
Rat mean_jump(int i, const hlproc::GeneralizedVariable& xhat, const Rat& t);

Rat var_jump(int i, const hlproc::GeneralizedVariable& xhat, const Rat& t);

Rat lln_center(int i, const hlproc::Specialization& spec, int k);
double clt_scale(int i, const hlproc::Specialization& spec, int k);

// Piecewise-linear fluctuation path on [0,1]: f(0)=0 and
// f(j/k) = (lambda_i(j) - center_i(j)) / clt_scale(i, k).
struct PiecewisePath {
    std::vector<double> knots;  // values at 0, 1/k, ..., 1
    double operator()(double u) const;
    double at_time_fraction(double u) const { return (*this)(u); }
};

PiecewisePath rescale_path(const hlproc::Trajectory& traj, int i,
                           const hlproc::Specialization& spec);

// Frequency profile rho over corner sizes N (kInfiniteN for the iid
// case); weights must be positive rationals summing to at most 1.
struct FrequencyProfile {
    std::vector<std::pair<long long, Rat>> weights;  // (N, rho(N))
};

struct LyapunovPrediction {
    std::vector<Rat> exponents;          // L_i, i = 1..n
    std::vector<Rat> normalized_ratios;  // L_i / (p^{-n} (1 - c(n)))
    Rat c;                               // sum_N rho(N) p^{-(N-n)}
};

LyapunovPrediction lyapunov_predict(int n, const FrequencyProfile& rho, long long p);

}  // namespace asym
}  // namespace padichl
