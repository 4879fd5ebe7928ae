#include <padichl/asym.hpp>

#include <cmath>
#include <sstream>

namespace padichl {
namespace hlproc {

std::string Specialization::describe() const {
    std::ostringstream os;
    os << "t=" << rat_string(t) << " vars=[";
    for (size_t i = 0; i < vars.size(); ++i) {
        if (i) os << ",";
        os << "(" << rat_string(vars[i].x) << ",m=";
        if (vars[i].infinite())
            os << "inf";
        else
            os << vars[i].length;
        os << ")";
    }
    os << "]";
    return os.str();
}

GeneralizedVariable matrix_step_variable(long long n_rows, long long big_n, const Rat& t) {
    if (big_n == kInfiniteLength) return GeneralizedVariable{t, kInfiniteLength};
    if (big_n <= n_rows)
        throw argument_error("matrix_step_variable: need N > n");
    return GeneralizedVariable{t, big_n - n_rows};
}

}  // namespace hlproc

namespace asym {

using hlproc::GeneralizedVariable;
using hlproc::Specialization;

Rat mean_jump(int i, const GeneralizedVariable& xhat, const Rat& t) {
    if (i < 1) throw argument_error("mean_jump: particle index must be >= 1");
    xhat.validate();
    Rat y0 = rat_pow(t, i - 1) * xhat.x;
    // telescoping sum of t^{j+i-1}x(1-t)/((1-t^{j+i}x)(1-t^{j+i-1}x))
    Rat head = 1 / (1 - y0);
    if (xhat.infinite()) return head - 1;
    Rat ym = rat_pow(t, xhat.length) * y0;
    return head - 1 / (1 - ym);
}

Rat var_jump(int i, const GeneralizedVariable& xhat, const Rat& t) {
    if (i < 1) throw argument_error("var_jump: particle index must be >= 1");
    xhat.validate();
    auto h = [](const Rat& y) { return y / ((1 - y) * (1 - y)); };
    Rat y0 = rat_pow(t, i - 1) * xhat.x;
    if (xhat.infinite()) return h(y0);
    return h(y0) - h(rat_pow(t, xhat.length) * y0);
}

Rat lln_center(int i, const Specialization& spec, int k) {
    if (k < 0) throw argument_error("lln_center: k must be >= 0");
    spec.validate();
    Rat c = 0;
    for (int j = 1; j <= k; ++j) c += mean_jump(i, spec.var_for_step(j), spec.t);
    return c;
}

double clt_scale(int i, const Specialization& spec, int k) {
    if (k < 1) throw argument_error("clt_scale: k must be >= 1");
    spec.validate();
    Rat v = 0;
    for (int j = 1; j <= k; ++j) v += var_jump(i, spec.var_for_step(j), spec.t);
    return std::sqrt(to_double(v));
}

double PiecewisePath::operator()(double u) const {
    if (knots.size() < 2) return 0.0;
    if (u <= 0) return knots.front();
    if (u >= 1) return knots.back();
    double pos = u * static_cast<double>(knots.size() - 1);
    size_t lo = static_cast<size_t>(pos);
    double frac = pos - static_cast<double>(lo);
    return knots[lo] * (1.0 - frac) + knots[lo + 1] * frac;
}

PiecewisePath rescale_path(const hlproc::Trajectory& traj, int i,
                           const Specialization& spec) {
    int k = traj.step_count();
    if (k < 1) throw argument_error("rescale_path: trajectory has no steps");
    if (i < 1 || i > traj.n) throw argument_error("rescale_path: bad particle index");
    double scale = clt_scale(i, spec, k);
    PiecewisePath path;
    path.knots.resize(static_cast<size_t>(k) + 1);
    path.knots[0] = 0.0;
    Rat center = 0;
    for (int j = 1; j <= k; ++j) {
        center += mean_jump(i, spec.var_for_step(j), spec.t);
        Rat dev = Rat(traj.steps[static_cast<size_t>(j)][i - 1]) - center;
        path.knots[static_cast<size_t>(j)] = to_double(dev) / scale;
    }
    return path;
}

LyapunovPrediction lyapunov_predict(int n, const FrequencyProfile& rho, long long p) {
    if (n < 1) throw argument_error("lyapunov_predict: n must be >= 1");
    if (p < 2) throw argument_error("lyapunov_predict: p must be >= 2");
    if (rho.weights.empty()) throw argument_error("lyapunov_predict: empty profile");
    Rat t(1, p);
    Rat mass = 0;
    for (const auto& [N, w] : rho.weights) {
        if (w <= 0) throw argument_error("lyapunov_predict: weights must be positive");
        if (N != hlproc::kInfiniteLength && N <= n)
            throw argument_error("lyapunov_predict: profile mass on N <= n");
        mass += w;
    }
    if (mass > 1) throw argument_error("lyapunov_predict: profile mass exceeds 1");

    LyapunovPrediction out;
    out.c = 0;
    for (const auto& [N, w] : rho.weights)
        if (N != hlproc::kInfiniteLength) out.c += w * rat_pow(t, N - n);

    Rat denom = rat_pow(t, n) * (1 - out.c);
    for (int i = 1; i <= n; ++i) {
        Rat L = 0;
        for (const auto& [N, w] : rho.weights)
            L += w * mean_jump(n - i + 1, hlproc::matrix_step_variable(n, N, t), t);
        out.exponents.push_back(L);
        out.normalized_ratios.push_back(L / denom);
    }
    return out;
}

}  // namespace asym
}  // namespace padichl
