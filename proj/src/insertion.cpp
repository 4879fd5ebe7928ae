#include <padichl/insertion.hpp>

#include <algorithm>
#include <limits>
#include <map>

namespace padichl {
namespace hlproc {

Signature insert(const std::vector<long long>& impulses, const Signature& lambda) {
    int n = lambda.length();
    if (static_cast<int>(impulses.size()) != n)
        throw argument_error("insert: need one impulse per particle");
    for (long long a : impulses)
        if (a < 0) throw argument_error("insert: impulses must be nonnegative");
    if (n == 0) return lambda;

    // running max of lambda_j + (a_idx + ... + a_j) from the bottom
    std::vector<long long> out(static_cast<size_t>(n));
    long long reach = std::numeric_limits<long long>::min();
    for (int idx = n - 1; idx >= 0; --idx) {
        long long a = impulses[static_cast<size_t>(idx)];
        reach = a + std::max(lambda[idx], reach == std::numeric_limits<long long>::min()
                                              ? lambda[idx]
                                              : reach);
        out[static_cast<size_t>(idx)] = idx > 0 ? std::min(lambda[idx - 1], reach) : reach;
    }
    Signature result(out);
    if (!interlaces_q(lambda, result))
        throw internal_error("insert: interlacing violated");
    return result;
}

namespace {

// first array index >= from whose coordinate-i impulse is nonzero, or -1;
// Pr(first >= j') = (1 - t^{from+i-1} x) / (1 - t^{j'+i-1} x)
long long first_nonzero_index(long long from, int coord_i, const GeneralizedVariable& xhat,
                              const Rat& t, RandomStream& rng) {
    Rat y_from = rat_pow(t, from + coord_i - 1) * xhat.x;
    LazyUniform u(rng);
    // no nonzero at all with probability 1 - y_from
    Rat p_some = y_from;
    if (!u.less_than(p_some)) return -1;
    // scan Pr(first < j') = 1 - (1 - y_from)/(1 - y_{j'})
    Rat y = y_from;
    for (long long j = from;; ++j) {
        Rat y_next = y * t;  // parameter at index j+1
        Rat p_first_le_j = 1 - (1 - y_from) / (1 - y_next);
        if (u.less_than(p_first_le_j)) return j;
        y = y_next;
    }
}

}  // namespace

std::vector<std::vector<long long>> sample_impulse_arrays(int n,
                                                          const GeneralizedVariable& xhat,
                                                          const Rat& t,
                                                          RandomStream& rng) {
    xhat.validate();
    if (!(t > 0 && t < 1)) throw argument_error("sample_impulse_arrays: need 0 < t < 1");
    if (!xhat.infinite()) {
        std::vector<std::vector<long long>> arrays(static_cast<size_t>(xhat.length),
                                                   std::vector<long long>(static_cast<size_t>(n)));
        Rat xj = xhat.x;
        for (long long j = 0; j < xhat.length; ++j) {
            Rat param = xj;
            for (int i = 0; i < n; ++i) {
                arrays[static_cast<size_t>(j)][static_cast<size_t>(i)] =
                    sample_gx(param, t, rng);
                param *= t;
            }
            xj *= t;
        }
        return arrays;
    }

    // infinite variable: per coordinate, draw the sparse set of nonzero
    // (index, value) pairs; a draw conditioned positive is 1 + Geom(y)
    std::map<long long, std::vector<long long>> sparse;
    for (int i = 1; i <= n; ++i) {
        long long from = 0;
        for (;;) {
            long long idx = first_nonzero_index(from, i, xhat, t, rng);
            if (idx < 0) break;
            Rat y = rat_pow(t, idx + i - 1) * xhat.x;
            long long value = 1 + geometric_exact(rng, y);
            auto& arr = sparse[idx];
            if (arr.empty()) arr.assign(static_cast<size_t>(n), 0);
            arr[static_cast<size_t>(i - 1)] = value;
            from = idx + 1;
        }
    }
    std::vector<std::vector<long long>> arrays;
    arrays.reserve(sparse.size());
    for (auto& [idx, arr] : sparse) arrays.push_back(std::move(arr));
    return arrays;
}

Signature step_generalized(const Signature& lambda, const GeneralizedVariable& xhat,
                           const Rat& t, RandomStream& rng) {
    Signature cur = lambda;
    for (const auto& arr : sample_impulse_arrays(lambda.length(), xhat, t, rng))
        cur = insert(arr, cur);
    return cur;
}

std::vector<long long> noninteracting_step(const std::vector<long long>& positions,
                                           const GeneralizedVariable& xhat, const Rat& t,
                                           RandomStream& rng) {
    std::vector<long long> out = positions;
    for (const auto& arr : sample_impulse_arrays(static_cast<int>(positions.size()), xhat,
                                                 t, rng))
        for (size_t i = 0; i < out.size(); ++i) out[i] += arr[i];
    return out;
}

namespace {

Trajectory run_impl(int n, const Specialization& spec, int k, RandomStream& rng,
                    bool interacting) {
    spec.validate();
    if (n < 1) throw argument_error("run_process: n must be >= 1");
    if (k < 1) throw argument_error("run_process: k must be >= 1");
    Trajectory traj;
    traj.n = n;
    traj.seed = rng.seed();
    traj.stream = rng.stream();
    traj.source = interacting ? "particle" : "noninteracting";
    traj.spec_desc = spec.describe();
    traj.steps.push_back(Signature::zeros(n));
    if (interacting) {
        Signature cur = Signature::zeros(n);
        for (int j = 1; j <= k; ++j) {
            cur = step_generalized(cur, spec.var_for_step(j), spec.t, rng);
            traj.steps.push_back(cur);
        }
    } else {
        std::vector<long long> v(static_cast<size_t>(n), 0);
        for (int j = 1; j <= k; ++j) {
            v = noninteracting_step(v, spec.var_for_step(j), spec.t, rng);
            // positions need not be ordered; record sorted for the
            // signature container, largest first
            std::vector<long long> sorted = v;
            std::sort(sorted.rbegin(), sorted.rend());
            traj.steps.push_back(Signature(sorted));
        }
    }
    return traj;
}

}  // namespace

Trajectory run_process(int n, const Specialization& spec, int k, RandomStream& rng) {
    return run_impl(n, spec, k, rng, true);
}

Trajectory run_noninteracting(int n, const Specialization& spec, int k, RandomStream& rng) {
    return run_impl(n, spec, k, rng, false);
}

}  // namespace hlproc
}  // namespace padichl
