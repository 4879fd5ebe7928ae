// The PushTASEP-like insertion map and the exact particle sampler for
// Hall-Littlewood processes with one principal specialization.
//
// insert(a; lambda): particle n moves right by its impulse a_n until
// blocked by particle n-1, donating leftover impulse forward; closed
// form for the (n-i)-th part:
//   min(lambda_{n-i-1}, max_j (lambda_j + a_{n-i} + ... + a_j)).
#pragma once

#include <padichl/gx.hpp>
#include <padichl/hlproc_types.hpp>
#include <padichl/signature.hpp>
#include <padichl/trajectory.hpp>

#include <vector>

namespace padichl {
namespace hlproc {

// Deterministic insertion; impulses must be nonnegative, one per particle.
// The output interlaces above the input (lambda prec_Q result).
Signature insert(const std::vector<long long>& impulses, const Signature& lambda);

// Impulse arrays for one generalized variable: array j (0-based) has
// coordinate i ~ G_{x t^{j + i - 1}}. Infinite variables are sampled by
// index skipping: only the almost-surely finitely many nonzero arrays
// are materialized, in increasing index order.
std::vector<std::vector<long long>> sample_impulse_arrays(int n,
                                                          const GeneralizedVariable& xhat,
                                                          const Rat& t,
                                                          RandomStream& rng);

// One Markov step of the Cauchy dynamics with specialization xhat:
// sequential insertion of the impulse arrays.
Signature step_generalized(const Signature& lambda, const GeneralizedVariable& xhat,
                           const Rat& t, RandomStream& rng);

// Reference walk: the same impulses added coordinatewise with no
// interaction.
std::vector<long long> noninteracting_step(const std::vector<long long>& positions,
                                           const GeneralizedVariable& xhat, const Rat& t,
                                           RandomStream& rng);

// Trajectory from lambda(0) = zeros applying step_generalized with the
// specialization's variables (cycled when shorter than k).
Trajectory run_process(int n, const Specialization& spec, int k, RandomStream& rng);

Trajectory run_noninteracting(int n, const Specialization& spec, int k, RandomStream& rng);

}  // namespace hlproc
}  // namespace padichl
