// Exact singular-number laws: the n x m corner of a Haar element of
// GL_N (truncated Haar ensemble) and the limit with iid additive-Haar
// entries. Both use principal specializations, so every probability is
// an exact rational:
//   corner:  Pr(lambda) = P_lambda(1..t^{n-1}) Q_lambda(t^{m-n+1}..t^{N-n})
//                         / Pi(1..t^{n-1}; t^{m-n+1}..t^{N-n})
//   iid:     the N -> infinity limit; the normalizer telescopes to
//            prod_{i=1}^{n} (1 - t^{m-n+i})^{-1}.
#pragma once

#include <padichl/kernels.hpp>

namespace padichl {
namespace hlproc {

ExactDist corner_sn_measure(int n, int m, int N, const Rat& t,
                            const Rat& tail_bound = Rat(1, Int(1000000000)));

ExactDist additive_sn_measure(int n, int m, const Rat& t,
                              const Rat& tail_bound = Rat(1, Int(1000000000)));

// atom of the iid law at lambda (exact, no enumeration)
Rat additive_sn_atom(const Signature& lambda, int m, const Rat& t);

}  // namespace hlproc
}  // namespace padichl
