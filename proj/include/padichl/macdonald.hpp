// Macdonald branching coefficients psi/phi for general (q,t). Every
// ratio f(u1)/f(u2) with f(u) = (tu;q)_inf/(qu;q)_inf and u2 = u1 q^m
// telescopes to a finite product, so the coefficients are exact
// rationals. q=0 reproduces the Hall-Littlewood coefficients.
#pragma once

#include <padichl/hl.hpp>
#include <padichl/signature.hpp>

#include <vector>

namespace padichl {
namespace symfunc {

enum class BranchKind { Psi, Phi };

// psi_{outer/inner} (inner one row shorter, prec_P) or phi_{outer/inner}
// (same length, prec_Q). Non-interlacing pairs give 0.
Rat macdonald_branch(const Signature& outer, const Signature& inner, BranchKind kind,
                     const Rat& q, const Rat& t);

// Dispatches to the cheap Hall-Littlewood form at q=0.
Rat psi_step(const Signature& lambda, const Signature& mu, const Rat& q, const Rat& t);
Rat phi_step(const Signature& lambda, const Signature& nu, const Rat& q, const Rat& t);

// Interlacing chains of signatures with their branching weights.
struct GTPattern {
    enum class Kind { P, Q };
    Kind kind;
    std::vector<Signature> rows;  // bottom row first; adjacent rows interlace

    bool valid() const;
    // product of per-step branching coefficients
    Rat weight(const Rat& q, const Rat& t) const;
    // per-step |row_{i+1}| - |row_i| (with |row_0| first for P patterns
    // growing from the empty signature)
    std::vector<long long> step_weights() const;
};

}  // namespace symfunc
}  // namespace padichl
