// Shared types for the Hall-Littlewood process machinery.
#pragma once

#include <padichl/rational.hpp>

#include <string>
#include <vector>

namespace padichl {
namespace hlproc {

inline constexpr long long kInfiniteLength = -1;

// A geometric progression of specialization values (x, tx, ..., t^{m-1}x),
// finite length m or infinite.
struct GeneralizedVariable {
    Rat x;
    long long length = 1;  // kInfiniteLength for infinite

    bool infinite() const { return length == kInfiniteLength; }

    void validate() const {
        if (!(x > 0 && x < 1))
            throw argument_error("GeneralizedVariable: need 0 < x < 1");
        if (length != kInfiniteLength && length < 1)
            throw argument_error("GeneralizedVariable: length must be >= 1");
    }
};

struct Specialization {
    Rat t;
    std::vector<GeneralizedVariable> vars;

    void validate() const {
        if (!(t > 0 && t < 1)) throw argument_error("Specialization: need 0 < t < 1");
        if (vars.empty()) throw argument_error("Specialization: no variables");
        for (const auto& v : vars) v.validate();
    }

    const GeneralizedVariable& var_for_step(int j) const {  // j = 1,2,...
        return vars[static_cast<size_t>((j - 1) % static_cast<long long>(vars.size()))];
    }

    std::string describe() const;
};

// The matrix dictionary: a product-chain step with corner size N (or the
// iid case N = infinite) corresponds to xhat = (t, t^2, ..., t^{N-n}).
GeneralizedVariable matrix_step_variable(long long n_rows, long long big_n, const Rat& t);

}  // namespace hlproc
}  // namespace padichl
