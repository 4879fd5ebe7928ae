// Time-indexed signature paths with provenance (seed, stream, source).
#pragma once

#include <padichl/signature.hpp>

#include <string>
#include <vector>

namespace padichl {
namespace hlproc {

struct Trajectory {
    int n = 0;
    std::vector<Signature> steps;  // lambda(0), lambda(1), ..., lambda(k)
    uint64_t seed = 0;
    uint64_t stream = 0;
    std::string source;    // "matrix" | "particle" | "noninteracting"
    std::string spec_desc;
    bool censored = false;

    int step_count() const { return static_cast<int>(steps.size()) - 1; }

    // every part grows weakly in time
    bool growth_ok() const {
        for (size_t j = 1; j < steps.size(); ++j)
            if (!dominates_coordinatewise(steps[j - 1], steps[j])) return false;
        return true;
    }
};

}  // namespace hlproc
}  // namespace padichl
