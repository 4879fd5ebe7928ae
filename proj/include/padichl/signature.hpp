// Integer signatures (weakly decreasing tuples) and the interlacing
// orders used by Gelfand-Tsetlin branching, plus extended signatures with
// precision-censored parts.
#pragma once

#include <padichl/rational.hpp>

#include <cstdint>
#include <map>
#include <vector>

namespace padichl {

class Signature {
public:
    Signature() = default;
    explicit Signature(std::vector<long long> parts);

    static Signature constant(long long value, int n);
    static Signature zeros(int n) { return constant(0, n); }

    int length() const { return static_cast<int>(parts_.size()); }
    long long part(int i) const { return parts_[static_cast<size_t>(i)]; }
    long long operator[](int i) const { return parts_[static_cast<size_t>(i)]; }
    const std::vector<long long>& parts() const { return parts_; }

    long long sum() const;                 // |lambda|
    long long weighted_sum() const;        // n(lambda) = sum (i-1) lambda_i
    std::map<long long, int> multiplicities() const;
    int multiplicity(long long value) const;
    int nonzero_count() const;

    Signature shifted(long long d) const;  // lambda + (d,...,d)
    Signature negated() const;             // (-lambda_n, ..., -lambda_1)
    Signature concat(const Signature& tail) const;

    bool nonnegative() const { return parts_.empty() || parts_.back() >= 0; }
    bool operator==(const Signature& o) const { return parts_ == o.parts_; }
    bool operator!=(const Signature& o) const { return parts_ != o.parts_; }
    bool operator<(const Signature& o) const { return parts_ < o.parts_; }

    std::string str() const;

private:
    std::vector<long long> parts_;
};

// mu prec_P lambda: len(mu) = len(lambda) - 1 and
// lambda_i >= mu_i >= lambda_{i+1}.
bool interlaces_p(const Signature& mu, const Signature& lambda);

// nu prec_Q lambda: same length, lambda_i >= nu_i and nu_i >= lambda_{i+1}.
bool interlaces_q(const Signature& nu, const Signature& lambda);

bool dominates_coordinatewise(const Signature& lo, const Signature& hi);

// Singular numbers computed mod p^D: parts below D are exact, anything
// >= D is reported as a censored sentinel. Sentinels form a prefix.
class ExtendedSignature {
public:
    ExtendedSignature() = default;
    ExtendedSignature(int censored, std::vector<long long> finite_parts, int precision);

    int length() const { return censored_ + static_cast<int>(finite_.size()); }
    int censored_count() const { return censored_; }
    bool is_censored() const { return censored_ > 0; }
    const std::vector<long long>& finite_parts() const { return finite_; }
    int precision() const { return precision_; }

    // Requires no censored parts.
    Signature to_signature() const;

    bool operator==(const ExtendedSignature& o) const {
        return censored_ == o.censored_ && finite_ == o.finite_;
    }

    std::string str() const;

private:
    int censored_ = 0;
    std::vector<long long> finite_;
    int precision_ = 0;
};

}  // namespace padichl
