#include <padichl/signature.hpp>

#include <algorithm>
#include <sstream>

namespace padichl {

Signature::Signature(std::vector<long long> parts) : parts_(std::move(parts)) {
    for (size_t i = 1; i < parts_.size(); ++i) {
        if (parts_[i - 1] < parts_[i])
            throw argument_error("Signature: parts must be weakly decreasing");
    }
}

Signature Signature::constant(long long value, int n) {
    if (n < 0) throw argument_error("Signature: negative length");
    return Signature(std::vector<long long>(static_cast<size_t>(n), value));
}

long long Signature::sum() const {
    long long s = 0;
    for (long long p : parts_) s += p;
    return s;
}

long long Signature::weighted_sum() const {
    long long s = 0;
    for (size_t i = 0; i < parts_.size(); ++i) s += static_cast<long long>(i) * parts_[i];
    return s;
}

std::map<long long, int> Signature::multiplicities() const {
    std::map<long long, int> m;
    for (long long p : parts_) ++m[p];
    return m;
}

int Signature::multiplicity(long long value) const {
    int c = 0;
    for (long long p : parts_) c += (p == value);
    return c;
}

int Signature::nonzero_count() const {
    int c = 0;
    for (long long p : parts_) c += (p != 0);
    return c;
}

Signature Signature::shifted(long long d) const {
    std::vector<long long> v = parts_;
    for (auto& p : v) p += d;
    return Signature(std::move(v));
}

Signature Signature::negated() const {
    std::vector<long long> v(parts_.rbegin(), parts_.rend());
    for (auto& p : v) p = -p;
    return Signature(std::move(v));
}

Signature Signature::concat(const Signature& tail) const {
    std::vector<long long> v = parts_;
    v.insert(v.end(), tail.parts_.begin(), tail.parts_.end());
    return Signature(std::move(v));
}

std::string Signature::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    os << ")";
    return os.str();
}

bool interlaces_p(const Signature& mu, const Signature& lambda) {
    int n = lambda.length();
    if (mu.length() != n - 1) return false;
    for (int i = 0; i < n - 1; ++i) {
        if (!(lambda[i] >= mu[i] && mu[i] >= lambda[i + 1])) return false;
    }
    return true;
}

bool interlaces_q(const Signature& nu, const Signature& lambda) {
    int n = lambda.length();
    if (nu.length() != n) return false;
    for (int i = 0; i < n; ++i) {
        if (lambda[i] < nu[i]) return false;
        if (i + 1 < n && nu[i] < lambda[i + 1]) return false;
    }
    return true;
}

bool dominates_coordinatewise(const Signature& lo, const Signature& hi) {
    if (lo.length() != hi.length()) return false;
    for (int i = 0; i < lo.length(); ++i)
        if (hi[i] < lo[i]) return false;
    return true;
}

ExtendedSignature::ExtendedSignature(int censored, std::vector<long long> finite_parts,
                                     int precision)
    : censored_(censored), finite_(std::move(finite_parts)), precision_(precision) {
    if (censored_ < 0) throw argument_error("ExtendedSignature: negative censored count");
    for (size_t i = 1; i < finite_.size(); ++i) {
        if (finite_[i - 1] < finite_[i])
            throw argument_error("ExtendedSignature: parts must be weakly decreasing");
    }
    if (!finite_.empty() && precision_ > 0 && finite_.front() >= precision_)
        throw argument_error("ExtendedSignature: finite part not below precision");
}

Signature ExtendedSignature::to_signature() const {
    if (censored_ > 0) throw domain_error("ExtendedSignature: censored parts present");
    return Signature(finite_);
}

std::string ExtendedSignature::str() const {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < censored_; ++i) {
        if (i) os << ",";
        os << ">=" << precision_;
    }
    for (size_t i = 0; i < finite_.size(); ++i) {
        if (censored_ || i) os << ",";
        os << finite_[i];
    }
    os << ")";
    return os.str();
}

}  // namespace padichl
