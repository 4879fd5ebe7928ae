// Empirical-vs-exact comparison toolkit: total variation, chi-square
// goodness of fit (one and two sample), normality and independence
// diagnostics.
#pragma once

#include <padichl/kernels.hpp>
#include <padichl/signature.hpp>

#include <map>
#include <string>
#include <vector>

namespace padichl {
namespace stats {

struct EmpiricalDist {
    std::map<Signature, long long> counts;
    long long total = 0;

    void add(const Signature& s, long long c = 1) {
        counts[s] += c;
        total += c;
    }
    void merge(const EmpiricalDist& o) {
        for (const auto& [s, c] : o.counts) counts[s] += c;
        total += o.total;
    }
    double frequency(const Signature& s) const;
};

// (1/2) sum |emp - exact| over the union support; unenumerated exact
// tail mass is added in full (conservative).
double tv_distance(const EmpiricalDist& emp, const hlproc::ExactDist& exact);

struct GofReport {
    std::string kind;  // "chi2" | "chi2-two-sample" | "tv"
    double statistic = 0.0;
    int dof = 0;
    double p_value = 1.0;
    std::string truncation_note;
    bool degenerate = false;
    double threshold = 0.0;
    bool passed = true;
};

// Pearson chi-square against an exact law; cells with expected count
// below min_expected are pooled (together with the exact tail).
GofReport chi_square(const EmpiricalDist& emp, const hlproc::ExactDist& exact,
                     double min_expected = 5.0);

GofReport two_sample_chi_square(const EmpiricalDist& a, const EmpiricalDist& b,
                                double min_expected = 5.0);

struct NormalityReport {
    size_t n = 0;
    double mean = 0.0, variance = 0.0, skewness = 0.0, excess_kurtosis = 0.0;
    double se_mean = 0.0, se_skewness = 0.0, se_kurtosis = 0.0;
    double ks_to_normal = 1.0;
    bool degenerate = false;
};

NormalityReport normality_report(std::vector<double> samples);

struct IndependenceReport {
    size_t n = 0;
    double correlation = 0.0;
    double ci99_lo = -1.0, ci99_hi = 1.0;  // Fisher-z 99% interval
    bool degenerate = false;
};

IndependenceReport independence_report(const std::vector<std::pair<double, double>>& pairs);

// Regularized upper incomplete gamma Q(a, x); chi-square p-value is
// Q(dof/2, stat/2).
double gamma_q(double a, double x);

double normal_cdf(double x);

}  // namespace stats
}  // namespace padichl
