#include <padichl/stats.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace padichl {
namespace stats {

double EmpiricalDist::frequency(const Signature& s) const {
    if (total == 0) throw argument_error("EmpiricalDist: empty sample");
    auto it = counts.find(s);
    return it == counts.end() ? 0.0
                              : static_cast<double>(it->second) / static_cast<double>(total);
}

double tv_distance(const EmpiricalDist& emp, const hlproc::ExactDist& exact) {
    if (emp.total == 0) throw argument_error("tv_distance: empty sample");
    double tv = 0.0;
    for (const auto& [sig, p] : exact.probs)
        tv += 0.5 * std::abs(emp.frequency(sig) - to_double(p));
    for (const auto& [sig, c] : emp.counts) {
        if (exact.probs.find(sig) == exact.probs.end())
            tv += 0.5 * static_cast<double>(c) / static_cast<double>(emp.total);
    }
    return tv + to_double(exact.tail);
}

namespace {

// incomplete gamma by series (x < a+1) or continued fraction
double gamma_q_impl(double a, double x) {
    if (x < 0 || a <= 0) throw argument_error("gamma_q: need a > 0, x >= 0");
    if (x == 0) return 1.0;
    double gln = std::lgamma(a);
    if (x < a + 1.0) {
        // P(a,x) by series
        double ap = a, sum = 1.0 / a, del = sum;
        for (int i = 0; i < 1000; ++i) {
            ap += 1.0;
            del *= x / ap;
            sum += del;
            if (std::abs(del) < std::abs(sum) * 1e-15) break;
        }
        return 1.0 - sum * std::exp(-x + a * std::log(x) - gln);
    }
    // Q(a,x) by Lentz continued fraction
    const double tiny = 1e-300;
    double b = x + 1.0 - a, c = 1.0 / tiny, d = 1.0 / b, h = d;
    for (int i = 1; i <= 1000; ++i) {
        double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-15) break;
    }
    return std::exp(-x + a * std::log(x) - gln) * h;
}

struct Cell {
    double expected;
    double observed;
};

GofReport pearson_from_cells(std::vector<Cell> cells, const std::string& kind) {
    GofReport rep;
    rep.kind = kind;
    if (cells.size() < 2) {
        rep.degenerate = true;
        rep.truncation_note = "fewer than 2 cells after pooling";
        return rep;
    }
    double stat = 0.0;
    for (const auto& c : cells) {
        double diff = c.observed - c.expected;
        stat += diff * diff / c.expected;
    }
    rep.statistic = stat;
    rep.dof = static_cast<int>(cells.size()) - 1;
    rep.p_value = gamma_q_impl(rep.dof / 2.0, stat / 2.0);
    return rep;
}

}  // namespace

double gamma_q(double a, double x) { return gamma_q_impl(a, x); }

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

GofReport chi_square(const EmpiricalDist& emp, const hlproc::ExactDist& exact,
                     double min_expected) {
    if (emp.total == 0) throw argument_error("chi_square: empty sample");
    double n = static_cast<double>(emp.total);

    // order atoms by expected count descending; pool the rest + tail
    std::vector<std::pair<double, const Signature*>> atoms;
    for (const auto& [sig, p] : exact.probs) atoms.emplace_back(to_double(p) * n, &sig);
    std::sort(atoms.begin(), atoms.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });

    std::vector<Cell> cells;
    double pooled_exp = to_double(exact.tail) * n;
    double pooled_obs = 0.0;
    std::map<Signature, bool> kept;
    for (const auto& [e, sig] : atoms) {
        if (e >= min_expected) {
            auto it = emp.counts.find(*sig);
            cells.push_back({e, it == emp.counts.end() ? 0.0 : static_cast<double>(it->second)});
            kept[*sig] = true;
        } else {
            pooled_exp += e;
        }
    }
    for (const auto& [sig, c] : emp.counts)
        if (kept.find(sig) == kept.end()) pooled_obs += static_cast<double>(c);
    std::ostringstream note;
    note << "pooled cell: expected " << pooled_exp << ", observed " << pooled_obs;
    if (pooled_exp >= min_expected || cells.empty()) {
        if (pooled_exp > 0) cells.push_back({pooled_exp, pooled_obs});
    } else if (pooled_exp > 0) {
        // too small to stand alone: fold into the smallest kept cell
        cells.back().expected += pooled_exp;
        cells.back().observed += pooled_obs;
    }
    GofReport rep = pearson_from_cells(std::move(cells), "chi2");
    rep.truncation_note = note.str();
    return rep;
}

GofReport two_sample_chi_square(const EmpiricalDist& a, const EmpiricalDist& b,
                                double min_expected) {
    if (a.total == 0 || b.total == 0)
        throw argument_error("two_sample_chi_square: empty sample");
    double na = static_cast<double>(a.total), nb = static_cast<double>(b.total);
    double k1 = std::sqrt(nb / na), k2 = std::sqrt(na / nb);

    std::map<Signature, std::pair<double, double>> joint;
    for (const auto& [sig, c] : a.counts) joint[sig].first = static_cast<double>(c);
    for (const auto& [sig, c] : b.counts) joint[sig].second = static_cast<double>(c);

    // pool small cells by combined count
    std::vector<std::pair<double, double>> cells;
    std::pair<double, double> pooled{0.0, 0.0};
    for (const auto& [sig, rc] : joint) {
        double combined = rc.first + rc.second;
        // combined count scaled to the smaller sample plays the role of
        // the expected count
        if (combined * std::min(na, nb) / (na + nb) >= min_expected)
            cells.push_back(rc);
        else {
            pooled.first += rc.first;
            pooled.second += rc.second;
        }
    }
    if (pooled.first + pooled.second > 0) cells.push_back(pooled);

    GofReport rep;
    rep.kind = "chi2-two-sample";
    if (cells.size() < 2) {
        rep.degenerate = true;
        rep.truncation_note = "fewer than 2 cells after pooling";
        return rep;
    }
    double stat = 0.0;
    for (const auto& [r, s] : cells) {
        double diff = k1 * r - k2 * s;
        stat += diff * diff / (r + s);
    }
    rep.statistic = stat;
    rep.dof = static_cast<int>(cells.size()) - 1;
    rep.p_value = gamma_q_impl(rep.dof / 2.0, stat / 2.0);
    return rep;
}

NormalityReport normality_report(std::vector<double> samples) {
    NormalityReport rep;
    rep.n = samples.size();
    if (rep.n < 100) throw argument_error("normality_report: need >= 100 samples");
    double n = static_cast<double>(rep.n);
    double mean = 0.0;
    for (double s : samples) mean += s;
    mean /= n;
    double m2 = 0.0, m3 = 0.0, m4 = 0.0;
    for (double s : samples) {
        double d = s - mean;
        m2 += d * d;
        m3 += d * d * d;
        m4 += d * d * d * d;
    }
    m2 /= n;
    m3 /= n;
    m4 /= n;
    rep.mean = mean;
    rep.variance = m2 * n / (n - 1.0);
    if (m2 == 0.0) {
        rep.degenerate = true;
        return rep;
    }
    rep.skewness = m3 / std::pow(m2, 1.5);
    rep.excess_kurtosis = m4 / (m2 * m2) - 3.0;
    rep.se_mean = std::sqrt(rep.variance / n);
    rep.se_skewness = std::sqrt(6.0 / n);
    rep.se_kurtosis = std::sqrt(24.0 / n);

    std::sort(samples.begin(), samples.end());
    double ks = 0.0;
    for (size_t i = 0; i < samples.size(); ++i) {
        double f = normal_cdf(samples[i]);
        double lo = static_cast<double>(i) / n, hi = static_cast<double>(i + 1) / n;
        ks = std::max({ks, std::abs(f - lo), std::abs(f - hi)});
    }
    rep.ks_to_normal = ks;
    return rep;
}

IndependenceReport independence_report(
    const std::vector<std::pair<double, double>>& pairs) {
    IndependenceReport rep;
    rep.n = pairs.size();
    if (rep.n < 100) throw argument_error("independence_report: need >= 100 pairs");
    double n = static_cast<double>(rep.n);
    double mx = 0.0, my = 0.0;
    for (const auto& [x, y] : pairs) {
        mx += x;
        my += y;
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (const auto& [x, y] : pairs) {
        sxx += (x - mx) * (x - mx);
        syy += (y - my) * (y - my);
        sxy += (x - mx) * (y - my);
    }
    if (sxx == 0.0 || syy == 0.0) {
        rep.degenerate = true;
        return rep;
    }
    rep.correlation = sxy / std::sqrt(sxx * syy);
    double r = std::clamp(rep.correlation, -0.999999999, 0.999999999);
    double z = std::atanh(r);
    double half = 2.5758293035489004 / std::sqrt(n - 3.0);  // 99% two-sided
    rep.ci99_lo = std::tanh(z - half);
    rep.ci99_hi = std::tanh(z + half);
    return rep;
}

}  // namespace stats
}  // namespace padichl
