// End-to-end acceptance suite. Each numbered criterion prints one
// PASS/FAIL line; the binary exits nonzero if any criterion fails.
// Tolerances are fixed here, not tunable.
#include <padichl/asym.hpp>
#include <padichl/factorization.hpp>
#include <padichl/insertion.hpp>
#include <padichl/measures.hpp>
#include <padichl/padic.hpp>
#include <padichl/qseries.hpp>
#include <padichl/stats.hpp>

#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <vector>

using namespace padichl;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& what, bool pass,
            const std::string& detail = "") {
    std::printf("%s criterion %2d: %s", pass ? "PASS" : "FAIL", criterion, what.c_str());
    if (!detail.empty()) std::printf(" [%s]", detail.c_str());
    std::printf("\n");
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

Signature sig(std::initializer_list<long long> parts) {
    return Signature(std::vector<long long>(parts));
}

void for_all_signatures(int n, long long lo, long long hi,
                        const std::function<void(const Signature&)>& fn) {
    std::vector<long long> parts(static_cast<size_t>(n));
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            fn(Signature(parts));
            return;
        }
        long long top = i == 0 ? hi : parts[static_cast<size_t>(i - 1)];
        for (long long v = top; v >= lo; --v) {
            parts[static_cast<size_t>(i)] = v;
            rec(i + 1);
        }
    };
    rec(0);
}

char buf[256];

// ---- 1. insertion exactness --------------------------------------------
void criterion_1() {
    bool pass = hlproc::insert({1, 4, 2}, sig({5, 3, -1})) == sig({8, 5, 1});
    report(1, "insertion map worked example (1,4,2) into (5,3,-1) -> (8,5,1)", pass);
}

// ---- 2. sampler == kernel ----------------------------------------------
void criterion_2() {
    Rat x(1, 2), t(1, 2);
    Signature lam = sig({2, 1, 0});
    auto dist = hlproc::cauchy_kernel_distribution(lam, x, t);
    stats::EmpiricalDist emp;
    RandomStream rng(1, 0);
    hlproc::GeneralizedVariable var{x, 1};
    const int steps = 100000;
    for (int i = 0; i < steps; ++i) emp.add(hlproc::step_generalized(lam, var, t, rng));
    double tv = stats::tv_distance(emp, dist);

    bool forms_equal = true;
    RandomStream rng2(2, 0);
    for (int inst = 0; inst < 100 && forms_equal; ++inst) {
        int n = 1 + static_cast<int>(rng2.uniform_below(3));
        std::vector<long long> parts(static_cast<size_t>(n));
        long long cur = static_cast<long long>(rng2.uniform_below(4));
        for (auto& p : parts) {
            p = cur;
            cur -= static_cast<long long>(rng2.uniform_below(3));
        }
        Signature l(parts);
        Rat xr(1 + static_cast<long long>(rng2.uniform_below(7)), 8);
        auto d = hlproc::cauchy_kernel_distribution(l, xr, t);
        int checked = 0;
        for (const auto& [nu, p] : d.probs) {
            if (hlproc::cauchy_kernel_prob_product_form(l, nu, xr, t) !=
                hlproc::cauchy_kernel_prob_symfunc_form(l, nu, xr, t)) {
                forms_equal = false;
                break;
            }
            if (++checked > 8) break;
        }
    }
    std::snprintf(buf, sizeof buf, "TV = %.4f (<= 0.01), two kernel forms %s", tv,
                  forms_equal ? "identical" : "DIFFER");
    report(2, "one-variable sampler reproduces the exact kernel (n=3, 1e5 steps)",
           tv <= 0.01 && forms_equal, buf);
}

// ---- 3. corners law ------------------------------------------------------
void criterion_3() {
    Rat t(1, 2);
    const int trials = 10000, precision = 16;
    stats::EmpiricalDist emp;
    RandomStream rng(3, 0);
    for (int i = 0; i < trials; ++i) {
        auto m = padic::corner(padic::haar_gl(4, 2, precision, rng), 2, 2);
        auto sn = padic::smith(m);
        // parts >= D land outside every enumerated atom; bucket them at a
        // marker so they count as unexplained empirical mass
        emp.add(sn.is_censored() ? sig({precision, precision}) : sn.to_signature());
    }
    auto law = hlproc::corner_sn_measure(2, 2, 4, t);
    double tv = stats::tv_distance(emp, law);
    auto chi = stats::chi_square(emp, law);

    // cross-check atom: 1x1 corner of GL_2(Z_2) has Pr(SN = (0)) = 2/3
    Rat atom = hlproc::corner_sn_measure(1, 1, 2, t).probs.at(sig({0}));
    int unit_hits = 0;
    RandomStream rng2(4, 0);
    for (int i = 0; i < trials; ++i) {
        auto m = padic::corner(padic::haar_gl(2, 2, precision, rng2), 1, 1);
        unit_hits += padic::smith(m).to_signature() == sig({0});
    }
    double freq = static_cast<double>(unit_hits) / trials;
    bool atom_ok = atom == Rat(2, 3) && std::abs(freq - 2.0 / 3) <= 0.015;

    bool pass = chi.p_value >= 0.001 && tv <= 0.02 && atom_ok;
    std::snprintf(buf, sizeof buf, "TV = %.4f (<= 0.02), chi2 p = %.4f (>= 0.001), "
                  "1x1 atom exact 2/3, freq %.4f (+-0.015)",
                  tv, chi.p_value, freq);
    report(3, "2x2 corner of Haar GL_4(Z_2): SN law matches the exact measure", pass, buf);
}

// ---- 4. iid-entry limit law ---------------------------------------------
void criterion_4() {
    Rat t(1, 2);
    const int trials = 10000, precision = 16;
    stats::EmpiricalDist emp;
    RandomStream rng(5, 0);
    for (int i = 0; i < trials; ++i) {
        auto m = padic::haar_additive(2, 2, 2, precision, rng);
        auto sn = padic::smith(m);
        emp.add(sn.is_censored() ? sig({precision, precision}) : sn.to_signature());
    }
    auto law = hlproc::additive_sn_measure(2, 2, t);
    double tv = stats::tv_distance(emp, law);
    std::snprintf(buf, sizeof buf, "TV = %.4f (<= 0.02)", tv);
    report(4, "2x2 iid additive-Haar matrix matches the exact limit formula",
           tv <= 0.02, buf);
}

// ---- 5. product law -------------------------------------------------------
void criterion_5() {
    Rat t(1, 2);
    auto law = hlproc::product_convolution_dist(sig({1, 0}), sig({1, 0}), t);
    bool exact_ok = law.probs.at(sig({2, 0})) == Rat(2, 3) &&
                    law.probs.at(sig({1, 1})) == Rat(1, 3);
    const int trials = 10000, precision = 16;
    padic::PadicRing ring(2, precision);
    RandomStream rng(6, 0);
    long long c20 = 0, c11 = 0;
    for (int i = 0; i < trials; ++i) {
        auto bi_invariant = [&]() {
            auto u = padic::haar_gl(2, 2, precision, rng);
            auto v = padic::haar_gl(2, 2, precision, rng);
            auto d = padic::PadicMatrix::diagonal_powers(ring, 2, 2, sig({1, 0}));
            return padic::matmul(padic::matmul(u, d), v);
        };
        auto sn = padic::smith(padic::matmul(bi_invariant(), bi_invariant()));
        auto s = sn.to_signature();
        c20 += s == sig({2, 0});
        c11 += s == sig({1, 1});
    }
    double f20 = static_cast<double>(c20) / trials, f11 = static_cast<double>(c11) / trials;
    bool pass = exact_ok && c20 + c11 == trials && std::abs(f20 - 2.0 / 3) <= 0.015 &&
                std::abs(f11 - 1.0 / 3) <= 0.015;
    std::snprintf(buf, sizeof buf,
                  "exact law {2/3, 1/3}, freq(2,0) = %.4f, freq(1,1) = %.4f (+-0.015)",
                  f20, f11);
    report(5, "SN(AB) for SN(A)=SN(B)=(1,0) follows the product convolution", pass, buf);
}

// ---- 6. matrix chain == particle process ---------------------------------
void criterion_6() {
    const int trials = 10000, k = 5;
    hlproc::Specialization spec;
    spec.t = Rat(1, 2);
    spec.vars = {hlproc::matrix_step_variable(2, 4, spec.t)};
    stats::EmpiricalDist em, ep;
    padic::ChainOptions copts;
    for (int i = 0; i < trials; ++i) {
        RandomStream rng_m(7, static_cast<uint64_t>(2 * i));
        RandomStream rng_p(7, static_cast<uint64_t>(2 * i + 1));
        em.add(padic::sn_product_chain(2, {4}, 2, k, rng_m, copts).steps.back());
        ep.add(hlproc::run_process(2, spec, k, rng_p).steps.back());
    }
    auto chi = stats::two_sample_chi_square(em, ep);
    std::snprintf(buf, sizeof buf, "two-sample chi2 p = %.4f (>= 0.001)", chi.p_value);
    report(6, "time-5 marginals of matrix chain and particle sampler agree (n=2, N=4)",
           chi.p_value >= 0.001, buf);
}

// ---- 7. law of large numbers ----------------------------------------------
void criterion_7() {
    const int k = 5000;
    hlproc::Specialization spec;
    spec.t = Rat(1, 2);
    spec.vars = {hlproc::GeneralizedVariable{spec.t, hlproc::kInfiniteLength}};
    RandomStream rng(8, 0);
    auto traj = hlproc::run_process(3, spec, k, rng);
    bool pass = true;
    std::string detail;
    for (int i = 1; i <= 3; ++i) {
        double rate = static_cast<double>(traj.steps.back()[i - 1]) / k;
        double target = 1.0 / ((1 << i) - 1);
        double bound = 5.0 * asym::clt_scale(i, spec, k) / k;
        pass = pass && std::abs(rate - target) <= bound;
        std::snprintf(buf, sizeof buf, "%si=%d: %.5f vs %.5f (+-%.5f)",
                      i > 1 ? "; " : "", i, rate, target, bound);
        detail += buf;
    }
    report(7, "LLN rates 1/(2^i - 1) at k=5000 (n=3, iid entries)", pass, detail);
}

// ---- 8. functional CLT -----------------------------------------------------
void criterion_8() {
    const int k = 500, trials = 2000;
    hlproc::Specialization spec;
    spec.t = Rat(1, 2);
    spec.vars = {hlproc::GeneralizedVariable{spec.t, hlproc::kInfiniteLength}};
    std::vector<std::vector<double>> f1(2), fhalf(2);
    for (auto& v : f1) v.resize(trials);
    for (auto& v : fhalf) v.resize(trials);
    for (int tr = 0; tr < trials; ++tr) {
        RandomStream rng(9, static_cast<uint64_t>(tr));
        auto traj = hlproc::run_process(2, spec, k, rng);
        for (int i = 1; i <= 2; ++i) {
            auto path = asym::rescale_path(traj, i, spec);
            f1[static_cast<size_t>(i - 1)][static_cast<size_t>(tr)] = path(1.0);
            fhalf[static_cast<size_t>(i - 1)][static_cast<size_t>(tr)] = path(0.5);
        }
    }
    bool pass = true;
    std::string detail;
    for (int i = 0; i < 2; ++i) {
        auto rep = stats::normality_report(f1[static_cast<size_t>(i)]);
        bool ok = rep.variance > 0.9 && rep.variance < 1.1 &&
                  std::abs(rep.skewness) <= 0.1 &&
                  std::abs(rep.excess_kurtosis) <= 0.25 && rep.ks_to_normal <= 0.03;
        pass = pass && ok;
        std::snprintf(buf, sizeof buf, "%si=%d: var %.3f, skew %.3f, kurt %.3f, KS %.3f",
                      i > 0 ? "; " : "", i + 1, rep.variance, rep.skewness,
                      rep.excess_kurtosis, rep.ks_to_normal);
        detail += buf;
    }
    std::vector<std::pair<double, double>> cross, incr;
    for (int tr = 0; tr < trials; ++tr) {
        cross.emplace_back(f1[0][static_cast<size_t>(tr)], f1[1][static_cast<size_t>(tr)]);
        incr.emplace_back(fhalf[0][static_cast<size_t>(tr)],
                          f1[0][static_cast<size_t>(tr)] - fhalf[0][static_cast<size_t>(tr)]);
    }
    double c1 = stats::independence_report(cross).correlation;
    double c2 = stats::independence_report(incr).correlation;
    pass = pass && std::abs(c1) <= 0.05 && std::abs(c2) <= 0.05;
    std::snprintf(buf, sizeof buf, "; cross-corr %.3f, incr-corr %.3f", c1, c2);
    detail += buf;
    report(8, "functional CLT at k=500, 2000 trials (n=2, iid entries)", pass, detail);
    if (!pass) {
        // The per-step jump of particle i under the infinite geometric
        // variable is exactly Geom(t^i) (the per-index pgf telescopes),
        // so the interaction-free reference for lambda_i(k) is a
        // negative binomial with skewness (1 + t^i)/sqrt(k t^i). At
        // k=500 that is 0.0949 (i=1) and 0.1118 (i=2): the i=2 value
        // exceeds the 0.1 threshold for any correct sampler, and the
        // lattice spacing plus the bounded interaction offset push the
        // i=2 KS distance to ~0.033 as well. The thresholds would be met
        // from k ~ 650 on; at the pinned k=500 this criterion measures
        // the finite-k rate, not an implementation defect.
        for (int i = 1; i <= 2; ++i) {
            double y = to_double(rat_pow(spec.t, i));
            std::printf("      note: exact reference skewness (negative binomial) "
                        "at k=%d, i=%d: %.4f\n",
                        k, i, (1 + y) / std::sqrt(k * y));
        }
    }
}

// ---- 9. Lyapunov exponents -------------------------------------------------
void criterion_9() {
    const int n = 6, k = 5000, trials = 20;
    hlproc::Specialization spec;
    spec.t = Rat(1, 2);
    spec.vars = {hlproc::GeneralizedVariable{spec.t, hlproc::kInfiniteLength}};
    std::vector<double> rate(static_cast<size_t>(n), 0.0);
    for (int tr = 0; tr < trials; ++tr) {
        RandomStream rng(10, static_cast<uint64_t>(tr));
        auto traj = hlproc::run_process(n, spec, k, rng);
        for (int i = 0; i < n; ++i)
            rate[static_cast<size_t>(i)] +=
                static_cast<double>(traj.steps.back()[i]) / k / trials;
    }
    asym::FrequencyProfile rho{{{hlproc::kInfiniteLength, Rat(1)}}};
    auto pred = asym::lyapunov_predict(n, rho, 2);
    bool exact_ok = pred.normalized_ratios[0] == Rat(64, 63) &&
                    pred.normalized_ratios[1] == Rat(64, 31);
    bool emp_ok = true;
    std::string detail;
    for (int i = 1; i <= 2; ++i) {
        double observed = rate[static_cast<size_t>(n - i)];  // part n-i+1
        double target = 1.0 / ((1 << (n - i + 1)) - 1);
        emp_ok = emp_ok && std::abs(observed - target) <= 0.1 * target;
        std::snprintf(buf, sizeof buf, "%sL_%d: %.6f vs %.6f", i > 1 ? "; " : "", i,
                      observed, target);
        detail += buf;
    }
    detail += exact_ok ? "; predicted ratios 64/63, 64/31 exact" : "; ratio mismatch";
    report(9, "Lyapunov exponents at n=6 within 10%, exact normalized ratios",
           emp_ok && exact_ok, detail);
}

// ---- 10. exact identity suites ---------------------------------------------
void criterion_10() {
    Rat t(1, 2);
    bool a_ok = true;
    for (int n = 1; n <= 4 && a_ok; ++n) {
        for_all_signatures(n, 0, 6, [&](const Signature& lam) {
            if (!a_ok || lam.sum() > 6) return;
            if (symfunc::principal_p(lam, Rat(1), t) !=
                symfunc::hl_eval_p(lam, symfunc::geometric_values(Rat(1), t, n), t))
                a_ok = false;
        });
    }
    bool b_ok = true;
    for (int n = 1; n <= 3 && b_ok; ++n) {
        std::vector<Signature> sigs;
        for_all_signatures(n, 0, 4, [&](const Signature& s) {
            if (s.sum() <= 4) sigs.push_back(s);
        });
        for (const auto& lam : sigs) {
            for (const auto& mu : sigs) {
                if (hlproc::product_convolution_dist(lam, mu, t).total() != 1) {
                    b_ok = false;
                    break;
                }
            }
            if (!b_ok) break;
        }
    }
    std::vector<Rat> a = {Rat(1), t};
    std::vector<Rat> b = {t, t * t};
    Rat kernel = symfunc::cauchy_kernel_hl(a, b, t);
    Rat partial = 0;
    for_all_signatures(2, 0, 40, [&](const Signature& lam) {
        if (lam.sum() > 40) return;
        partial += symfunc::hl_eval_p(lam, a, t) * symfunc::hl_eval_q(lam, b, t);
    });
    Rat defect = kernel - partial;
    bool c_ok = defect > 0 && defect < Rat(1, Int(1000000000));
    std::snprintf(buf, sizeof buf,
                  "(a) principal==branching %s; (b) convolution sums to 1 %s; "
                  "(c) Cauchy defect %.2e < 1e-9",
                  a_ok ? "ok" : "FAIL", b_ok ? "ok" : "FAIL", to_double(defect));
    report(10, "exact identity suites", a_ok && b_ok && c_ok, buf);
}

// ---- 11. block factorization stabilization ---------------------------------
void criterion_11() {
    Rat t(1, 2);
    std::vector<symfunc::FactorBlock> blocks = {{1, sig({0, 0})}, {0, sig({0})}};
    std::vector<std::vector<long long>> monomials = {
        {0, 0, 0}, {-1, 0, 1}, {-1, -1, 2}, {-2, 0, 2}, {-1, 1, 0}};
    bool pass = true;
    long long worst_d0 = 0;
    for (const auto& mono : monomials) {
        auto rep = symfunc::verify_factorization(blocks, 12, mono, Rat(0), t);
        // the limit must also match an independent direct expansion of
        // the factorized kernel product
        Rat oracle = 0;
        for (long long l13 = 0; l13 <= 6; ++l13) {
            for (long long l23 = 0; l23 <= 6; ++l23) {
                long long e1 = -l13, e2 = -l23, e3 = l13 + l23;
                if (e1 == mono[0] && e2 == mono[1] && e3 == mono[2]) {
                    Rat w = 1;
                    if (l13 > 0) w *= 1 - t;
                    if (l23 > 0) w *= 1 - t;
                    oracle += w;
                }
            }
        }
        pass = pass && rep.stabilized && rep.limit_coefficient == oracle;
        if (rep.stabilized) worst_d0 = std::max(worst_d0, *rep.stabilized_at);
    }
    std::snprintf(buf, sizeof buf, "all monomials stabilized by D0 <= %lld, "
                  "limits equal the kernel-expansion oracle", worst_d0);
    report(11, "normalized coefficients of the two-block family stabilize exactly",
           pass && worst_d0 <= 12, buf);
}

// ---- 12. structure-coefficient measure convergence -------------------------
void criterion_12() {
    Rat t(1, 2);
    std::vector<Rat> a = {Rat(1), t, t * t};
    // limits for nu = (v): Q_{(v)/(0)}(1) P_(v)(t^2) / (P_(0)(t^2) Pi(1; t^2))
    auto rhs = [&](long long v) {
        Rat q = v == 0 ? Rat(1) : (1 - t);
        return q * rat_pow(t, 2 * v) * (1 - t * t) / (1 - t * t * t);
    };
    double prev_err = 1e9;
    bool decreasing = true;
    double final_err = 1e9;
    std::string detail;
    for (long long d : {2, 4, 6, 8}) {
        Signature lamD({std::vector<long long>{d, d, 0}});
        Signature muD({std::vector<long long>{d, 0, 0}});
        symfunc::PExpansionCache cache(Rat(0), t);
        auto coeffs = symfunc::structure_coeffs(lamD, muD, Rat(0), t, &cache);
        Rat p_lam = symfunc::hl_eval_p(lamD, a, t);
        Rat p_mu = symfunc::hl_eval_p(muD, a, t);
        double err = 0;
        for (long long v = 0; v <= 2; ++v) {
            Rat m_d = 0;
            for (const auto& [kappa, c] : coeffs) {
                if (kappa[2] != v) continue;
                m_d += c * symfunc::hl_eval_p(kappa, a, t) / (p_lam * p_mu);
            }
            err = std::max(err, std::abs(to_double(m_d - rhs(v))));
        }
        // weakly decreasing: the q=0 coefficients stabilize exactly, so
        // the error typically hits 0 and stays there
        decreasing = decreasing && err <= prev_err;
        prev_err = err;
        final_err = err;
        std::snprintf(buf, sizeof buf, "%sD=%lld: %.2e", d > 2 ? ", " : "", d, err);
        detail += buf;
    }
    report(12, "corner-measure limit of structure coefficients (n=1, m=2, N=3)",
           decreasing && final_err < 1e-3, detail + "; decreasing, final < 1e-3");
}

// ---- 13. iid square matrix: probability of trivial SN ----------------------
void criterion_13() {
    const int n = 6, trials = 10000, precision = 8;
    RandomStream rng(11, 0);
    int zero_hits = 0;
    for (int i = 0; i < trials; ++i) {
        auto m = padic::haar_additive(n, n, 2, precision, rng);
        auto sn = padic::smith(m);
        zero_hits += !sn.is_censored() && sn.to_signature() == Signature::zeros(n);
    }
    double freq = static_cast<double>(zero_hits) / trials;
    // truncated q-Pochhammer oracle for (1/2; 1/2)_inf
    auto inf = symfunc::pochhammer_inf(Rat(1, 2), Rat(1, 2), 1e-12);
    bool pass = std::abs(freq - inf.value) <= 0.015;
    std::snprintf(buf, sizeof buf, "freq %.4f vs (1/2;1/2)_inf = %.6f (+-0.015)", freq,
                  inf.value);
    report(13, "6x6 iid matrix: Pr(SN = 0) near the n->infinity product", pass, buf);
}

}  // namespace

int main() {
    std::printf("acceptance suite: p-adic singular numbers vs Hall-Littlewood theory\n");
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_12();
    criterion_13();
    if (g_failures == 0) {
        std::printf("all 13 criteria passed\n");
        return 0;
    }
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
}
