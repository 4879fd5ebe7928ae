#include <padichl/factorization.hpp>

#include <padichl/qseries.hpp>

#include <functional>

namespace padichl {
namespace symfunc {

namespace {

void validate_blocks(const std::vector<FactorBlock>& blocks) {
    if (blocks.empty()) throw argument_error("factorization: no blocks");
    int total = 0;
    for (size_t i = 0; i < blocks.size(); ++i) {
        if (blocks[i].shape.length() == 0)
            throw argument_error("factorization: empty block shape");
        if (i > 0 && blocks[i - 1].level <= blocks[i].level)
            throw argument_error("factorization: levels must strictly decrease");
        total += blocks[i].shape.length();
    }
    if (total > kMaxExpansionVars)
        throw resource_error("factorization: total length above cap");
}

// coefficient of u^l in (tu;q)_inf/(u;q)_inf  =  (t;q)_l / (q;q)_l
Rat kernel_series_coeff(long long l, const Rat& q, const Rat& t) {
    return pochhammer(t, q, l) / pochhammer(q, q, l);
}

}  // namespace

long long min_valid_d(const std::vector<FactorBlock>& blocks) {
    validate_blocks(blocks);
    long long dmin = 1;
    for (size_t i = 0; i + 1 < blocks.size(); ++i) {
        // need L_i D + min(shape_i) >= L_{i+1} D + max(shape_{i+1})
        long long gap = blocks[i + 1].shape[0] -
                        blocks[i].shape[blocks[i].shape.length() - 1];
        long long slope = blocks[i].level - blocks[i + 1].level;
        if (gap > 0) {
            long long need = (gap + slope - 1) / slope;
            dmin = std::max(dmin, need);
        }
    }
    return dmin;
}

Signature block_signature(const std::vector<FactorBlock>& blocks, long long d) {
    std::vector<long long> parts;
    for (const auto& b : blocks)
        for (long long p : b.shape.parts()) parts.push_back(b.level * d + p);
    return Signature(std::move(parts));
}

Rat factorized_limit_coefficient(const std::vector<FactorBlock>& blocks,
                                 const std::vector<long long>& monomial, const Rat& q,
                                 const Rat& t) {
    validate_blocks(blocks);
    int k = static_cast<int>(blocks.size());
    int n_total = 0;
    std::vector<int> start(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) {
        start[static_cast<size_t>(i)] = n_total;
        n_total += blocks[static_cast<size_t>(i)].shape.length();
    }
    if (static_cast<int>(monomial.size()) != n_total)
        throw argument_error("factorization: monomial has wrong arity");

    std::vector<LaurentPolynomial> block_polys;
    for (const auto& b : blocks) block_polys.push_back(p_polynomial(b.shape, q, t));

    // kernel pairs: (a in block i, b after block i), for i < k-1
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i + 1 < k; ++i) {
        int s_end = start[static_cast<size_t>(i)] + blocks[static_cast<size_t>(i)].shape.length();
        for (int a = start[static_cast<size_t>(i)]; a < s_end; ++a)
            for (int b = s_end; b < n_total; ++b) pairs.emplace_back(a, b);
    }

    // safe cap on the total kernel order: every unit must be absorbed by
    // the target monomial against the finite block-polynomial ranges
    long long l_total_cap = 0;
    for (int v = 0; v < n_total; ++v) {
        long long m_abs = std::llabs(monomial[static_cast<size_t>(v)]);
        long long shape_abs = 0;
        for (const auto& b : blocks)
            shape_abs = std::max({shape_abs, std::llabs(b.shape[0]),
                                  std::llabs(b.shape[b.shape.length() - 1])});
        l_total_cap += m_abs + shape_abs;
    }

    Rat total = 0;
    std::vector<long long> delta(static_cast<size_t>(n_total), 0);
    std::function<void(size_t, long long, const Rat&)> rec = [&](size_t pair_idx,
                                                                 long long l_used,
                                                                 const Rat& weight) {
        if (pair_idx == pairs.size()) {
            Rat contrib = weight;
            for (int i = 0; i < k && contrib != 0; ++i) {
                int r = blocks[static_cast<size_t>(i)].shape.length();
                std::vector<long long> want(static_cast<size_t>(r));
                for (int j = 0; j < r; ++j) {
                    int v = start[static_cast<size_t>(i)] + j;
                    want[static_cast<size_t>(j)] =
                        monomial[static_cast<size_t>(v)] - delta[static_cast<size_t>(v)];
                }
                contrib *= block_polys[static_cast<size_t>(i)].coefficient(want);
            }
            total += contrib;
            return;
        }
        auto [a, b] = pairs[pair_idx];
        for (long long l = 0; l_used + l <= l_total_cap; ++l) {
            Rat w = weight;
            if (l > 0) w *= kernel_series_coeff(l, q, t);
            if (w == 0) break;
            delta[static_cast<size_t>(a)] -= l;
            delta[static_cast<size_t>(b)] += l;
            rec(pair_idx + 1, l_used + l, w);
            delta[static_cast<size_t>(a)] += l;
            delta[static_cast<size_t>(b)] -= l;
        }
    };
    rec(0, 0, Rat(1));
    return total;
}

FactorizationReport verify_factorization(const std::vector<FactorBlock>& blocks,
                                         long long d_max,
                                         const std::vector<long long>& monomial,
                                         const Rat& q, const Rat& t) {
    validate_blocks(blocks);
    if (!(t > 0 && t < 1)) throw argument_error("factorization: need 0 < t < 1");
    if (q < 0 || q >= 1) throw domain_error("factorization: need 0 <= q < 1");
    long long d_min = min_valid_d(blocks);
    if (d_min > d_max) throw argument_error("factorization: d_max below first valid D");

    FactorizationReport report;
    report.limit_coefficient = factorized_limit_coefficient(blocks, monomial, q, t);

    for (long long d = d_min; d <= d_max; ++d) {
        Signature lam = block_signature(blocks, d);
        // target = hat{lambda}(D) + monomial
        std::vector<long long> target(monomial.size());
        size_t v = 0;
        for (const auto& b : blocks)
            for (int j = 0; j < b.shape.length(); ++j, ++v)
                target[v] = b.level * d + monomial[v];
        report.d_values.push_back(d);
        report.coefficients.push_back(p_coefficient(lam, target, q, t));
    }

    if (q == 0) {
        // exact stabilization: constant equal to the limit from some D0 on
        size_t m = report.coefficients.size();
        if (m > 0 && report.coefficients.back() == report.limit_coefficient) {
            size_t first = m;
            while (first > 0 &&
                   report.coefficients[first - 1] == report.limit_coefficient)
                --first;
            report.stabilized = true;
            report.stabilized_at = report.d_values[first];
        }
    }
    return report;
}

}  // namespace symfunc
}  // namespace padichl
