// Python bindings for the main operations. Exact rationals cross the
// boundary as fractions.Fraction; signatures as lists of ints.
#include <padichl/asym.hpp>
#include <padichl/factorization.hpp>
#include <padichl/insertion.hpp>
#include <padichl/kernels.hpp>
#include <padichl/measures.hpp>
#include <padichl/padic.hpp>
#include <padichl/stats.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace padichl;

namespace {

Rat to_rat(const py::object& obj) {
    return parse_rational(py::str(obj).cast<std::string>());
}

py::object to_fraction(const Rat& r) {
    static py::object ctor = py::module_::import("fractions").attr("Fraction");
    return ctor(rat_string(r));
}

Signature to_sig(const std::vector<long long>& parts) { return Signature(parts); }

py::list sig_to_list(const Signature& s) {
    py::list out;
    for (long long p : s.parts()) out.append(p);
    return out;
}

py::dict dist_to_dict(const hlproc::ExactDist& d) {
    py::dict out;
    for (const auto& [sig, p] : d.probs) {
        py::tuple key(sig.length());
        for (int i = 0; i < sig.length(); ++i) key[static_cast<size_t>(i)] = sig[i];
        out[key] = to_fraction(p);
    }
    return out;
}

std::vector<Rat> to_rats(const py::iterable& values) {
    std::vector<Rat> out;
    for (const auto& v : values) out.push_back(to_rat(py::reinterpret_borrow<py::object>(v)));
    return out;
}

hlproc::GeneralizedVariable to_var(const py::object& x, long long m) {
    return hlproc::GeneralizedVariable{to_rat(x), m};
}

padic::PadicMatrix matrix_from_rows(const std::vector<std::vector<std::string>>& rows,
                                    long long p, int precision) {
    if (rows.empty()) throw argument_error("matrix: no rows");
    padic::PadicRing ring(p, precision);
    int r = static_cast<int>(rows.size());
    int c = static_cast<int>(rows[0].size());
    std::vector<Int> entries;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != c)
            throw argument_error("matrix: ragged rows");
        for (const auto& v : row) entries.emplace_back(v);
    }
    return padic::PadicMatrix(ring, r, c, std::move(entries));
}

py::list matrix_to_rows(const padic::PadicMatrix& m) {
    py::list rows;
    for (int i = 0; i < m.rows(); ++i) {
        py::list row;
        for (int j = 0; j < m.cols(); ++j)
            row.append(py::int_(py::str(m.entry(i, j).str())));
        rows.append(row);
    }
    return rows;
}

std::vector<std::vector<std::string>> rows_from_pylist(const py::iterable& rows) {
    std::vector<std::vector<std::string>> out;
    for (const auto& row : rows) {
        std::vector<std::string> r;
        for (const auto& v : py::reinterpret_borrow<py::iterable>(row))
            r.push_back(py::str(v).cast<std::string>());
        out.push_back(std::move(r));
    }
    return out;
}

py::list extended_to_list(const ExtendedSignature& s) {
    py::list out;
    for (int i = 0; i < s.censored_count(); ++i)
        out.append(py::str(">=" + std::to_string(s.precision())));
    for (long long p : s.finite_parts()) out.append(p);
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "p-adic random matrix / Hall-Littlewood process toolkit";

    py::register_exception<domain_error>(m, "DomainError");
    py::register_exception<argument_error>(m, "ArgumentError");
    py::register_exception<resource_error>(m, "ResourceError");

    py::class_<RandomStream>(m, "RandomStream")
        .def(py::init<uint64_t, uint64_t>(), py::arg("seed"), py::arg("stream") = 0)
        .def("next_u64", &RandomStream::next_u64);

    // ---- symmetric functions ----
    m.def(
        "pochhammer",
        [](const py::object& a, const py::object& q, long long n) {
            return to_fraction(symfunc::pochhammer(to_rat(a), to_rat(q), n));
        },
        py::arg("a"), py::arg("q"), py::arg("n"));
    m.def(
        "pochhammer_inf",
        [](const py::object& a, const py::object& q, double tol) {
            auto r = symfunc::pochhammer_inf(to_rat(a), to_rat(q), tol);
            return py::make_tuple(r.value, r.tail_bound);
        },
        py::arg("a"), py::arg("q"), py::arg("tol") = 1e-12);
    m.def(
        "hl_eval_p",
        [](const std::vector<long long>& lam, const py::iterable& values,
           const py::object& t) {
            return to_fraction(symfunc::hl_eval_p(to_sig(lam), to_rats(values), to_rat(t)));
        },
        py::arg("signature"), py::arg("values"), py::arg("t"));
    m.def(
        "hl_eval_q",
        [](const std::vector<long long>& lam, const py::iterable& values,
           const py::object& t) {
            return to_fraction(symfunc::hl_eval_q(to_sig(lam), to_rats(values), to_rat(t)));
        },
        py::arg("signature"), py::arg("values"), py::arg("t"));
    m.def(
        "hl_skew_p",
        [](const std::vector<long long>& lam, const std::vector<long long>& inner,
           const py::iterable& values, const py::object& t) {
            return to_fraction(
                symfunc::hl_skew_p(to_sig(lam), to_sig(inner), to_rats(values), to_rat(t)));
        },
        py::arg("outer"), py::arg("inner"), py::arg("values"), py::arg("t"));
    m.def(
        "hl_skew_q",
        [](const std::vector<long long>& lam, const std::vector<long long>& inner,
           const py::iterable& values, const py::object& t) {
            return to_fraction(
                symfunc::hl_skew_q(to_sig(lam), to_sig(inner), to_rats(values), to_rat(t)));
        },
        py::arg("outer"), py::arg("inner"), py::arg("values"), py::arg("t"));
    m.def(
        "principal_p",
        [](const std::vector<long long>& lam, const py::object& x, const py::object& t) {
            return to_fraction(symfunc::principal_p(to_sig(lam), to_rat(x), to_rat(t)));
        },
        py::arg("signature"), py::arg("x"), py::arg("t"));
    m.def(
        "principal_q",
        [](const std::vector<long long>& lam, const py::object& x, long long num_vars,
           const py::object& t) {
            return to_fraction(
                symfunc::principal_q(to_sig(lam), to_rat(x), num_vars, to_rat(t)));
        },
        py::arg("signature"), py::arg("x"), py::arg("num_vars"), py::arg("t"),
        "num_vars = -1 means the infinite geometric specialization");
    m.def(
        "cauchy_kernel",
        [](const py::iterable& avals, const py::iterable& bvals, const py::object& t) {
            return to_fraction(symfunc::cauchy_kernel_hl(to_rats(avals), to_rats(bvals),
                                                         to_rat(t)));
        },
        py::arg("avals"), py::arg("bvals"), py::arg("t"));
    m.def(
        "structure_coeffs",
        [](const std::vector<long long>& lam, const std::vector<long long>& mu,
           const py::object& q, const py::object& t) {
            py::dict out;
            for (const auto& [nu, c] :
                 symfunc::structure_coeffs(to_sig(lam), to_sig(mu), to_rat(q), to_rat(t))) {
                py::tuple key(nu.length());
                for (int i = 0; i < nu.length(); ++i) key[static_cast<size_t>(i)] = nu[i];
                out[key] = to_fraction(c);
            }
            return out;
        },
        py::arg("lam"), py::arg("mu"), py::arg("q"), py::arg("t"));
    m.def(
        "macdonald_branch",
        [](const std::vector<long long>& outer, const std::vector<long long>& inner,
           const std::string& kind, const py::object& q, const py::object& t) {
            symfunc::BranchKind k = kind == "psi" ? symfunc::BranchKind::Psi
                                                  : symfunc::BranchKind::Phi;
            if (kind != "psi" && kind != "phi")
                throw argument_error("macdonald_branch: kind must be 'psi' or 'phi'");
            return to_fraction(
                symfunc::macdonald_branch(to_sig(outer), to_sig(inner), k, to_rat(q), to_rat(t)));
        },
        py::arg("outer"), py::arg("inner"), py::arg("kind"), py::arg("q"), py::arg("t"));
    m.def(
        "verify_factorization",
        [](const std::vector<std::pair<long long, std::vector<long long>>>& blocks,
           long long d_max, const std::vector<long long>& monomial, const py::object& q,
           const py::object& t) {
            std::vector<symfunc::FactorBlock> bl;
            for (const auto& [level, shape] : blocks) bl.push_back({level, to_sig(shape)});
            auto rep = symfunc::verify_factorization(bl, d_max, monomial, to_rat(q), to_rat(t));
            py::dict out;
            out["d_values"] = rep.d_values;
            py::list coeffs;
            for (const auto& c : rep.coefficients) coeffs.append(to_fraction(c));
            out["coefficients"] = coeffs;
            out["limit"] = to_fraction(rep.limit_coefficient);
            out["stabilized"] = rep.stabilized;
            out["stabilized_at"] =
                rep.stabilized_at ? py::object(py::int_(*rep.stabilized_at)) : py::none();
            return out;
        },
        py::arg("blocks"), py::arg("d_max"), py::arg("monomial"), py::arg("q"), py::arg("t"));

    // ---- particle system ----
    m.def(
        "insert",
        [](const std::vector<long long>& impulses, const std::vector<long long>& lam) {
            return sig_to_list(hlproc::insert(impulses, to_sig(lam)));
        },
        py::arg("impulses"), py::arg("signature"));
    m.def(
        "gx_pmf",
        [](long long ell, const py::object& x, const py::object& t) {
            return to_fraction(hlproc::gx_pmf(ell, to_rat(x), to_rat(t)));
        },
        py::arg("ell"), py::arg("x"), py::arg("t"));
    m.def(
        "sample_gx",
        [](const py::object& x, const py::object& t, RandomStream& rng) {
            return hlproc::sample_gx(to_rat(x), to_rat(t), rng);
        },
        py::arg("x"), py::arg("t"), py::arg("rng"));
    m.def(
        "step_generalized",
        [](const std::vector<long long>& lam, const py::object& x, long long m,
           const py::object& t, RandomStream& rng) {
            return sig_to_list(
                hlproc::step_generalized(to_sig(lam), to_var(x, m), to_rat(t), rng));
        },
        py::arg("signature"), py::arg("x"), py::arg("m"), py::arg("t"), py::arg("rng"),
        "m = -1 for the infinite geometric progression");
    m.def(
        "cauchy_kernel_prob",
        [](const std::vector<long long>& lam, const std::vector<long long>& nu,
           const py::object& x, const py::object& t) {
            return to_fraction(
                hlproc::cauchy_kernel_prob(to_sig(lam), to_sig(nu), to_rat(x), to_rat(t)));
        },
        py::arg("lam"), py::arg("nu"), py::arg("x"), py::arg("t"));
    m.def(
        "kernel_distribution",
        [](const std::vector<long long>& lam, const py::object& x, const py::object& t) {
            return dist_to_dict(
                hlproc::cauchy_kernel_distribution(to_sig(lam), to_rat(x), to_rat(t)));
        },
        py::arg("lam"), py::arg("x"), py::arg("t"));
    m.def(
        "product_convolution",
        [](const std::vector<long long>& lam, const std::vector<long long>& mu,
           const py::object& t) {
            return dist_to_dict(
                hlproc::product_convolution_dist(to_sig(lam), to_sig(mu), to_rat(t)));
        },
        py::arg("lam"), py::arg("mu"), py::arg("t"));
    m.def(
        "corners_row_dist",
        [](const std::vector<long long>& lam, int d, const py::object& t) {
            return dist_to_dict(hlproc::corners_row_dist(to_sig(lam), d, to_rat(t)));
        },
        py::arg("lam"), py::arg("d"), py::arg("t"));
    m.def(
        "corners_col_dist",
        [](const std::vector<long long>& lam, int n, int N, int k, const py::object& t) {
            return dist_to_dict(hlproc::corners_col_dist(to_sig(lam), n, N, k, to_rat(t)));
        },
        py::arg("lam"), py::arg("n"), py::arg("N"), py::arg("k"), py::arg("t"));
    m.def(
        "corner_sn_measure",
        [](int n, int mm, int N, const py::object& t) {
            return dist_to_dict(hlproc::corner_sn_measure(n, mm, N, to_rat(t)));
        },
        py::arg("n"), py::arg("m"), py::arg("N"), py::arg("t"));
    m.def(
        "additive_sn_measure",
        [](int n, int mm, const py::object& t) {
            return dist_to_dict(hlproc::additive_sn_measure(n, mm, to_rat(t)));
        },
        py::arg("n"), py::arg("m"), py::arg("t"));
    m.def(
        "run_process",
        [](int n, const py::object& x, long long m, const py::object& t, int k,
           RandomStream& rng) {
            hlproc::Specialization spec;
            spec.t = to_rat(t);
            spec.vars = {to_var(x, m)};
            auto traj = hlproc::run_process(n, spec, k, rng);
            py::list steps;
            for (const auto& s : traj.steps) steps.append(sig_to_list(s));
            return steps;
        },
        py::arg("n"), py::arg("x"), py::arg("m"), py::arg("t"), py::arg("k"), py::arg("rng"));

    // ---- p-adic matrices ----
    m.def(
        "smith",
        [](const py::iterable& rows, long long p, int precision) {
            return extended_to_list(
                padic::smith(matrix_from_rows(rows_from_pylist(rows), p, precision)));
        },
        py::arg("rows"), py::arg("p"), py::arg("precision"),
        "singular numbers mod p^precision; parts >= precision appear as '>=D'");
    m.def(
        "matmul",
        [](const py::iterable& a, const py::iterable& b, long long p, int precision) {
            return matrix_to_rows(
                padic::matmul(matrix_from_rows(rows_from_pylist(a), p, precision),
                              matrix_from_rows(rows_from_pylist(b), p, precision)));
        },
        py::arg("a"), py::arg("b"), py::arg("p"), py::arg("precision"));
    m.def(
        "haar_gl",
        [](int n, long long p, int precision, RandomStream& rng) {
            return matrix_to_rows(padic::haar_gl(n, p, precision, rng));
        },
        py::arg("n"), py::arg("p"), py::arg("precision"), py::arg("rng"));
    m.def(
        "haar_additive",
        [](int rows, int cols, long long p, int precision, RandomStream& rng) {
            return matrix_to_rows(padic::haar_additive(rows, cols, p, precision, rng));
        },
        py::arg("rows"), py::arg("cols"), py::arg("p"), py::arg("precision"), py::arg("rng"));
    m.def(
        "corner",
        [](const py::iterable& rows, int nrows, int ncols, long long p, int precision) {
            return matrix_to_rows(padic::corner(
                matrix_from_rows(rows_from_pylist(rows), p, precision), nrows, ncols));
        },
        py::arg("rows"), py::arg("nrows"), py::arg("ncols"), py::arg("p"), py::arg("precision"));
    m.def(
        "sn_product_chain",
        [](int n, const std::vector<long long>& Ns, long long p, int k, RandomStream& rng,
           int precision) {
            padic::ChainOptions opts;
            opts.precision = precision;
            auto traj = padic::sn_product_chain(n, Ns, p, k, rng, opts);
            py::list steps;
            for (const auto& s : traj.steps) steps.append(sig_to_list(s));
            return steps;
        },
        py::arg("n"), py::arg("Ns"), py::arg("p"), py::arg("k"), py::arg("rng"),
        py::arg("precision") = 0, "N = -1 means iid additive-Haar entries");

    // ---- asymptotics ----
    m.def(
        "mean_jump",
        [](int i, const py::object& x, long long m, const py::object& t) {
            return to_fraction(asym::mean_jump(i, to_var(x, m), to_rat(t)));
        },
        py::arg("i"), py::arg("x"), py::arg("m"), py::arg("t"));
    m.def(
        "var_jump",
        [](int i, const py::object& x, long long m, const py::object& t) {
            return to_fraction(asym::var_jump(i, to_var(x, m), to_rat(t)));
        },
        py::arg("i"), py::arg("x"), py::arg("m"), py::arg("t"));
    m.def(
        "lyapunov_predict",
        [](int n, const std::vector<std::pair<long long, std::string>>& profile,
           long long p) {
            asym::FrequencyProfile rho;
            for (const auto& [N, w] : profile) rho.weights.push_back({N, parse_rational(w)});
            auto pred = asym::lyapunov_predict(n, rho, p);
            py::dict out;
            py::list exps, ratios;
            for (const auto& e : pred.exponents) exps.append(to_fraction(e));
            for (const auto& r : pred.normalized_ratios) ratios.append(to_fraction(r));
            out["exponents"] = exps;
            out["normalized_ratios"] = ratios;
            out["c"] = to_fraction(pred.c);
            return out;
        },
        py::arg("n"), py::arg("profile"), py::arg("p"),
        "profile: list of (N, weight) with N = -1 for infinity");

    m.attr("INFINITE") = -1;
}
