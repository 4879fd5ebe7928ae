#include <padichl/json_io.hpp>

#include <algorithm>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

namespace padichl {
namespace io {

json signature_to_json(const Signature& s) {
    json arr = json::array();
    for (long long p : s.parts()) arr.push_back(p);
    return arr;
}

Signature signature_from_json(const json& j) {
    std::vector<long long> parts;
    for (const auto& v : j) parts.push_back(v.get<long long>());
    return Signature(std::move(parts));
}

json extended_signature_to_json(const ExtendedSignature& s) {
    json arr = json::array();
    std::string sentinel = ">=" + std::to_string(s.precision());
    for (int i = 0; i < s.censored_count(); ++i) arr.push_back(sentinel);
    for (long long p : s.finite_parts()) arr.push_back(p);
    return arr;
}

json matrix_to_json(const padic::PadicMatrix& m) {
    json j;
    j["p"] = m.ring().p;
    j["D"] = m.ring().precision;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    json entries = json::array();
    for (int i = 0; i < m.rows(); ++i)
        for (int k = 0; k < m.cols(); ++k) entries.push_back(m.entry(i, k).str());
    j["entries"] = entries;
    return j;
}

padic::PadicMatrix matrix_from_json(const json& j) {
    padic::PadicRing ring(j.at("p").get<long long>(), j.at("D").get<int>());
    int rows = j.at("rows").get<int>(), cols = j.at("cols").get<int>();
    std::vector<Int> entries;
    for (const auto& e : j.at("entries")) entries.emplace_back(e.get<std::string>());
    return padic::PadicMatrix(ring, rows, cols, std::move(entries));
}

json dist_to_json(const hlproc::ExactDist& d) {
    json arr = json::array();
    for (const auto& [sig, p] : d.probs) {
        json rec;
        rec["signature"] = signature_to_json(sig);
        rec["prob_num"] = numerator(p).str();
        rec["prob_den"] = denominator(p).str();
        arr.push_back(rec);
    }
    json j;
    j["atoms"] = arr;
    j["tail_num"] = numerator(d.tail).str();
    j["tail_den"] = denominator(d.tail).str();
    return j;
}

hlproc::ExactDist dist_from_json(const json& j) {
    hlproc::ExactDist d;
    for (const auto& rec : j.at("atoms")) {
        Signature sig = signature_from_json(rec.at("signature"));
        Rat p(Int(rec.at("prob_num").get<std::string>()),
              Int(rec.at("prob_den").get<std::string>()));
        d.probs.emplace(sig, p);
    }
    d.tail = Rat(Int(j.at("tail_num").get<std::string>()),
                 Int(j.at("tail_den").get<std::string>()));
    return d;
}

json empirical_to_json(const stats::EmpiricalDist& d) {
    json arr = json::array();
    for (const auto& [sig, c] : d.counts) {
        json rec;
        rec["signature"] = signature_to_json(sig);
        rec["count"] = c;
        arr.push_back(rec);
    }
    json j;
    j["counts"] = arr;
    j["total"] = d.total;
    return j;
}

json gof_report_to_json(const stats::GofReport& r) {
    json j;
    j["kind"] = r.kind;
    j["statistic"] = r.statistic;
    j["dof"] = r.dof;
    j["p_value"] = r.p_value;
    j["truncation_note"] = r.truncation_note;
    j["degenerate"] = r.degenerate;
    j["threshold"] = r.threshold;
    j["passed"] = r.passed;
    return j;
}

std::string gof_report_markdown(const stats::GofReport& r) {
    std::ostringstream os;
    os << "| " << r.kind << " | statistic " << std::setprecision(6) << r.statistic
       << " | dof " << r.dof << " | p " << r.p_value << " | "
       << (r.passed ? "PASS" : "FAIL") << " |";
    if (!r.truncation_note.empty()) os << " " << r.truncation_note;
    return os.str();
}

void trajectory_to_csv(const hlproc::Trajectory& t, std::ostream& os) {
    os << "k";
    for (int i = 1; i <= t.n; ++i) os << ",lambda_" << i;
    os << "\n";
    for (size_t k = 0; k < t.steps.size(); ++k) {
        os << k;
        for (int i = 0; i < t.n; ++i) os << "," << t.steps[k][i];
        os << "\n";
    }
}

hlproc::Trajectory trajectory_from_csv(std::istream& is) {
    hlproc::Trajectory t;
    std::string line;
    if (!std::getline(is, line)) throw argument_error("trajectory csv: empty input");
    t.n = static_cast<int>(std::count(line.begin(), line.end(), ',')) ;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::vector<long long> parts;
        std::stringstream ss(line);
        std::string field;
        bool first = true;
        while (std::getline(ss, field, ',')) {
            if (first) {
                first = false;
                continue;
            }
            parts.push_back(std::stoll(field));
        }
        t.steps.push_back(Signature(std::move(parts)));
    }
    return t;
}

std::string content_hash(const std::string& content) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : content) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

}  // namespace io
}  // namespace padichl
