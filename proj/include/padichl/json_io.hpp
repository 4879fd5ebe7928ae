// JSON/CSV serialization: signatures as integer arrays (most significant
// first), censored parts as ">=D" strings, matrices with decimal-string
// entries, distributions as {signature, prob_num, prob_den} records,
// trajectories as CSV with header k,lambda_1,...,lambda_n.
#pragma once

#include <padichl/kernels.hpp>
#include <padichl/padic.hpp>
#include <padichl/stats.hpp>
#include <padichl/trajectory.hpp>

#include <json.hpp>

#include <iosfwd>

namespace padichl {
namespace io {

using nlohmann::json;

json signature_to_json(const Signature& s);
Signature signature_from_json(const json& j);

json extended_signature_to_json(const ExtendedSignature& s);

json matrix_to_json(const padic::PadicMatrix& m);
padic::PadicMatrix matrix_from_json(const json& j);

json dist_to_json(const hlproc::ExactDist& d);
hlproc::ExactDist dist_from_json(const json& j);

json empirical_to_json(const stats::EmpiricalDist& d);

json gof_report_to_json(const stats::GofReport& r);
std::string gof_report_markdown(const stats::GofReport& r);

void trajectory_to_csv(const hlproc::Trajectory& t, std::ostream& os);
hlproc::Trajectory trajectory_from_csv(std::istream& is);

// 64-bit FNV-1a content hash, hex-encoded; used to fingerprint configs
std::string content_hash(const std::string& content);

}  // namespace io
}  // namespace padichl
