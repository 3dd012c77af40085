#ifndef BELLWIT_IO_HPP
#define BELLWIT_IO_HPP

#include <string>

#include <json.hpp>

#include "bellwit/optimize.hpp"
#include "bellwit/witness.hpp"

namespace bellwit::io {

using nlohmann::json;

// JSON shapes:
//   tensor      {"m", "family", "delta", "coeffs"[a][b][c]}
//   correlators {"m", "values"[a][b][c]}
//   angles      {"m", "theta": {"A": [...], "B": [...], "C": [...]}, "phi": {...}}
// Readers validate the module invariants and throw invalid_data naming the
// violated one.

json tensor_to_json(const BellTensor& t);
BellTensor tensor_from_json(const json& j);

json correlations_to_json(const CorrelationTensor& c);
CorrelationTensor correlations_from_json(const json& j);

json angles_to_json(const MeasurementAngles& a);
MeasurementAngles angles_from_json(const json& j);

json bounds_report_to_json(const BoundsReport& r);
json certification_to_json(const CertificationResult& r);
json opt_result_to_json(const OptResult& r);

std::string sweep_to_csv(const std::vector<SweepRow>& rows);
json sweep_to_json(const std::vector<SweepRow>& rows);
std::string bounds_report_to_csv(const BoundsReport& r);
std::string certification_to_csv(const CertificationResult& r);

json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// Serialization used everywhere: 2-space indent, keys in lexicographic
/// order (nlohmann's default map ordering), shortest-round-trip floats.
std::string dump(const json& j);

}  // namespace bellwit::io

#endif
