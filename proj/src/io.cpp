#include "bellwit/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace bellwit::io {

namespace {

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fmt17(const std::optional<double>& v) { return v ? fmt17(*v) : std::string(); }

json nested_from_flat(int m, const std::vector<double>& flat) {
  json outer = json::array();
  for (int a = 0; a < m; ++a) {
    json mid = json::array();
    for (int b = 0; b < m; ++b) {
      json inner = json::array();
      for (int c = 0; c < m; ++c)
        inner.push_back(flat[static_cast<std::size_t>((a * m + b) * m + c)]);
      mid.push_back(std::move(inner));
    }
    outer.push_back(std::move(mid));
  }
  return outer;
}

std::vector<double> flat_from_nested(const json& j, int m, const char* what) {
  std::vector<double> flat;
  flat.reserve(static_cast<std::size_t>(m) * m * m);
  if (!j.is_array() || static_cast<int>(j.size()) != m)
    throw invalid_data(std::string(what) + " must be an m x m x m numeric array");
  for (const auto& mid : j) {
    if (!mid.is_array() || static_cast<int>(mid.size()) != m)
      throw invalid_data(std::string(what) + " must be an m x m x m numeric array");
    for (const auto& inner : mid) {
      if (!inner.is_array() || static_cast<int>(inner.size()) != m)
        throw invalid_data(std::string(what) + " must be an m x m x m numeric array");
      for (const auto& v : inner) {
        if (!v.is_number()) throw invalid_data(std::string(what) + " entries must be numbers");
        flat.push_back(v.get<double>());
      }
    }
  }
  return flat;
}

int read_m(const json& j) {
  if (!j.contains("m") || !j.at("m").is_number_integer())
    throw invalid_data("missing integer field 'm'");
  const int m = j.at("m").get<int>();
  if (m < 2) throw invalid_data("m must be at least 2");
  return m;
}

json opt_to_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json tensor_to_json(const BellTensor& t) {
  json j;
  j["m"] = t.m;
  j["family"] = family_name(t.family);
  j["delta"] = opt_to_json(t.delta);
  j["coeffs"] = nested_from_flat(t.m, t.coeffs);
  return j;
}

BellTensor tensor_from_json(const json& j) {
  BellTensor t;
  t.m = read_m(j);
  if (!j.contains("family") || !j.at("family").is_string())
    throw invalid_data("missing string field 'family'");
  t.family = family_from_name(j.at("family").get<std::string>());
  if (j.contains("delta") && !j.at("delta").is_null()) {
    if (!j.at("delta").is_number()) throw invalid_data("'delta' must be a number or null");
    t.delta = j.at("delta").get<double>();
  }
  if (!j.contains("coeffs")) throw invalid_data("missing field 'coeffs'");
  t.coeffs = flat_from_nested(j.at("coeffs"), t.m, "'coeffs'");
  validate(t);
  return t;
}

json correlations_to_json(const CorrelationTensor& c) {
  json j;
  j["m"] = c.m;
  j["values"] = nested_from_flat(c.m, c.values);
  return j;
}

CorrelationTensor correlations_from_json(const json& j) {
  CorrelationTensor c;
  c.m = read_m(j);
  if (!j.contains("values")) throw invalid_data("missing field 'values'");
  c.values = flat_from_nested(j.at("values"), c.m, "'values'");
  for (double v : c.values)
    if (std::abs(v) > 1.0 + kCorrelatorTol)
      throw invalid_data("correlator entries must lie in [-1, 1] within 1e-9");
  return c;
}

json angles_to_json(const MeasurementAngles& a) {
  json j;
  j["m"] = a.m;
  for (int p = 0; p < 3; ++p) {
    const std::string name = party_name(static_cast<Party>(p));
    j["theta"][name] = a.theta[p];
    j["phi"][name] = a.phi[p];
  }
  return j;
}

MeasurementAngles angles_from_json(const json& j) {
  MeasurementAngles a;
  a.m = read_m(j);
  for (const char* field : {"theta", "phi"}) {
    if (!j.contains(field) || !j.at(field).is_object())
      throw invalid_data(std::string("missing object field '") + field + "'");
    for (int p = 0; p < 3; ++p) {
      const std::string name = party_name(static_cast<Party>(p));
      const auto& obj = j.at(field);
      if (!obj.contains(name) || !obj.at(name).is_array() ||
          static_cast<int>(obj.at(name).size()) != a.m)
        throw invalid_data(std::string("'") + field + "." + name +
                           "' must be an array of m angles");
      auto& dst = (field == std::string("theta")) ? a.theta[p] : a.phi[p];
      dst = obj.at(name).get<std::vector<double>>();
    }
  }
  return a;
}

json bounds_report_to_json(const BoundsReport& r) {
  json j;
  j["m"] = r.m;
  j["family"] = family_name(r.family);
  j["Q_lower"] = opt_to_json(r.q_lower);
  j["B_closed"] = opt_to_json(r.b_closed);
  j["B_bruteforce"] = opt_to_json(r.b_bruteforce);
  j["B_planar_lower"] = opt_to_json(r.b_planar_lower);
  j["B_tightness"] = r.b_tight ? "tight" : "upper bound, tightness unknown";
  j["NS_limit"] = r.ns_limit;
  j["V_threshold"] = opt_to_json(r.v_threshold);
  j["best_signs"] = r.best_signs;
  j["party"] = r.party ? json(party_name(*r.party)) : json(nullptr);
  return j;
}

json certification_to_json(const CertificationResult& r) {
  json j;
  j["bell_value"] = r.bell_value;
  j["bisep_bound"] = r.bisep_bound;
  j["bound_kind"] = bound_kind_name(r.bound_kind);
  j["margin"] = r.margin;
  j["verdict"] = verdict_name(r.verdict);
  j["ns_violation"] = r.ns_violation;
  return j;
}

json opt_result_to_json(const OptResult& r) {
  json j;
  j["value"] = r.value;
  j["angles"] = angles_to_json(r.angles);
  json state = json::array();
  for (const auto& amp : r.state) state.push_back(json::array({amp.real(), amp.imag()}));
  j["state"] = state;
  j["iterations"] = r.iterations;
  j["converged"] = r.converged;
  j["restarts_used"] = r.restarts_used;
  return j;
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "m,Q_lower,B,V_threshold\n";
  for (const SweepRow& row : rows)
    out << row.m << ',' << fmt17(row.q_lower) << ',' << fmt17(row.b) << ','
        << fmt17(row.v_threshold) << '\n';
  return out.str();
}

json sweep_to_json(const std::vector<SweepRow>& rows) {
  json arr = json::array();
  for (const SweepRow& row : rows) {
    json j;
    j["m"] = row.m;
    j["Q_lower"] = row.q_lower;
    j["B"] = opt_to_json(row.b);
    j["V_threshold"] = opt_to_json(row.v_threshold);
    arr.push_back(std::move(j));
  }
  return arr;
}

std::string bounds_report_to_csv(const BoundsReport& r) {
  std::ostringstream out;
  out << "m,family,Q_lower,B_closed,B_bruteforce,B_planar_lower,NS_limit,V_threshold,party,best_signs\n";
  out << r.m << ',' << family_name(r.family) << ',' << fmt17(r.q_lower) << ','
      << fmt17(r.b_closed) << ',' << fmt17(r.b_bruteforce) << ',' << fmt17(r.b_planar_lower)
      << ',' << fmt17(r.ns_limit) << ',' << fmt17(r.v_threshold) << ','
      << (r.party ? party_name(*r.party) : "") << ',';
  for (int s : r.best_signs) out << (s > 0 ? '+' : '-');
  out << '\n';
  return out.str();
}

std::string certification_to_csv(const CertificationResult& r) {
  std::ostringstream out;
  out << "bell_value,bisep_bound,bound_kind,margin,verdict,ns_violation\n";
  out << fmt17(r.bell_value) << ',' << fmt17(r.bisep_bound) << ',' << bound_kind_name(r.bound_kind)
      << ',' << fmt17(r.margin) << ',' << verdict_name(r.verdict) << ','
      << (r.ns_violation ? "true" : "false") << '\n';
  return out.str();
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw invalid_data("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw invalid_data("invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw invalid_data("cannot write file: " + path);
  out << text;
}

}  // namespace bellwit::io
