#include <cstdlib>
#include <doctest.h>
#include <filesystem>
#include <string>

#include "bellwit/io.hpp"

using namespace bellwit;
namespace io = bellwit::io;

namespace {

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("tensor JSON round trip preserves every field") {
  for (const BellTensor& t :
       {build_cosine_tensor(3, 0.25), build_parity_tensor(4), build_cosine_tensor(2, 0.0)}) {
    const BellTensor back = io::tensor_from_json(io::tensor_to_json(t));
    CHECK(back.m == t.m);
    CHECK(back.family == t.family);
    CHECK(back.delta == t.delta);
    CHECK(back.coeffs == t.coeffs);
  }
}

TEST_CASE("custom tensors serialize with a null delta") {
  BellTensor t;
  t.m = 2;
  t.family = Family::Custom;
  t.coeffs.assign(8, 0.5);
  const io::json j = io::tensor_to_json(t);
  CHECK(j.at("delta").is_null());
  const BellTensor back = io::tensor_from_json(j);
  CHECK_FALSE(back.delta.has_value());
  CHECK(back.coeffs == t.coeffs);
}

TEST_CASE("tensor reader enforces the construction invariants") {
  io::json j = io::tensor_to_json(build_cosine_tensor(3, -0.5));
  j["coeffs"][0][0][0] = 0.9;  // off the defining formula
  CHECK_THROWS_AS(io::tensor_from_json(j), invalid_data);

  io::json shape = io::tensor_to_json(build_parity_tensor(2));
  shape["coeffs"][0][0] = io::json::array({1.0});
  CHECK_THROWS_AS(io::tensor_from_json(shape), invalid_data);

  io::json missing;
  missing["family"] = "cosine";
  CHECK_THROWS_AS(io::tensor_from_json(missing), invalid_data);

  io::json small = io::tensor_to_json(build_parity_tensor(2));
  small["m"] = 1;
  CHECK_THROWS_AS(io::tensor_from_json(small), invalid_data);

  io::json family = io::tensor_to_json(build_parity_tensor(2));
  family["family"] = "owl";
  CHECK_THROWS_AS(io::tensor_from_json(family), error);
}

TEST_CASE("correlation JSON round trip and range validation") {
  CorrelationTensor c;
  c.m = 2;
  c.values = {0.0, 0.5, -0.5, 1.0, -1.0, 0.25, 0.75, -0.125};
  const CorrelationTensor back = io::correlations_from_json(io::correlations_to_json(c));
  CHECK(back.m == 2);
  CHECK(back.values == c.values);

  io::json j = io::correlations_to_json(c);
  j["values"][0][0][0] = 1.5;
  CHECK_THROWS_AS(io::correlations_from_json(j), invalid_data);
}

TEST_CASE("angle JSON round trip") {
  MeasurementAngles a;
  a.m = 2;
  a.theta = {{{0.1, 0.2}, {0.3, 0.4}, {0.5, 0.6}}};
  a.phi = {{{1.1, 1.2}, {1.3, 1.4}, {1.5, 1.6}}};
  const MeasurementAngles back = io::angles_from_json(io::angles_to_json(a));
  CHECK(back.m == 2);
  for (int p = 0; p < 3; ++p) {
    CHECK(back.theta[p] == a.theta[p]);
    CHECK(back.phi[p] == a.phi[p]);
  }

  io::json j = io::angles_to_json(a);
  j["phi"].erase("B");
  CHECK_THROWS_AS(io::angles_from_json(j), invalid_data);
}

TEST_CASE("bounds report JSON carries every route and its provenance") {
  const io::json filled = io::bounds_report_to_json(compute_bounds(build_cosine_tensor(3)));
  CHECK(filled.at("Q_lower").get<double>() == 13.5);
  CHECK(filled.at("B_closed").is_number());
  CHECK(filled.at("B_bruteforce").is_number());
  CHECK(filled.at("B_planar_lower").is_number());
  CHECK(filled.at("B_tightness").get<std::string>() == "tight");
  CHECK(filled.at("party").get<std::string>() == "A");
  CHECK(filled.at("best_signs").size() == 3);
  CHECK(filled.at("family").get<std::string>() == "cosine");

  const io::json partial = io::bounds_report_to_json(compute_bounds(build_parity_tensor(3)));
  CHECK(partial.at("B_closed").is_null());
  CHECK(partial.at("V_threshold").is_null());
  CHECK(partial.at("B_tightness").get<std::string>() == "upper bound, tightness unknown");
}

TEST_CASE("serialized JSON is deterministic with sorted keys") {
  const BoundsReport r = compute_bounds(build_cosine_tensor(2, 0.0));
  const std::string a = io::dump(io::bounds_report_to_json(r));
  const std::string b = io::dump(io::bounds_report_to_json(compute_bounds(build_cosine_tensor(2, 0.0))));
  CHECK(a == b);
  CHECK(a.find("\"B_bruteforce\"") < a.find("\"B_closed\""));
  CHECK(a.find("\"B_closed\"") < a.find("\"NS_limit\""));
  CHECK(a.find("\"NS_limit\"") < a.find("\"Q_lower\""));
  CHECK(a.find("\"best_signs\"") < a.find("\"family\""));
  CHECK(a.back() == '\n');
}

TEST_CASE("certification JSON spells out the verdict") {
  const BellTensor t = build_cosine_tensor(3);
  const io::json j = io::certification_to_json(certify(t, simulate_noisy_ghz(t, 0.9)));
  CHECK(j.at("verdict").get<std::string>() == "GenuineTripartiteEntanglement");
  CHECK(j.at("bound_kind").get<std::string>() == "closed");
  CHECK(j.at("ns_violation").get<bool>() == false);
  CHECK(j.at("bell_value").is_number());
  CHECK(j.at("margin").is_number());
}

TEST_CASE("optimizer result JSON stores the state as real and imaginary pairs") {
  OptResult r;
  r.value = 1.0;
  r.angles.m = 2;
  for (int p = 0; p < 3; ++p) {
    r.angles.theta[p] = {0.1, 0.2};
    r.angles.phi[p] = {0.3, 0.4};
  }
  r.state.assign(8, {0.25, -0.25});
  r.iterations = 5;
  r.converged = true;
  r.restarts_used = 3;
  const io::json j = io::opt_result_to_json(r);
  REQUIRE(j.at("state").size() == 8);
  CHECK(j.at("state")[0][0].get<double>() == 0.25);
  CHECK(j.at("state")[0][1].get<double>() == -0.25);
  CHECK(j.at("iterations").get<int>() == 5);
  CHECK(j.at("converged").get<bool>());
}

TEST_CASE("sweep CSV prints full-precision columns") {
  const auto rows = sweep(Family::Cosine, 2, 4);
  const std::string csv = io::sweep_to_csv(rows);
  REQUIRE(csv.substr(0, csv.find('\n')) == "m,Q_lower,B,V_threshold");

  // the threshold column must round-trip exactly through the text form
  const std::size_t last_comma = csv.rfind(',');
  const double parsed = std::strtod(csv.c_str() + last_comma + 1, nullptr);
  CHECK(parsed == *rows[2].v_threshold);

  const std::string empty_b = io::sweep_to_csv(sweep(Family::Parity, 31, 31));
  CHECK(empty_b.find("31,961,,\n") != std::string::npos);
}

TEST_CASE("report and certification CSV forms carry headers") {
  const std::string bounds_csv = io::bounds_report_to_csv(compute_bounds(build_cosine_tensor(2, 0.0)));
  CHECK(bounds_csv.find("m,family,Q_lower,") == 0);
  CHECK(bounds_csv.find(",A,++") != std::string::npos);

  const BellTensor t = build_cosine_tensor(3);
  const std::string cert_csv = io::certification_to_csv(certify(t, simulate_noisy_ghz(t, 0.5)));
  CHECK(cert_csv.find("bell_value,bisep_bound,") == 0);
  CHECK(cert_csv.find("Inconclusive") != std::string::npos);
}

TEST_CASE("file helpers report unreadable and unparsable input") {
  CHECK_THROWS_AS(io::load_json_file(temp_path("definitely_missing_bellwit.json")), invalid_data);

  const std::string garbage = temp_path("bellwit_garbage.json");
  io::write_text_file(garbage, "{not json");
  CHECK_THROWS_AS(io::load_json_file(garbage), invalid_data);
  std::filesystem::remove(garbage);
}

TEST_CASE("files round-trip through the write and load helpers") {
  const std::string path = temp_path("bellwit_roundtrip.json");
  const BellTensor t = build_parity_tensor(3);
  io::write_text_file(path, io::dump(io::tensor_to_json(t)));
  const BellTensor back = io::tensor_from_json(io::load_json_file(path));
  CHECK(back.coeffs == t.coeffs);
  std::filesystem::remove(path);
}
