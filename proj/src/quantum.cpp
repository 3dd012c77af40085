#include "bellwit/quantum.hpp"

#include <cmath>
#include <numbers>

namespace bellwit {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_shapes(const MeasurementAngles& a) {
  for (int p = 0; p < 3; ++p)
    if (static_cast<int>(a.theta[p].size()) != a.m || static_cast<int>(a.phi[p].size()) != a.m)
      throw invalid_parameter("angle arrays must have one entry per setting");
}

double wrap_two_pi(double x) {
  x = std::fmod(x, kTwoPi);
  if (x < 0) x += kTwoPi;
  return x;
}

}  // namespace

std::string party_name(Party p) {
  switch (p) {
    case Party::A: return "A";
    case Party::B: return "B";
    case Party::C: return "C";
  }
  return "A";
}

Party party_from_name(const std::string& name) {
  if (name == "A") return Party::A;
  if (name == "B") return Party::B;
  if (name == "C") return Party::C;
  throw invalid_parameter("unknown party '" + name + "'");
}

void MeasurementAngles::normalize() {
  for (int p = 0; p < 3; ++p)
    for (std::size_t i = 0; i < theta[p].size(); ++i) {
      double th = std::fmod(theta[p][i], kTwoPi);
      if (th < 0) th += kTwoPi;
      double ph = phi[p][i];
      if (th > kPi) {  // reflect through the pole
        th = kTwoPi - th;
        ph += kPi;
      }
      theta[p][i] = th;
      phi[p][i] = wrap_two_pi(ph);
    }
}

CorrelationTensor ghz_correlators(const MeasurementAngles& angles, const StateSpec& state) {
  check_shapes(angles);
  if (state.visibility < 0.0 || state.visibility > 1.0)
    throw invalid_parameter("visibility must lie in [0, 1]");
  const int m = angles.m;
  CorrelationTensor c;
  c.m = m;
  c.values.resize(static_cast<std::size_t>(m) * m * m);
  for (int a = 0; a < m; ++a) {
    const double sa = std::sin(angles.theta[0][a]);
    for (int b = 0; b < m; ++b) {
      const double sab = sa * std::sin(angles.theta[1][b]);
      const double pab = angles.phi[0][a] + angles.phi[1][b];
      for (int g = 0; g < m; ++g)
        c.at(a, b, g) = state.visibility * sab * std::sin(angles.theta[2][g]) *
                        std::cos(pab + angles.phi[2][g]);
    }
  }
  return c;
}

MeasurementAngles canonical_angles(const BellTensor& t) {
  if (t.family == Family::Custom)
    throw unsupported_family("canonical angles exist for the cosine and parity families only");
  if (t.family == Family::Cosine && !t.delta)
    throw invalid_data("cosine tensor requires a delta value");
  const int m = t.m;
  MeasurementAngles a;
  a.m = m;
  for (int p = 0; p < 3; ++p) {
    a.theta[p].assign(m, kPi / 2.0);  // equatorial; sin(theta) = 1
    a.phi[p].resize(m);
    for (int mu = 0; mu < m; ++mu) {
      const double phi = (t.family == Family::Cosine)
                             ? kPi * (mu - *t.delta / 3.0) / m
                             : kPi * mu / m;
      a.phi[p][mu] = phi;
    }
  }
  a.normalize();
  return a;
}

double bell_value(const BellTensor& t, const CorrelationTensor& c) {
  if (t.m != c.m || t.coeffs.size() != c.values.size())
    throw invalid_parameter("tensor and correlations must share the same m");
  double sum = 0.0;
  for (std::size_t i = 0; i < t.coeffs.size(); ++i) sum += t.coeffs[i] * c.values[i];
  return sum;
}

double quantum_lower_bound(const BellTensor& t) {
  switch (t.family) {
    case Family::Cosine: return 0.5 * t.m * t.m * t.m;
    case Family::Parity: return static_cast<double>(t.m) * t.m;
    case Family::Custom:
      throw unsupported_family("no closed-form quantum bound for custom tensors");
  }
  return 0.0;
}

double no_signalling_limit(const BellTensor& t) {
  double sum = 0.0;
  for (double v : t.coeffs) sum += std::abs(v);
  return sum;
}

}  // namespace bellwit
