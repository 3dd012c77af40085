#ifndef BELLWIT_QUANTUM_HPP
#define BELLWIT_QUANTUM_HPP

#include <array>
#include <string>
#include <vector>

#include "bellwit/tensor.hpp"

namespace bellwit {

enum class Party { A = 0, B = 1, C = 2 };

std::string party_name(Party p);
Party party_from_name(const std::string& name);

/// Polar/azimuthal angles (radians) of the +-1 qubit observables
///   cos(phi) sin(theta) sx + sin(phi) sin(theta) sy + cos(theta) sz,
/// one per party and setting.
struct MeasurementAngles {
  int m = 0;
  std::array<std::vector<double>, 3> theta;  // [party][setting]
  std::array<std::vector<double>, 3> phi;

  /// Brings theta into [0, pi] and phi into [0, 2*pi) without changing the
  /// observables.
  void normalize();
};

/// Three-party correlators <A_a x B_b x C_c> in [-1, 1], same layout as
/// BellTensor::coeffs.
struct CorrelationTensor {
  int m = 0;
  std::vector<double> values;

  double at(int alpha, int beta, int gamma) const {
    return values[static_cast<std::size_t>((alpha * m + beta) * m + gamma)];
  }
  double& at(int alpha, int beta, int gamma) {
    return values[static_cast<std::size_t>((alpha * m + beta) * m + gamma)];
  }
};

/// Tolerance allowed on correlator entries beyond [-1, 1].
inline constexpr double kCorrelatorTol = 1e-9;

/// Noisy GHZ state, visibility V in [0, 1].
struct StateSpec {
  double visibility = 1.0;
};

/// Correlators of projective measurements on the noisy GHZ state:
///   V * sin(tA) sin(tB) sin(tC) * cos(pA + pB + pC).
/// The maximally mixed part contributes zero for traceless observables, so
/// visibility enters as an overall factor.
CorrelationTensor ghz_correlators(const MeasurementAngles& angles, const StateSpec& state);

/// Equatorial angles (theta = pi/2) whose correlators on the GHZ state
/// reproduce the Bell coefficients themselves: phi_mu = pi*(mu - delta/3)/m
/// for the cosine family, phi_mu = pi*mu/m for the parity family.
MeasurementAngles canonical_angles(const BellTensor& t);

/// Linear contraction sum_{abc} M[a][b][c] * values[a][b][c].
double bell_value(const BellTensor& t, const CorrelationTensor& c);

/// Closed-form quantum lower bound: m^3/2 (cosine), m^2 (parity).
double quantum_lower_bound(const BellTensor& t);

/// Sum of |coefficients|; the algebraic maximum of the expression.
double no_signalling_limit(const BellTensor& t);

}  // namespace bellwit

#endif
