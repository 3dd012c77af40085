#ifndef BELLWIT_WITNESS_HPP
#define BELLWIT_WITNESS_HPP

#include <optional>
#include <string>
#include <vector>

#include "bellwit/bisep.hpp"
#include "bellwit/quantum.hpp"
#include "bellwit/tensor.hpp"

namespace bellwit {

enum class Verdict { GenuineTripartiteEntanglement, Inconclusive };
enum class BoundKind { Closed, BruteForce };

std::string verdict_name(Verdict v);
std::string bound_kind_name(BoundKind k);

struct CertificationResult {
  double bell_value = 0.0;
  double bisep_bound = 0.0;
  BoundKind bound_kind = BoundKind::Closed;
  double margin = 0.0;  // bell_value - bisep_bound
  Verdict verdict = Verdict::Inconclusive;
  bool ns_violation = false;  // data exceeds the algebraic limit
};

/// Compares the Bell value of the data against the biseparable bound
/// (closed form when available, brute force otherwise). The verdict is
/// GenuineTripartiteEntanglement iff margin > tol, strictly; data above the
/// no-signalling limit is flagged inconsistent instead of certified.
/// Correlator entries outside [-1, 1] +- 1e-9 raise invalid_data.
CertificationResult certify(const BellTensor& t, const CorrelationTensor& c, double tol = 1e-9);

/// Ratio of the biseparable bound to the quantum lower bound,
/// 1/(m sin(pi/2m)); both families give the same value. Throws
/// not_available for parity with m not a power of two.
double threshold_visibility(const BellTensor& t);

/// Closed-form threshold for large m without materializing a tensor.
double threshold_visibility(Family family, long long m);

struct SweepRow {
  long long m = 0;
  double q_lower = 0.0;
  std::optional<double> b;            // biseparable bound, empty if unknown
  std::optional<double> v_threshold;  // b / q_lower
  bool b_closed = true;               // false when b came from brute force
};

/// One row per m in [m_lo, m_hi]. Closed forms are used whenever they
/// exist; parity rows without a closed form fall back to brute force up to
/// the enumeration budget and are left empty above it.
std::vector<SweepRow> sweep(Family family, long long m_lo, long long m_hi, double delta = -0.5);

/// Correlators of the canonical measurement strategy on the noisy GHZ
/// state at visibility V.
CorrelationTensor simulate_noisy_ghz(const BellTensor& t, double visibility);

/// Everything one wants to know about a tensor's bounds in one place.
struct BoundsReport {
  int m = 0;
  Family family = Family::Custom;
  std::optional<double> q_lower;
  std::optional<double> b_closed;
  std::optional<double> b_bruteforce;
  std::optional<double> b_planar_lower;
  double ns_limit = 0.0;
  std::optional<double> v_threshold;
  std::vector<int> best_signs;
  std::optional<Party> party;
  bool b_tight = false;  // closed form proves the brute-force value tight
};

/// Runs every applicable bound route on the tensor. When skip_bruteforce is
/// set (or m exceeds the enumeration budget) only closed forms are
/// reported.
BoundsReport compute_bounds(const BellTensor& t, bool skip_bruteforce = false);

/// Closed-forms-only report for family/m pairs too large to materialize.
BoundsReport compute_bounds_closed(Family family, long long m, double delta = -0.5);

}  // namespace bellwit

#endif
