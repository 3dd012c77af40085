#include "bellwit/witness.hpp"

#include <cmath>
#include <numbers>

namespace bellwit {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_power_of_two(long long m) { return m > 0 && (m & (m - 1)) == 0; }

double threshold_formula(long long m) { return 1.0 / (m * std::sin(kPi / (2.0 * m))); }

void require_settings(long long m) {
  if (m < 2) throw invalid_parameter("number of settings must be at least 2");
}

double closed_q_lower(Family family, long long m) {
  return family == Family::Cosine ? 0.5 * static_cast<double>(m) * m * m
                                  : static_cast<double>(m) * m;
}

// Sum of |coefficients| in O(m) via the composition counts of s = a+b+c.
double cosine_ns_limit(long long m, double delta) {
  auto tri = [](long long k) -> double {
    return k < 0 ? 0.0 : 0.5 * static_cast<double>(k + 1) * static_cast<double>(k + 2);
  };
  double sum = 0.0;
  for (long long s = 0; s <= 3 * (m - 1); ++s) {
    const double count = tri(s) - 3 * tri(s - m) + 3 * tri(s - 2 * m) - tri(s - 3 * m);
    sum += count * std::abs(std::cos(kPi * (s - delta) / m));
  }
  return sum;
}

}  // namespace

std::string verdict_name(Verdict v) {
  return v == Verdict::GenuineTripartiteEntanglement ? "GenuineTripartiteEntanglement"
                                                     : "Inconclusive";
}

std::string bound_kind_name(BoundKind k) { return k == BoundKind::Closed ? "closed" : "bruteforce"; }

CertificationResult certify(const BellTensor& t, const CorrelationTensor& c, double tol) {
  if (t.m != c.m) throw invalid_parameter("tensor and correlations must share the same m");
  if (tol < 0.0) throw invalid_parameter("certification tolerance must be non-negative");
  for (double v : c.values)
    if (std::abs(v) > 1.0 + kCorrelatorTol)
      throw invalid_data("correlator entries must lie in [-1, 1] within 1e-9");

  CertificationResult r;
  r.bell_value = bell_value(t, c);

  std::optional<double> closed =
      (t.family == Family::Custom) ? std::nullopt : biseparable_closed(t);
  if (closed) {
    r.bisep_bound = *closed;
    r.bound_kind = BoundKind::Closed;
  } else {
    r.bisep_bound = biseparable_upper_bruteforce(t).value;
    r.bound_kind = BoundKind::BruteForce;
  }
  r.margin = r.bell_value - r.bisep_bound;
  r.ns_violation = r.bell_value > no_signalling_limit(t) + tol;
  // Strict inequality: values achievable biseparably are never flagged, and
  // data past the algebraic limit is treated as corrupt, not entangled.
  r.verdict = (!r.ns_violation && r.margin > tol) ? Verdict::GenuineTripartiteEntanglement
                                                  : Verdict::Inconclusive;
  return r;
}

double threshold_visibility(const BellTensor& t) { return threshold_visibility(t.family, t.m); }

double threshold_visibility(Family family, long long m) {
  require_settings(m);
  switch (family) {
    case Family::Cosine: return threshold_formula(m);
    case Family::Parity:
      if (!is_power_of_two(m))
        throw not_available("no closed-form threshold for parity with m not a power of 2");
      return threshold_formula(m);
    case Family::Custom:
      throw unsupported_family("no closed-form threshold for custom tensors");
  }
  return 0.0;
}

std::vector<SweepRow> sweep(Family family, long long m_lo, long long m_hi, double delta) {
  if (family == Family::Custom) throw unsupported_family("sweep needs a cosine or parity family");
  require_settings(m_lo);
  if (m_hi < m_lo) throw invalid_parameter("empty m range");
  if (m_hi > 1000000) throw invalid_parameter("sweep supports m up to 10^6");

  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(m_hi - m_lo + 1));
  for (long long m = m_lo; m <= m_hi; ++m) {
    SweepRow row;
    row.m = m;
    row.q_lower = closed_q_lower(family, m);
    if (family == Family::Cosine) {
      row.b = m * m / (2.0 * std::sin(kPi / (2.0 * m)));
    } else if (is_power_of_two(m)) {
      row.b = m / std::sin(kPi / (2.0 * m));
    } else if (m <= kBruteForceMaxSettings) {
      row.b = biseparable_upper_bruteforce(build_parity_tensor(static_cast<int>(m))).value;
      row.b_closed = false;
    }
    if (row.b) row.v_threshold = *row.b / row.q_lower;
    rows.push_back(std::move(row));
  }
  (void)delta;  // bounds are delta-independent
  return rows;
}

CorrelationTensor simulate_noisy_ghz(const BellTensor& t, double visibility) {
  if (visibility < 0.0 || visibility > 1.0)
    throw invalid_parameter("visibility must lie in [0, 1]");
  return ghz_correlators(canonical_angles(t), StateSpec{visibility});
}

BoundsReport compute_bounds(const BellTensor& t, bool skip_bruteforce) {
  BoundsReport r;
  r.m = t.m;
  r.family = t.family;
  r.ns_limit = no_signalling_limit(t);
  if (t.family != Family::Custom) {
    r.q_lower = quantum_lower_bound(t);
    r.b_closed = biseparable_closed(t);
    if (r.b_closed) {
      r.v_threshold = threshold_visibility(t);
      r.b_tight = true;
    }
  }
  if (!skip_bruteforce && t.m <= kBruteForceMaxSettings) {
    const BruteForceResult bf = biseparable_upper_bruteforce(t);
    r.b_bruteforce = bf.value;
    r.best_signs = bf.best_signs;
    r.party = bf.party;
    r.b_planar_lower = planar_vector_lower_bound(t, bf.best_signs);
  }
  return r;
}

BoundsReport compute_bounds_closed(Family family, long long m, double delta) {
  require_settings(m);
  if (family == Family::Custom)
    throw unsupported_family("closed-form bounds need a cosine or parity family");
  BoundsReport r;
  r.m = static_cast<int>(m);
  r.family = family;
  r.q_lower = closed_q_lower(family, m);
  if (family == Family::Cosine) {
    r.b_closed = m * m / (2.0 * std::sin(kPi / (2.0 * m)));
    r.ns_limit = cosine_ns_limit(m, delta);
  } else {
    if (is_power_of_two(m)) r.b_closed = m / std::sin(kPi / (2.0 * m));
    r.ns_limit = static_cast<double>(m) * m;
  }
  if (r.b_closed) {
    r.v_threshold = threshold_formula(m);
    r.b_tight = true;
  }
  return r;
}

}  // namespace bellwit
