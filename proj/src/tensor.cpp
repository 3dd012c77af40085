#include "bellwit/tensor.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>

namespace bellwit {

namespace {

void require_settings(int m) {
  if (m < 2) throw invalid_parameter("number of settings must be at least 2, got " + std::to_string(m));
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::Cosine: return "cosine";
    case Family::Parity: return "parity";
    case Family::Custom: return "custom";
  }
  return "custom";
}

Family family_from_name(const std::string& name) {
  if (name == "cosine") return Family::Cosine;
  if (name == "parity") return Family::Parity;
  if (name == "custom") return Family::Custom;
  throw invalid_parameter("unknown family '" + name + "'");
}

BellTensor build_cosine_tensor(int m, double delta) {
  require_settings(m);
  BellTensor t;
  t.m = m;
  t.family = Family::Cosine;
  t.delta = delta;
  t.coeffs.resize(static_cast<std::size_t>(m) * m * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        t.at(a, b, c) = std::cos(std::numbers::pi * (a + b + c - delta) / m);
  return t;
}

BellTensor build_parity_tensor(int m) {
  require_settings(m);
  BellTensor t;
  t.m = m;
  t.family = Family::Parity;
  t.coeffs.resize(static_cast<std::size_t>(m) * m * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c) {
        const int s = a + b + c;
        t.at(a, b, c) = (s % m != 0) ? 0.0 : ((s / m) % 2 == 0 ? 1.0 : -1.0);
      }
  return t;
}

int nonzero_count(const BellTensor& t) {
  int n = 0;
  for (double v : t.coeffs)
    if (std::abs(v) > kZeroTol) ++n;
  return n;
}

namespace {

// One nonzero of magnitude one per row and per column, in the m x m slice
// obtained by fixing index `fixed` of the tensor to `value`.
bool slice_is_signed_permutation(const BellTensor& t, int fixed, int value) {
  const int m = t.m;
  std::vector<int> row_count(m, 0), col_count(m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int idx[3];
      idx[fixed] = value;
      idx[(fixed + 1) % 3] = i;
      idx[(fixed + 2) % 3] = j;
      const double v = t.at(idx[0], idx[1], idx[2]);
      if (std::abs(v) <= kZeroTol) continue;
      if (std::abs(std::abs(v) - 1.0) > kZeroTol) return false;
      ++row_count[i];
      ++col_count[j];
    }
  for (int i = 0; i < m; ++i)
    if (row_count[i] != 1 || col_count[i] != 1) return false;
  return true;
}

}  // namespace

bool slice_structure_check(const BellTensor& t) {
  if (t.family != Family::Parity)
    throw unsupported_family("slice_structure_check applies to parity tensors only");
  for (int fixed = 0; fixed < 3; ++fixed)
    for (int value = 0; value < t.m; ++value)
      if (!slice_is_signed_permutation(t, fixed, value)) return false;
  return true;
}

void validate(const BellTensor& t) {
  require_settings(t.m);
  const std::size_t expected = static_cast<std::size_t>(t.m) * t.m * t.m;
  if (t.coeffs.size() != expected)
    throw invalid_data("tensor must have exactly m^3 coefficients, got " +
                       std::to_string(t.coeffs.size()) + " for m=" + std::to_string(t.m));
  if (t.family == Family::Cosine) {
    if (!t.delta)
      throw invalid_data("cosine tensor requires a delta value");
    const BellTensor ref = build_cosine_tensor(t.m, *t.delta);
    for (std::size_t i = 0; i < expected; ++i)
      if (std::abs(t.coeffs[i] - ref.coeffs[i]) > 1e-12)
        throw invalid_data("cosine coefficient deviates from cos(pi*(a+b+c-delta)/m) by more than 1e-12");
  } else if (t.family == Family::Parity) {
    for (std::size_t i = 0; i < expected; ++i) {
      const double v = t.coeffs[i];
      if (std::abs(v) > kZeroTol && std::abs(std::abs(v) - 1.0) > kZeroTol)
        throw invalid_data("parity coefficients must be -1, 0 or +1");
    }
    if (nonzero_count(t) != t.m * t.m)
      throw invalid_data("parity tensor must have exactly m^2 nonzero coefficients");
    if (!slice_structure_check(t))
      throw invalid_data("parity tensor slices must be signed permutation matrices");
  }
}

}  // namespace bellwit
