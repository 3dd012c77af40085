#ifndef BELLWIT_TENSOR_HPP
#define BELLWIT_TENSOR_HPP

#include <optional>
#include <string>
#include <vector>

#include "bellwit/errors.hpp"

namespace bellwit {

/// Entries with |value| <= kZeroTol count as zero (absorbs cosine roundoff
/// at exact zeros).
inline constexpr double kZeroTol = 1e-12;

enum class Family { Cosine, Parity, Custom };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

/// m x m x m array of Bell coefficients M[alpha][beta][gamma] with family
/// metadata. Stored flat in row-major order, gamma fastest.
struct BellTensor {
  int m = 0;
  Family family = Family::Custom;
  std::optional<double> delta;  // Cosine family only
  std::vector<double> coeffs;   // size m^3, index (alpha*m + beta)*m + gamma

  double at(int alpha, int beta, int gamma) const {
    return coeffs[static_cast<std::size_t>((alpha * m + beta) * m + gamma)];
  }
  double& at(int alpha, int beta, int gamma) {
    return coeffs[static_cast<std::size_t>((alpha * m + beta) * m + gamma)];
  }
};

/// Cosine-family tensor M[a][b][c] = cos(pi*(a+b+c-delta)/m).
/// The default delta = -1/2 matches the three-setting special case.
BellTensor build_cosine_tensor(int m, double delta = -0.5);

/// Parity-family tensor: 0 unless (a+b+c) mod m == 0, else +1/-1 by the
/// parity of (a+b+c)/m. Indices run 0..m-1.
BellTensor build_parity_tensor(int m);

/// Number of entries with |coeff| > kZeroTol.
int nonzero_count(const BellTensor& t);

/// True iff every axis-aligned m x m slice of a Parity tensor is a signed
/// permutation matrix. Throws unsupported_family for other families.
bool slice_structure_check(const BellTensor& t);

/// Checks the family-specific invariants (coefficient formulas, counts,
/// slice structure). Throws invalid_data naming the first violation.
void validate(const BellTensor& t);

}  // namespace bellwit

#endif
