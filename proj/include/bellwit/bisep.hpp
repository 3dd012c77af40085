#ifndef BELLWIT_BISEP_HPP
#define BELLWIT_BISEP_HPP

#include <complex>
#include <optional>
#include <vector>

#include "bellwit/quantum.hpp"
#include "bellwit/tensor.hpp"

namespace bellwit {

/// Largest m accepted by the brute-force sign enumeration (2^(m-1) vectors).
inline constexpr int kBruteForceMaxSettings = 20;

/// Bipartite coefficient matrix left after contracting one party's index
/// against a +-1 sign vector.
struct ReducedMatrix {
  int m = 0;
  std::vector<double> entries;  // row-major, entries[beta*m + gamma]
  std::vector<int> signs;       // the +-1 vector that produced it
  Party party = Party::A;       // which party was split off

  double at(int beta, int gamma) const {
    return entries[static_cast<std::size_t>(beta * m + gamma)];
  }
  double& at(int beta, int gamma) {
    return entries[static_cast<std::size_t>(beta * m + gamma)];
  }
};

/// Eigenvalues of a modified-circulant matrix together with the roots
/// omega_j = exp(2*pi*i*(j+1/2)/m) that generate the eigenvectors
/// v_j = (1, omega_j, omega_j^2, ...).
struct SpectrumResult {
  std::vector<std::complex<double>> eigenvalues;
  std::vector<std::complex<double>> omega;
};

struct BruteForceResult {
  double value = 0.0;
  std::vector<int> best_signs;
  Party party = Party::A;
};

/// Contracts the tensor along the chosen party's index with a +-1 vector.
ReducedMatrix reduced_matrix(const BellTensor& t, Party party, const std::vector<int>& signs);

/// True iff each row is the previous one shifted left, with the wrapped
/// element negated: M[b+1][g] == M[b][g+1] and M[b+1][m-1] == -M[b][0],
/// within 1e-12.
bool is_modified_circulant(const ReducedMatrix& r);

/// Spectrum of a modified-circulant matrix. The matrix is accepted in its
/// natural orientation (rows shift left); the column reversal that turns it
/// into a negacyclic matrix is handled internally. The eigen-equation holds
/// for the column-reversed matrix.
SpectrumResult mod_circulant_spectrum(const ReducedMatrix& r);

/// m times the largest singular value of the reduced matrix; an upper bound
/// on the quantum value of the corresponding bipartite correlation
/// inequality. Works for any real m x m matrix.
double singular_upper_bound(const ReducedMatrix& r);

/// Maximum of singular_upper_bound over all three parties and all sign
/// vectors with signs[0] = +1 (a global sign flip leaves the singular
/// values unchanged). Enumeration is in binary-counter order; ties resolve
/// to the first vector found, and to party A before B before C.
BruteForceResult biseparable_upper_bruteforce(const BellTensor& t);

/// Closed-form biseparable bound: m^2/(2 sin(pi/2m)) for the cosine family,
/// m/sin(pi/2m) for the parity family when m is a power of two. Returns
/// nullopt for parity with m not a power of two (no tight closed form);
/// throws unsupported_family for Custom tensors.
std::optional<double> biseparable_closed(const BellTensor& t);

/// Value of the explicit biseparable strategy with planar unit vectors
/// C_g = (cos(pi*g/m), sin(pi*g/m)) and optimally aligned B_b, applied to
/// the matrix reduced along party A with the given signs:
///   sum_b | sum_g Mbar[b][g] C_g |.
/// Always achievable with real qubit measurements on a maximally entangled
/// pair, hence a lower bound on the biseparable value.
double planar_vector_lower_bound(const BellTensor& t, const std::vector<int>& signs);

}  // namespace bellwit

#endif
