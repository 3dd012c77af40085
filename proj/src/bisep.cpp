#include "bellwit/bisep.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>
#include <numbers>

#include "bellwit/parallel.hpp"

namespace bellwit {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kStructTol = 1e-12;

void check_signs(int m, const std::vector<int>& signs) {
  if (static_cast<int>(signs.size()) != m)
    throw invalid_parameter("sign vector must have length m=" + std::to_string(m));
  for (int s : signs)
    if (s != 1 && s != -1) throw invalid_parameter("sign vector entries must be +1 or -1");
}

void contract(const BellTensor& t, Party party, const std::vector<int>& signs, double* out) {
  const int m = t.m;
  for (int i = 0; i < m * m; ++i) out[i] = 0.0;
  // Rows and columns keep the tensor's index order of the two remaining
  // parties.
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c) {
        const double v = t.at(a, b, c);
        switch (party) {
          case Party::A: out[b * m + c] += signs[a] * v; break;
          case Party::B: out[a * m + c] += signs[b] * v; break;
          case Party::C: out[a * m + b] += signs[c] * v; break;
        }
      }
}

using RowMat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Largest singular value, with the matrix sign-canonicalized first so that
// globally flipped inputs go through bit-identical arithmetic.
double sigma_max(RowMat mat) {
  for (int i = 0; i < mat.size(); ++i) {
    const double v = mat.data()[i];
    if (v != 0.0) {
      if (v < 0.0) mat = -mat;
      break;
    }
  }
  if (mat.rows() == 0) return 0.0;
  Eigen::JacobiSVD<RowMat> svd(mat);
  return svd.singularValues()(0);
}

bool is_power_of_two(int m) { return m > 0 && (m & (m - 1)) == 0; }

std::uint64_t sign_vector_count(int m) { return std::uint64_t{1} << (m - 1); }

// Binary-counter encoding with signs[0] fixed to +1: bit i-1 of the
// counter set means signs[i] = -1.
void counter_to_signs(std::uint64_t counter, int m, std::vector<int>& signs) {
  signs.resize(m);
  signs[0] = 1;
  for (int i = 1; i < m; ++i) signs[i] = (counter >> (i - 1)) & 1 ? -1 : 1;
}

}  // namespace

ReducedMatrix reduced_matrix(const BellTensor& t, Party party, const std::vector<int>& signs) {
  check_signs(t.m, signs);
  ReducedMatrix r;
  r.m = t.m;
  r.party = party;
  r.signs = signs;
  r.entries.resize(static_cast<std::size_t>(t.m) * t.m);
  contract(t, party, signs, r.entries.data());
  return r;
}

bool is_modified_circulant(const ReducedMatrix& r) {
  const int m = r.m;
  for (int b = 0; b + 1 < m; ++b) {
    for (int g = 0; g + 1 < m; ++g)
      if (std::abs(r.at(b + 1, g) - r.at(b, g + 1)) > kStructTol) return false;
    if (std::abs(r.at(b + 1, m - 1) + r.at(b, 0)) > kStructTol) return false;
  }
  return true;
}

SpectrumResult mod_circulant_spectrum(const ReducedMatrix& r) {
  if (!is_modified_circulant(r))
    throw not_mod_circulant("matrix does not have the modified-circulant structure");
  const int m = r.m;
  // Reversing the column order turns the left-shifting rows into a
  // negacyclic (right-shifting, sign on wrap) matrix whose eigenvectors are
  // powers of the 2m-th roots of -1.
  std::vector<double> first_row(m);
  for (int g = 0; g < m; ++g) first_row[g] = r.at(0, m - 1 - g);
  SpectrumResult s;
  s.eigenvalues.resize(m);
  s.omega.resize(m);
  for (int j = 0; j < m; ++j) {
    const std::complex<double> w = std::polar(1.0, kPi * (2 * j + 1) / m);
    std::complex<double> lambda = 0.0;
    std::complex<double> wg = 1.0;
    for (int g = 0; g < m; ++g) {
      lambda += first_row[g] * wg;
      wg *= w;
    }
    s.omega[j] = w;
    s.eigenvalues[j] = lambda;
  }
  return s;
}

double singular_upper_bound(const ReducedMatrix& r) {
  RowMat mat(r.m, r.m);
  for (int b = 0; b < r.m; ++b)
    for (int g = 0; g < r.m; ++g) mat(b, g) = r.at(b, g);
  return r.m * sigma_max(std::move(mat));
}

BruteForceResult biseparable_upper_bruteforce(const BellTensor& t) {
  const int m = t.m;
  if (m > kBruteForceMaxSettings)
    throw budget_exceeded("m=" + std::to_string(m) + " exceeds the 2^(m-1) enumeration budget (m <= " +
                          std::to_string(kBruteForceMaxSettings) +
                          "); use the closed-form bound instead");

  struct Best {
    double value = -1.0;
    std::uint64_t counter = 0;
  };
  const std::uint64_t n = sign_vector_count(m);

  BruteForceResult result;
  result.value = -1.0;
  for (Party party : {Party::A, Party::B, Party::C}) {
    std::vector<Best> chunk_best(worker_count());
    parallel_chunks(n, [&](int chunk, std::uint64_t begin, std::uint64_t end) {
      Best best;
      std::vector<int> signs;
      RowMat mat(m, m);
      for (std::uint64_t counter = begin; counter < end; ++counter) {
        counter_to_signs(counter, m, signs);
        contract(t, party, signs, mat.data());
        const double value = m * sigma_max(mat);
        if (value > best.value) best = {value, counter};
      }
      chunk_best[chunk] = best;
    });
    Best party_best;
    for (const Best& b : chunk_best)
      if (b.value > party_best.value) party_best = b;
    // First-found wins ties: parties in A, B, C order, then counter order.
    if (party_best.value > result.value) {
      std::vector<int> signs;
      counter_to_signs(party_best.counter, m, signs);
      result = {party_best.value, signs, party};
    }
  }
  return result;
}

std::optional<double> biseparable_closed(const BellTensor& t) {
  const double s = std::sin(kPi / (2.0 * t.m));
  switch (t.family) {
    case Family::Cosine: return t.m * t.m / (2.0 * s);
    case Family::Parity:
      if (!is_power_of_two(t.m)) return std::nullopt;  // tightness unproven
      return t.m / s;
    case Family::Custom:
      throw unsupported_family("no closed-form biseparable bound for custom tensors");
  }
  return std::nullopt;
}

double planar_vector_lower_bound(const BellTensor& t, const std::vector<int>& signs) {
  const ReducedMatrix r = reduced_matrix(t, Party::A, signs);
  const int m = t.m;
  double total = 0.0;
  for (int b = 0; b < m; ++b) {
    double x = 0.0, y = 0.0;
    for (int g = 0; g < m; ++g) {
      x += r.at(b, g) * std::cos(kPi * g / m);
      y += r.at(b, g) * std::sin(kPi * g / m);
    }
    total += std::hypot(x, y);  // zero rows contribute zero
  }
  return total;
}

}  // namespace bellwit
