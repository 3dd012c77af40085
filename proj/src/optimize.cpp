#include "bellwit/optimize.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "bellwit/parallel.hpp"

namespace bellwit {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxIterations = 10000;
constexpr double kNormTol = 1e-9;

using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using Mat8 = Eigen::Matrix<std::complex<double>, 8, 8>;
using Vec8 = Eigen::Matrix<std::complex<double>, 8, 1>;

Mat2 observable(double theta, double phi) {
  const double st = std::sin(theta), ct = std::cos(theta);
  Mat2 o;
  o(0, 0) = ct;
  o(0, 1) = std::complex<double>(st * std::cos(phi), -st * std::sin(phi));
  o(1, 0) = std::complex<double>(st * std::cos(phi), st * std::sin(phi));
  o(1, 1) = -ct;
  return o;
}

Mat4 kron22(const Mat2& x, const Mat2& y) {
  Mat4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = x(i, j) * y;
  return out;
}

Mat8 kron24(const Mat2& x, const Mat4& y) {
  Mat8 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<4, 4>(4 * i, 4 * j) = x(i, j) * y;
  return out;
}

const Mat2& pauli(int k) {
  static const Mat2 sx = (Mat2() << 0, 1, 1, 0).finished();
  static const Mat2 sy = (Mat2() << std::complex<double>(0, 0), std::complex<double>(0, -1),
                          std::complex<double>(0, 1), std::complex<double>(0, 0))
                             .finished();
  static const Mat2 sz = (Mat2() << 1, 0, 0, -1).finished();
  switch (k) {
    case 0: return sx;
    case 1: return sy;
    default: return sz;
  }
}

struct Observables {
  int m = 0;
  std::array<std::vector<Mat2>, 3> ops;  // [party][setting]

  static Observables from_angles(const MeasurementAngles& a) {
    Observables o;
    o.m = a.m;
    for (int p = 0; p < 3; ++p) {
      if (static_cast<int>(a.theta[p].size()) != a.m ||
          static_cast<int>(a.phi[p].size()) != a.m)
        throw invalid_parameter("angle arrays must have one entry per setting");
      o.ops[p].resize(a.m);
      for (int i = 0; i < a.m; ++i) o.ops[p][i] = observable(a.theta[p][i], a.phi[p][i]);
    }
    return o;
  }
};

Mat8 bell_operator(const BellTensor& t, const Observables& o) {
  const int m = t.m;
  Mat8 h = Mat8::Zero();
  for (int a = 0; a < m; ++a) {
    Mat4 ra = Mat4::Zero();
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c) {
        const double w = t.at(a, b, c);
        if (w != 0.0) ra += w * kron22(o.ops[1][b], o.ops[2][c]);
      }
    h += kron24(o.ops[0][a], ra);
  }
  return h;
}

double expectation(const Vec8& psi, const Mat8& h) { return std::real(psi.dot(h * psi)); }

// State with the given party's qubit moved to the front; the other two keep
// their relative order. Basis index is 4a + 2b + c.
Vec8 permute_front(const Vec8& psi, Party p) {
  if (p == Party::A) return psi;
  Vec8 out;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) {
        const int src = 4 * a + 2 * b + c;
        const int dst = (p == Party::B) ? 4 * b + 2 * a + c : 4 * c + 2 * a + b;
        out(dst) = psi(src);
      }
  return out;
}

// Exact single-party update: each observable moves to the unit Bloch vector
// aligned with its local gradient. Settings of one party are independent
// given the state and the other two parties.
void update_party(const BellTensor& t, Party p, const Vec8& psi, MeasurementAngles& angles,
                  Observables& obs) {
  const int m = t.m;
  const Vec8 psi_p = permute_front(psi, p);
  const int pi = static_cast<int>(p);
  const int q1 = (pi == 0) ? 1 : 0;            // first remaining party
  const int q2 = (pi == 2) ? 1 : 2;            // second remaining party

  std::vector<Mat4> pair(m * m);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) pair[x * m + y] = kron22(obs.ops[q1][x], obs.ops[q2][y]);

  for (int mu = 0; mu < m; ++mu) {
    Mat4 s = Mat4::Zero();
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y) {
        int idx[3];
        idx[pi] = mu;
        idx[q1] = x;
        idx[q2] = y;
        const double w = t.at(idx[0], idx[1], idx[2]);
        if (w != 0.0) s += w * pair[x * m + y];
      }
    double g[3];
    for (int k = 0; k < 3; ++k) g[k] = expectation(psi_p, kron24(pauli(k), s));
    const double norm = std::sqrt(g[0] * g[0] + g[1] * g[1] + g[2] * g[2]);
    if (norm < 1e-300) continue;  // zero gradient: any direction, keep current
    const double theta = std::acos(std::clamp(g[2] / norm, -1.0, 1.0));
    const double phi = std::atan2(g[1], g[0]);
    angles.theta[pi][mu] = theta;
    angles.phi[pi][mu] = phi;
    obs.ops[pi][mu] = observable(theta, phi);
  }
}

void check_against_tensor(const BellTensor& t, const MeasurementAngles& angles) {
  if (angles.m != t.m) throw invalid_parameter("angles and tensor must share the same m");
  for (int p = 0; p < 3; ++p)
    if (static_cast<int>(angles.theta[p].size()) != t.m ||
        static_cast<int>(angles.phi[p].size()) != t.m)
      throw invalid_parameter("angle arrays must have one entry per setting");
}

Vec8 to_vec8(const State& state) {
  if (state.size() != 8) throw invalid_parameter("state must have 8 amplitudes");
  Vec8 psi;
  for (int i = 0; i < 8; ++i) psi(i) = state[i];
  return psi;
}

}  // namespace

double evaluate_operator(const BellTensor& t, const MeasurementAngles& angles, const State& state) {
  check_against_tensor(t, angles);
  const Vec8 psi = to_vec8(state);
  if (std::abs(psi.norm() - 1.0) > kNormTol)
    throw invalid_state("state vector must have unit norm");
  const Observables obs = Observables::from_angles(angles);
  return expectation(psi, bell_operator(t, obs));
}

CorrelationTensor correlators_from_state(const MeasurementAngles& angles, const State& state) {
  const Vec8 psi = to_vec8(state);
  if (std::abs(psi.norm() - 1.0) > kNormTol)
    throw invalid_state("state vector must have unit norm");
  const Observables obs = Observables::from_angles(angles);
  const int m = angles.m;
  CorrelationTensor c;
  c.m = m;
  c.values.resize(static_cast<std::size_t>(m) * m * m);
  for (int b = 0; b < m; ++b)
    for (int g = 0; g < m; ++g) {
      const Mat4 bc = kron22(obs.ops[1][b], obs.ops[2][g]);
      for (int a = 0; a < m; ++a) c.at(a, b, g) = expectation(psi, kron24(obs.ops[0][a], bc));
    }
  return c;
}

namespace detail {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

OptResult seesaw_single(const BellTensor& t, std::uint64_t stream_seed, double tol,
                        int max_iterations, std::vector<double>* history) {
  std::mt19937_64 gen(stream_seed);
  // Portable uniform doubles in [0, 1): top 53 bits of the raw output.
  auto uniform = [&gen]() { return (gen() >> 11) * 0x1.0p-53; };

  const int m = t.m;
  MeasurementAngles angles;
  angles.m = m;
  for (int p = 0; p < 3; ++p) {
    angles.theta[p].resize(m);
    angles.phi[p].resize(m);
    for (int i = 0; i < m; ++i) {
      angles.theta[p][i] = std::acos(1.0 - 2.0 * uniform());  // cos-uniform on [0, pi]
      angles.phi[p][i] = 2.0 * kPi * uniform();
    }
  }
  Observables obs = Observables::from_angles(angles);

  Eigen::SelfAdjointEigenSolver<Mat8> es(bell_operator(t, obs));
  double value = es.eigenvalues()(7);
  Vec8 psi = es.eigenvectors().col(7);

  OptResult result;
  int iter = 0;
  for (; iter < max_iterations; ++iter) {
    update_party(t, Party::A, psi, angles, obs);
    update_party(t, Party::B, psi, angles, obs);
    update_party(t, Party::C, psi, angles, obs);
    es.compute(bell_operator(t, obs));
    const double next = es.eigenvalues()(7);
    psi = es.eigenvectors().col(7);
    if (history) history->push_back(next);
    const double improvement = next - value;
    value = next;
    if (improvement < tol * std::max(1.0, std::abs(next))) {
      result.converged = true;
      ++iter;
      break;
    }
  }

  angles.normalize();
  result.value = value;
  result.angles = angles;
  result.state.assign(psi.data(), psi.data() + 8);
  result.iterations = iter;
  return result;
}

}  // namespace detail

OptResult seesaw_quantum_max(const BellTensor& t, int restarts, std::uint64_t seed, double tol) {
  if (restarts < 1) throw invalid_parameter("restarts must be at least 1");
  if (!(tol > 0.0)) throw invalid_parameter("tol must be positive");

  std::vector<OptResult> results(restarts);
  parallel_chunks(static_cast<std::uint64_t>(restarts),
                  [&](int, std::uint64_t begin, std::uint64_t end) {
                    for (std::uint64_t i = begin; i < end; ++i)
                      results[i] = detail::seesaw_single(t, detail::splitmix64(seed + i), tol,
                                                         kMaxIterations);
                  });
  // Max value; ties go to the lowest restart index.
  int best = 0;
  for (int i = 1; i < restarts; ++i)
    if (results[i].value > results[best].value) best = i;
  OptResult out = results[best];
  out.restarts_used = restarts;
  return out;
}

}  // namespace bellwit
