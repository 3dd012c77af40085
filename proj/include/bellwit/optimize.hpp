#ifndef BELLWIT_OPTIMIZE_HPP
#define BELLWIT_OPTIMIZE_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "bellwit/quantum.hpp"
#include "bellwit/tensor.hpp"

namespace bellwit {

using State = std::vector<std::complex<double>>;  // 8 amplitudes, unit norm

struct OptResult {
  double value = 0.0;
  MeasurementAngles angles;
  State state;
  int iterations = 0;
  bool converged = false;
  int restarts_used = 0;
};

/// <psi| sum M[a][b][c] A_a x B_b x C_c |psi> with the observables built
/// from the angles. Throws invalid_state unless the state has unit norm
/// (within 1e-9).
double evaluate_operator(const BellTensor& t, const MeasurementAngles& angles, const State& state);

/// Dense-path correlators <psi| A_a x B_b x C_c |psi> for an arbitrary
/// 3-qubit pure state.
CorrelationTensor correlators_from_state(const MeasurementAngles& angles, const State& state);

/// Alternating maximization of the Bell value over pure 3-qubit states and
/// +-1 qubit observables: the state moves to the top eigenvector of the
/// 8x8 Bell operator, each observable to the unit Bloch vector aligned with
/// its local gradient (the exact single-observable optimum). The objective
/// never decreases. Restarts draw angles from mt19937_64 seeded with
/// splitmix64(seed + restart index); identical seeds give identical results.
OptResult seesaw_quantum_max(const BellTensor& t, int restarts = 20, std::uint64_t seed = 0,
                             double tol = 1e-9);

namespace detail {

/// One see-saw run from the given restart stream. When history is non-null
/// the objective after every iteration is appended to it.
OptResult seesaw_single(const BellTensor& t, std::uint64_t stream_seed, double tol,
                        int max_iterations, std::vector<double>* history = nullptr);

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace detail

}  // namespace bellwit

#endif
