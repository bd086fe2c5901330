#pragma once

#include <cstdint>
#include <vector>

#include "wmax/closed_form.hpp"
#include "wmax/qstate.hpp"

// Independent numerical computation of the maximal product overlap:
// alternating rank-one maximization for arbitrary small states, plus an
// exhaustive grid search at 2-3 qubits. Both exist in a serial and an
// OpenMP-parallel form; results are bit-identical between the two.

namespace wmax {

struct AlternatingOptions {
  int starts = 32;
  double tol = 1e-12;  // stop when overlap-squared improves by less per sweep
  int max_iters = 10000;
  std::uint64_t seed = 42;
};

struct OracleResult {
  double pmax = 0.0;
  ProductState nearest;
  int iterations = 0;  // sweeps used by the winning start
  int starts_used = 0;
  bool converged = false;
  double fixed_point_residual = 0.0;
};

struct FixedPointCheck {
  double residual = 0.0;
  bool degenerate = false;  // some partial inner product vanished
};

struct StartResult {
  double pmax = 0.0;
  ProductState state;
  int sweeps = 0;
  bool converged = false;
};

// One seeded start of the alternating scheme. The objective after every
// factor update can be recorded through `objective_trace` (it is the squared
// norm of the freshly computed partial inner product, which equals the new
// overlap-squared).
StartResult alternating_single_start(const PureState& psi, std::uint64_t seed,
                                     int start_index, double tol, int max_iters,
                                     std::vector<double>* objective_trace = nullptr);

// Multi-start driver; best pmax wins, ties go to the lowest start index.
OracleResult alternating_maximize(const PureState& psi, const AlternatingOptions& opts = {});
OracleResult alternating_maximize_serial(const PureState& psi, const AlternatingOptions& opts = {});

// Exhaustive (theta, phi) scan of factors 1..n-1 at `resolution` points per
// angle, the last factor maximized exactly as the normalized partial inner
// product, followed by a compass refinement (20 step halvings). n <= 3.
OverlapResult grid_search(const PureState& psi, int resolution);
OverlapResult grid_search_serial(const PureState& psi, int resolution);

// Max over k of the distance between factor k and the phase-aligned
// normalized partial inner product; 0 at exact stationary points. A
// vanishing partial inner product reports residual 1 with the flag set.
FixedPointCheck verify_fixed_point(const PureState& psi, const ProductState& prod);

}  // namespace wmax
