#include "wmax/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wmax {

namespace {

double norm_sq(const SingleQubitState& s) { return std::norm(s.c0) + std::norm(s.c1); }

double factor_dist(const SingleQubitState& a, const SingleQubitState& b) {
  return std::sqrt(std::norm(a.c0 - b.c0) + std::norm(a.c1 - b.c1));
}

}  // namespace

StartResult alternating_single_start(const PureState& psi, std::uint64_t seed, int start_index,
                                     double tol, int max_iters,
                                     std::vector<double>* objective_trace) {
  const int n = psi.qubit_count();
  CounterRng rng(seed, static_cast<std::uint64_t>(start_index));
  std::vector<SingleQubitState> factors(n);
  for (auto& f : factors) f = random_factor(rng);

  double val = 0.0;
  double prev = -1.0;
  int sweeps = 0;
  bool converged = false;
  for (int iter = 0; iter < max_iters; ++iter) {
    double move = 0.0;
    for (int k = 1; k <= n; ++k) {
      const SingleQubitState pi = detail::partial_inner(psi, factors, k);
      const double n2 = norm_sq(pi);
      if (n2 > 1e-300) {
        const double nrm = std::sqrt(n2);
        const SingleQubitState updated{pi.c0 / nrm, pi.c1 / nrm};
        move = std::max(move, factor_dist(updated, factors[k - 1]));
        factors[k - 1] = updated;
        // After normalizing factor k to the partial inner product the new
        // overlap modulus is exactly that product's norm.
        val = n2;
      }
      if (objective_trace) objective_trace->push_back(val);
    }
    ++sweeps;
    // The objective criterion alone leaves the factors O(sqrt(tol)) away
    // from the fixed point, so the sweep also has to settle in distance
    // before the result may claim convergence.
    if (val - prev < tol && move <= 0.5 * tol) {
      converged = true;
      break;
    }
    prev = val;
  }
  return {val, ProductState(std::move(factors)), sweeps, converged};
}

namespace {

OracleResult alternating_impl(const PureState& psi, const AlternatingOptions& opts,
                              bool parallel) {
  if (opts.starts < 1) throw std::invalid_argument("starts must be >= 1");
  if (!(opts.tol > 0.0)) throw std::invalid_argument("tol must be positive");
  if (opts.max_iters < 1) throw std::invalid_argument("max_iters must be >= 1");

  std::vector<std::optional<StartResult>> runs(opts.starts);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
  for (int i = 0; i < opts.starts; ++i)
    runs[i] = alternating_single_start(psi, opts.seed, i, opts.tol, opts.max_iters);
  (void)parallel;

  int best = 0;
  for (int i = 1; i < opts.starts; ++i)
    if (runs[i]->pmax > runs[best]->pmax) best = i;

  const StartResult& win = *runs[best];
  return {win.pmax, win.state, win.sweeps, opts.starts, win.converged,
          verify_fixed_point(psi, win.state).residual};
}

}  // namespace

OracleResult alternating_maximize(const PureState& psi, const AlternatingOptions& opts) {
  return alternating_impl(psi, opts, true);
}

OracleResult alternating_maximize_serial(const PureState& psi, const AlternatingOptions& opts) {
  return alternating_impl(psi, opts, false);
}

namespace {

SingleQubitState angles_to_factor(double theta, double phi) {
  return {std::cos(theta / 2.0), std::polar(std::sin(theta / 2.0), phi)};
}

// Objective with the last factor eliminated exactly: the best choice for
// factor n given the others is the normalized partial inner product, so the
// achievable overlap-squared is that product's squared norm.
double eval_cells(const PureState& psi, std::vector<SingleQubitState>& factors,
                  const std::vector<double>& angles) {
  const int m = static_cast<int>(angles.size()) / 2;
  for (int i = 0; i < m; ++i) factors[i] = angles_to_factor(angles[2 * i], angles[2 * i + 1]);
  const SingleQubitState pi = detail::partial_inner(psi, factors, m + 1);
  return norm_sq(pi);
}

OverlapResult grid_impl(const PureState& psi, int resolution, bool parallel) {
  const int n = psi.qubit_count();
  if (n > 3) throw std::invalid_argument("grid search supports at most 3 qubits");
  if (resolution < 32) throw std::invalid_argument("resolution must be >= 32");
  const int m = n - 1;
  const double pi_v = std::numbers::pi;
  const double theta_step = pi_v / (resolution - 1);
  const double phi_step = 2.0 * pi_v / resolution;

  OverlapResult res;
  res.method = "grid-search";

  if (m == 0) {
    // Single qubit: the state is its own best factor.
    const SingleQubitState v{psi.amplitude(0), psi.amplitude(1)};
    const double nrm = std::sqrt(norm_sq(v));
    res.pmax = nrm * nrm;
    res.nearest = ProductState({SingleQubitState{v.c0 / nrm, v.c1 / nrm}});
    return res;
  }

  const std::int64_t cells = static_cast<std::int64_t>(resolution) * resolution;
  const std::int64_t total = m == 1 ? cells : cells * cells;
  const std::int64_t outer = cells;
  const std::int64_t inner = total / cells;

  const auto cell_angles = [&](std::int64_t flat, std::vector<double>& angles) {
    for (int i = 0; i < m; ++i) {
      const std::int64_t c = flat % cells;
      flat /= cells;
      angles[2 * i] = theta_step * static_cast<double>(c / resolution);
      angles[2 * i + 1] = phi_step * static_cast<double>(c % resolution);
    }
  };

  std::vector<double> best_val(outer, -1.0);
  std::vector<std::int64_t> best_idx(outer, 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
  for (std::int64_t o = 0; o < outer; ++o) {
    std::vector<double> angles(2 * m);
    std::vector<SingleQubitState> factors(n);
    double bv = -1.0;
    std::int64_t bi = 0;
    for (std::int64_t in_c = 0; in_c < inner; ++in_c) {
      const std::int64_t flat = o + in_c * cells;
      cell_angles(flat, angles);
      const double v = eval_cells(psi, factors, angles);
      if (v > bv) {
        bv = v;
        bi = flat;
      }
    }
    best_val[o] = bv;
    best_idx[o] = bi;
  }
  (void)parallel;

  std::int64_t winner = 0;
  for (std::int64_t o = 1; o < outer; ++o) {
    if (best_val[o] > best_val[winner] ||
        (best_val[o] == best_val[winner] && best_idx[o] < best_idx[winner]))
      winner = o;
  }

  std::vector<double> angles(2 * m);
  cell_angles(best_idx[winner], angles);
  std::vector<SingleQubitState> factors(n);
  double best = eval_cells(psi, factors, angles);

  // Compass refinement: at each scale, keep taking improving axis steps,
  // then halve. Theta clamps to [0, pi], phi wraps.
  std::vector<double> steps(2 * m);
  for (int i = 0; i < m; ++i) {
    steps[2 * i] = theta_step;
    steps[2 * i + 1] = phi_step;
  }
  std::vector<double> trial(2 * m);
  for (int round = 0; round < 20; ++round) {
    bool improved = true;
    int moves = 0;
    while (improved && moves < 200) {
      improved = false;
      for (int c = 0; c < 2 * m; ++c) {
        for (double sgn : {1.0, -1.0}) {
          trial = angles;
          trial[c] += sgn * steps[c];
          if (c % 2 == 0) {
            trial[c] = std::clamp(trial[c], 0.0, pi_v);
          } else {
            trial[c] = std::fmod(trial[c] + 2.0 * pi_v, 2.0 * pi_v);
          }
          const double v = eval_cells(psi, factors, trial);
          if (v > best) {
            best = v;
            angles = trial;
            improved = true;
            ++moves;
          }
        }
      }
    }
    for (double& s : steps) s /= 2.0;
  }

  best = eval_cells(psi, factors, angles);
  const SingleQubitState pi_last = detail::partial_inner(psi, factors, n);
  const double nrm = std::sqrt(norm_sq(pi_last));
  factors[n - 1] = nrm > 1e-15 ? SingleQubitState{pi_last.c0 / nrm, pi_last.c1 / nrm}
                               : SingleQubitState{};
  res.pmax = best;
  res.nearest = ProductState(std::move(factors));
  return res;
}

}  // namespace

OverlapResult grid_search(const PureState& psi, int resolution) {
  return grid_impl(psi, resolution, true);
}

OverlapResult grid_search_serial(const PureState& psi, int resolution) {
  return grid_impl(psi, resolution, false);
}

FixedPointCheck verify_fixed_point(const PureState& psi, const ProductState& prod) {
  if (psi.qubit_count() != prod.qubit_count())
    throw std::invalid_argument("qubit count mismatch between state and product state");
  const int n = psi.qubit_count();
  double worst = 0.0;
  for (int k = 1; k <= n; ++k) {
    const SingleQubitState pi = detail::partial_inner(psi, prod.factors(), k);
    const double n2 = norm_sq(pi);
    if (n2 < 1e-300) return {1.0, true};
    const double nrm = std::sqrt(n2);
    SingleQubitState u{pi.c0 / nrm, pi.c1 / nrm};
    const SingleQubitState& f = prod.factor(k);
    // Align the update's free phase with the current factor before
    // measuring the distance.
    const cplx c = std::conj(f.c0) * u.c0 + std::conj(f.c1) * u.c1;
    const double cm = std::abs(c);
    const cplx phase = cm > 1e-15 ? std::conj(c) / cm : cplx{1.0, 0.0};
    u.c0 *= phase;
    u.c1 *= phase;
    worst = std::max(worst, factor_dist(f, u));
  }
  return {worst, false};
}

}  // namespace wmax
