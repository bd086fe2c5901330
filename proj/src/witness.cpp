#include "wmax/witness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "wmax/closed_form.hpp"

namespace wmax {

namespace {

// <w|psi> over the sparse amplitude lists (both sorted by label).
cplx sparse_inner(const PureState& w, const PureState& psi) {
  const auto& a = w.amplitudes();
  const auto& b = psi.amplitudes();
  cplx acc = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first < b[j].first) {
      ++i;
    } else if (b[j].first < a[i].first) {
      ++j;
    } else {
      acc += std::conj(a[i].second) * b[j].second;
      ++i;
      ++j;
    }
  }
  return acc;
}

}  // namespace

WitnessOperator build_witness(int n, double q) {
  if (n < 3) throw std::invalid_argument("witness construction needs n >= 3");
  WitnessOperator w{n, q, pmax_wn_one_param(n, q).pmax, w_state(WParams::one_param(n, q))};
  return w;
}

double evaluate(const WitnessOperator& w, const PureState& psi) {
  if (psi.qubit_count() != w.n)
    throw std::invalid_argument("qubit count mismatch with witness");
  double trace = 0.0;
  for (const auto& [label, amp] : psi.amplitudes()) trace += std::norm(amp);
  return w.pmax * trace - std::norm(sparse_inner(w.w_state, psi));
}

double evaluate(const WitnessOperator& w, const ProductState& prod) {
  if (prod.qubit_count() != w.n)
    throw std::invalid_argument("qubit count mismatch with witness");
  double trace = 1.0;
  for (const auto& f : prod.factors()) trace *= f.norm_sq();
  return w.pmax * trace - std::norm(detail::overlap(w.w_state, prod.factors()));
}

double evaluate(const WitnessOperator& w, const DensityMatrix& rho) {
  if (w.n > 12) throw std::invalid_argument("dense witness evaluation capped at 12 qubits");
  if (rho.dimension() != (1 << w.n))
    throw std::invalid_argument("density matrix dimension mismatch with witness");
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(rho.dimension());
  for (const auto& [label, amp] : w.w_state.amplitudes())
    v(static_cast<Eigen::Index>(label)) = amp;
  const double expect = (v.adjoint() * rho.matrix() * v)(0, 0).real();
  return w.pmax * rho.matrix().trace().real() - expect;
}

namespace {

double scan_impl(const WitnessOperator& w, int samples, std::uint64_t seed, bool parallel) {
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");

  // Deterministic candidates first: the one-hot product states are exact
  // witness zeros in the slightly entangled regime, and the analytic nearest
  // state is the zero in the highly entangled one. They pin the scan minimum
  // at the witness's tight point instead of leaving it to sampling luck.
  double min_val = std::numeric_limits<double>::infinity();
  for (int k = 1; k <= w.n; ++k)
    min_val = std::min(min_val, evaluate(w, ProductState::one_hot(w.n, k)));
  if (w.q * w.q <= 0.5 + 1e-12)
    min_val = std::min(min_val, evaluate(w, nearest_wn_one_param(w.n, w.q)));

  std::vector<double> vals(samples);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
  for (int i = 0; i < samples; ++i) {
    CounterRng rng(seed, static_cast<std::uint64_t>(i));
    std::vector<SingleQubitState> factors(w.n);
    for (auto& f : factors) f = random_factor(rng);
    double trace = 1.0;
    for (const auto& f : factors) trace *= f.norm_sq();
    vals[i] = w.pmax * trace - std::norm(detail::overlap(w.w_state, factors));
  }
  (void)parallel;
  for (double v : vals) min_val = std::min(min_val, v);
  return min_val;
}

}  // namespace

double separable_scan(const WitnessOperator& w, int samples, std::uint64_t seed) {
  return scan_impl(w, samples, seed, true);
}

double separable_scan_serial(const WitnessOperator& w, int samples, std::uint64_t seed) {
  return scan_impl(w, samples, seed, false);
}

}  // namespace wmax
