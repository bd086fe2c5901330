#pragma once

#include <cstdint>

#include "wmax/qstate.hpp"

// Entanglement witness for the one-parameter W-type family, kept in the
// implicit form  W = pmax * I - |w><w|  (never densified): expectation
// values reduce to inner products against the reference state.

namespace wmax {

struct WitnessOperator {
  int n = 0;
  double q = 0.0;
  double pmax = 0.0;
  PureState w_state;
};

WitnessOperator build_witness(int n, double q);

// Tr(W rho) for the three payload shapes. All equal
// pmax * Tr(rho) - <w|rho|w>.
double evaluate(const WitnessOperator& w, const PureState& psi);
double evaluate(const WitnessOperator& w, const ProductState& prod);
double evaluate(const WitnessOperator& w, const DensityMatrix& rho);

// Minimum witness expectation over product states: a fixed set of
// deterministic candidates (the one-hot states, plus the analytic nearest
// state when inside its validity domain) followed by `samples` seeded random
// product states. Non-negative up to roundoff when pmax is correct, and the
// candidates make the minimum exactly tight.
double separable_scan(const WitnessOperator& w, int samples, std::uint64_t seed);
double separable_scan_serial(const WitnessOperator& w, int samples, std::uint64_t seed);

}  // namespace wmax
