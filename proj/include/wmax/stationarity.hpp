#pragma once

#include <array>
#include <vector>

#include "wmax/qstate.hpp"

// Bloch-vector form of the overlap maximand and the multiplier-free
// stationarity residuals, plus the symmetric analytic solutions for the
// one-parameter family at n = 3, 4. The Lagrange multipliers themselves are
// eliminated algebraically and never appear.
//
// Convention: product factors live in the x-z plane (zero azimuth), so all
// Bloch vectors here have y = 0.

namespace wmax {

struct BlochSolution {
  std::vector<BlochVector> s_vectors;  // qubits 1..n-1; the last factor follows
  double objective = 0.0;
  double residual = 0.0;
};

// (1/4)[1 + s1.r1 + s2.r2 + s1 g s2] for a 3-qubit W-type state; equals the
// squared overlap with the product state whose first two factors have Bloch
// vectors s1, s2 and whose third factor is the optimal (normalized partial
// inner product) one.
double objective_bloch3(const WParams& params, const BlochVector& s1, const BlochVector& s2);

// (1/8)[1 + sum s_k.r_k + pairwise g terms + h triple term] for a 4-qubit
// state, same reading: the fourth factor is implicitly optimal.
double objective_bloch4(const CorrelationTensors& t, const BlochVector& s1,
                        const BlochVector& s2, const BlochVector& s3);

// Left-minus-right values of the three multiplier-free stationarity
// equations for the 4-qubit family; all vanish at stationary points.
// Inputs must be unit vectors with zero y-components.
std::array<double, 3> residual_lagrange4(const CorrelationTensors& t, const BlochVector& s1,
                                         const BlochVector& s2, const BlochVector& s3);

// 3-qubit single-variable stationarity condition, cross-multiplied to avoid
// dividing by s_z near the one-hot solution:
//   sqrt(1-s1z^2) (r1 - r3 s2z) - w s1z sqrt(1-s2z^2).
// s1 is qubit 1's vector for coefficient order (a1,a2,a3); s2 is qubit 2's,
// i.e. qubit 1's vector for the swapped order (a2,a1,a3). For the symmetric
// family the two coincide.
double residual_single3(const WParams& params, const BlochVector& s1, const BlochVector& s2);

// Test intermediates of the single-variable 4-qubit reduction s1x/s1z = P/Q.
// z2 and z3 are the s1z values for coefficient orders (a2,a1,a3,a4) and
// (a3,a2,a1,a4). No root finding is attempted on these.
struct SingleVarPQ {
  double p = 0.0;
  double q = 0.0;
};
SingleVarPQ single4_pq(const WParams& params, double z2, double z3);

// Symmetric analytic Bloch solution for the one-parameter family:
// n=3: s_z = q^2/(4a^2-q^2); n=4: s_z = 1/(9a^2-q^2); s_x = sqrt(1-s_z^2).
// Valid for q^2 <= (n-1)a^2, i.e. q <= 1/sqrt2.
BlochSolution solve_symmetric(int n, double q);

}  // namespace wmax
