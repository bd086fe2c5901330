#include "wmax/stationarity.hpp"

#include <cmath>
#include <stdexcept>

namespace wmax {

namespace {

void check_unit(const BlochVector& s) {
  if (std::abs(s.x * s.x + s.y * s.y + s.z * s.z - 1.0) > kNormTol)
    throw std::invalid_argument("Bloch vector is not unit length");
}

void check_planar(const BlochVector& s) {
  if (std::abs(s.y) > 1e-12)
    throw std::invalid_argument("nonzero y-component violates the reality convention");
}

double dot(const std::array<double, 3>& a, const BlochVector& s) {
  return a[0] * s.x + a[1] * s.y + a[2] * s.z;
}

double bilinear(const BlochVector& u, const std::array<std::array<double, 3>, 3>& g,
                const BlochVector& v) {
  const std::array<double, 3> uu{u.x, u.y, u.z};
  const std::array<double, 3> vv{v.x, v.y, v.z};
  double acc = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) acc += uu[i] * g[i][j] * vv[j];
  return acc;
}

}  // namespace

double objective_bloch3(const WParams& params, const BlochVector& s1, const BlochVector& s2) {
  if (params.size() != 3) throw std::invalid_argument("objective_bloch3 needs 3 coefficients");
  check_unit(s1);
  check_unit(s2);
  const PureState psi = w_state(params);
  const std::array<double, 3> r1 = pauli_vector(reduced_density(psi, {1}));
  const std::array<double, 3> r2 = pauli_vector(reduced_density(psi, {2}));
  const auto g = pauli_matrix(reduced_density(psi, {1, 2}));
  return 0.25 * (1.0 + dot(r1, s1) + dot(r2, s2) + bilinear(s1, g, s2));
}

double objective_bloch4(const CorrelationTensors& t, const BlochVector& s1,
                        const BlochVector& s2, const BlochVector& s3) {
  check_unit(s1);
  check_unit(s2);
  check_unit(s3);
  const std::array<double, 3> v1{s1.x, s1.y, s1.z};
  const std::array<double, 3> v2{s2.x, s2.y, s2.z};
  const std::array<double, 3> v3{s3.x, s3.y, s3.z};
  double triple = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) triple += t.h_tensor[i][j][k] * v1[i] * v2[j] * v3[k];
  return 0.125 * (1.0 + dot(t.r_vectors[0], s1) + dot(t.r_vectors[1], s2) +
                  dot(t.r_vectors[2], s3) + bilinear(s1, t.g_matrices[2], s2) +
                  bilinear(s1, t.g_matrices[1], s3) + bilinear(s2, t.g_matrices[0], s3) +
                  triple);
}

std::array<double, 3> residual_lagrange4(const CorrelationTensors& t, const BlochVector& s1,
                                         const BlochVector& s2, const BlochVector& s3) {
  for (const BlochVector* s : {&s1, &s2, &s3}) {
    check_unit(*s);
    check_planar(*s);
  }
  const auto& r = t.r_scalars;
  const auto& rt = t.r_tilde;
  const auto& om = t.omega;
  std::array<double, 3> eq{};
  eq[0] = s1.x * (r[0] - rt[2] * s2.z - rt[1] * s3.z + om[0] * s2.x * s3.x -
                  r[3] * s2.z * s3.z) -
          s1.z * (om[1] * s3.x * (1.0 + s2.z) + om[2] * s2.x * (1.0 + s3.z));
  eq[1] = s2.x * (r[1] - rt[2] * s1.z - rt[0] * s3.z + om[1] * s1.x * s3.x -
                  r[3] * s1.z * s3.z) -
          s2.z * (om[0] * s3.x * (1.0 + s1.z) + om[2] * s1.x * (1.0 + s3.z));
  eq[2] = s3.x * (r[2] - rt[1] * s1.z - rt[0] * s2.z + om[2] * s1.x * s2.x -
                  r[3] * s1.z * s2.z) -
          s3.z * (om[0] * s2.x * (1.0 + s1.z) + om[1] * s1.x * (1.0 + s2.z));
  return eq;
}

double residual_single3(const WParams& params, const BlochVector& s1, const BlochVector& s2) {
  if (params.size() != 3) throw std::invalid_argument("residual_single3 needs 3 coefficients");
  for (const BlochVector* s : {&s1, &s2}) {
    check_unit(*s);
    check_planar(*s);
  }
  const double a1 = params.at(1), a2 = params.at(2), a3 = params.at(3);
  const double r1 = a2 * a2 + a3 * a3 - a1 * a1;
  const double r3 = a1 * a1 + a2 * a2 - a3 * a3;
  const double om = 2.0 * a1 * a2;
  return s1.x * (r1 - r3 * s2.z) - om * s1.z * s2.x;
}

SingleVarPQ single4_pq(const WParams& params, double z2, double z3) {
  if (params.size() != 4) throw std::invalid_argument("single4_pq needs 4 coefficients");
  if (std::abs(z2) > 1.0 || std::abs(z3) > 1.0)
    throw std::invalid_argument("z components must lie in [-1, 1]");
  const double a1 = params.at(1), a2 = params.at(2), a3 = params.at(3), a4 = params.at(4);
  const double om1 = 2.0 * a2 * a3, om2 = 2.0 * a1 * a3, om3 = 2.0 * a1 * a2;
  const double rt2 = a1 * a1 + a3 * a3 - a2 * a2 - a4 * a4;
  const double rt3 = a1 * a1 + a2 * a2 - a3 * a3 - a4 * a4;
  const double r1 = 1.0 - 2.0 * a1 * a1;
  const double r4 = 1.0 - 2.0 * a4 * a4;
  const double x2 = std::sqrt(1.0 - z2 * z2);
  const double x3 = std::sqrt(1.0 - z3 * z3);
  SingleVarPQ out;
  out.p = om2 * x3 * (1.0 + z2) + om3 * x2 * (1.0 + z3);
  out.q = r1 - rt3 * z2 - rt2 * z3 + om1 * x2 * x3 - r4 * z2 * z3;
  return out;
}

BlochSolution solve_symmetric(int n, double q) {
  if (n != 3 && n != 4) throw std::invalid_argument("symmetric solution covers n = 3 and 4");
  if (!(q >= 0.0 && q <= 1.0)) throw std::invalid_argument("q must be in [0, 1]");
  const double q2 = q * q;
  if (q2 > 1.0 - q2 + 1e-12)
    throw std::invalid_argument("outside the validity domain (s_x would be imaginary)");
  const double a2 = (1.0 - q2) / (n - 1);

  const double sz = n == 3 ? q2 / (4.0 * a2 - q2) : 1.0 / (9.0 * a2 - q2);
  const double sx = std::sqrt(std::max(0.0, 1.0 - sz * sz));
  const BlochVector s{sx, 0.0, sz};

  BlochSolution sol;
  sol.s_vectors.assign(n - 1, s);
  const WParams params = WParams::one_param(n, q);
  if (n == 3) {
    sol.objective = objective_bloch3(params, s, s);
    sol.residual = std::abs(residual_single3(params, s, s));
  } else {
    const CorrelationTensors t = correlation_tensors(w_state(params));
    sol.objective = objective_bloch4(t, s, s, s);
    const std::array<double, 3> eq = residual_lagrange4(t, s, s, s);
    sol.residual = std::max({std::abs(eq[0]), std::abs(eq[1]), std::abs(eq[2])});
  }
  return sol;
}

}  // namespace wmax
