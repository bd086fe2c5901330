#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "wmax/rng.hpp"

// Pure-state representation and the reduced-density / Pauli-correlation
// quantities the rest of the library consumes.
//
// Conventions used throughout:
//   - qubits are numbered 1..n, and qubit 1 is the leftmost position of a
//     basis bitstring; in the integer label, qubit k occupies bit (n-k)
//   - states are never renormalized; a norm violation is an error
//   - amplitudes are stored sparsely, absent labels mean amplitude zero

namespace wmax {

using cplx = std::complex<double>;

// Tolerance for unit-norm checks on states and product factors.
inline constexpr double kNormTol = 1e-9;

// Bit of `label` belonging to qubit k (1-based), for an n-qubit label.
inline int label_bit(std::uint64_t label, int n, int k) {
  return static_cast<int>((label >> (n - k)) & 1u);
}

class PureState {
 public:
  // Amplitudes as (label, value) pairs; duplicates are an error, exact zeros
  // are dropped. Throws std::invalid_argument on norm violation or labels
  // that do not fit in qubit_count bits.
  PureState(int qubit_count, std::vector<std::pair<std::uint64_t, cplx>> amplitudes);

  static PureState basis_state(int qubit_count, std::uint64_t label);

  int qubit_count() const { return qubit_count_; }

  // Sorted by label, zero entries removed.
  const std::vector<std::pair<std::uint64_t, cplx>>& amplitudes() const { return amps_; }

  cplx amplitude(std::uint64_t label) const;

 private:
  int qubit_count_;
  std::vector<std::pair<std::uint64_t, cplx>> amps_;
};

// Real non-negative W-type coefficients a_1..a_n with unit square sum.
class WParams {
 public:
  explicit WParams(std::vector<double> coefficients);

  // (a, ..., a, q) with a = sqrt((1-q^2)/(n-1)).
  static WParams one_param(int n, double q);

  int size() const { return static_cast<int>(coeffs_.size()); }
  // 1-based, matching the qubit numbering.
  double at(int k) const;
  const std::vector<double>& coefficients() const { return coeffs_; }

 private:
  std::vector<double> coeffs_;
};

struct SingleQubitState {
  cplx c0{1.0, 0.0};
  cplx c1{0.0, 0.0};

  double norm_sq() const { return std::norm(c0) + std::norm(c1); }
};

class ProductState {
 public:
  // Each factor must be unit-norm within kNormTol.
  explicit ProductState(std::vector<SingleQubitState> factors);

  // |0..010..0> with the excitation on qubit k (1-based).
  static ProductState one_hot(int n, int k);

  int qubit_count() const { return static_cast<int>(factors_.size()); }
  const SingleQubitState& factor(int k) const;  // k is 1-based
  const std::vector<SingleQubitState>& factors() const { return factors_; }

 private:
  std::vector<SingleQubitState> factors_;
};

struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 1.0;

  double norm() const;

  static BlochVector from_state(const SingleQubitState& s);
  // Inverse map with zero azimuth convention when y = 0:
  // s = (sin t, 0, cos t) -> (cos t/2, sin t/2).
  SingleQubitState to_state() const;
};

class DensityMatrix {
 public:
  // Validates Hermiticity (1e-12), unit trace (1e-12) and positive
  // semidefiniteness (eigenvalues >= -1e-12).
  explicit DensityMatrix(Eigen::MatrixXcd m);

  int dimension() const { return static_cast<int>(m_.rows()); }
  const Eigen::MatrixXcd& matrix() const { return m_; }

 private:
  Eigen::MatrixXcd m_;
};

// Pauli correlation data of a 4-qubit state. For W-type inputs the r-vectors
// are z-aligned, the g matrices diagonal, and h is sparse; the fields below
// keep both the raw tensors and the scalar shorthands the stationarity
// module consumes.
struct CorrelationTensors {
  std::array<std::array<double, 3>, 3> r_vectors{};            // r1, r2, r3
  std::array<double, 4> r_scalars{};                           // r_k = z component; r4 from qubit 4
  std::array<double, 3> r_tilde{};                             // rt1, rt2, rt3
  std::array<double, 3> omega{};                               // w1, w2, w3
  std::array<std::array<std::array<double, 3>, 3>, 3> g_matrices{};  // g[k][i][j]
  std::array<std::array<std::array<double, 3>, 3>, 3> h_tensor{};    // h[i][j][k]
};

// Line-oriented state description: "bitstring real [imag]" per line,
// '#' starts a comment, blank lines ignored. Rejects rather than
// renormalizes.
PureState parse_state(std::istream& in);
PureState parse_state(std::string_view text);

PureState w_state(const WParams& params);

// <q_1...q_n | psi>
cplx overlap(const PureState& psi, const ProductState& prod);

// <(x)_{j!=k} q_j | psi>: the unnormalized single-qubit state left on qubit k
// after contracting every other factor. Factor k of `prod` is ignored.
SingleQubitState partial_inner(const PureState& psi, const ProductState& prod, int k);

// Partial trace onto the (1-based, strictly increasing) qubit subset `keep`.
// Dense in the kept subsystem; qubit_count is capped at 12.
DensityMatrix reduced_density(const PureState& psi, const std::vector<int>& keep);

// Pauli expectation helpers on 2x2 / 4x4 density matrices.
// pauli_vector: v_i = Tr[rho sigma_i]; pauli_matrix: M_ij = Tr[rho sigma_i (x) sigma_j].
std::array<double, 3> pauli_vector(const DensityMatrix& rho);
std::array<std::array<double, 3>, 3> pauli_matrix(const DensityMatrix& rho);

CorrelationTensors correlation_tensors(const PureState& psi);

// One random factor, cos(theta) uniform in [-1,1] and phase uniform; shared
// by the oracle starts and the witness scan.
SingleQubitState random_factor(CounterRng& rng);

namespace detail {

// Validation-free kernels over raw factor arrays. The public overlap /
// partial_inner wrappers and the hot oracle loops share these; callers are
// responsible for factor count and index validity.
cplx overlap(const PureState& psi, const std::vector<SingleQubitState>& factors);
SingleQubitState partial_inner(const PureState& psi, const std::vector<SingleQubitState>& factors, int k);

}  // namespace detail

}  // namespace wmax
