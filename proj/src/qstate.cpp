#include "wmax/qstate.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>

namespace wmax {

PureState::PureState(int qubit_count, std::vector<std::pair<std::uint64_t, cplx>> amplitudes)
    : qubit_count_(qubit_count), amps_(std::move(amplitudes)) {
  if (qubit_count_ < 1 || qubit_count_ > 63)
    throw std::invalid_argument("qubit count must be in 1..63");
  std::sort(amps_.begin(), amps_.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });
  const std::uint64_t limit = std::uint64_t{1} << qubit_count_;
  double norm2 = 0.0;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (amps_[i].first >= limit)
      throw std::invalid_argument("basis label does not fit the qubit count");
    if (i > 0 && amps_[i].first == amps_[i - 1].first)
      throw std::invalid_argument("duplicate basis label");
    norm2 += std::norm(amps_[i].second);
  }
  if (std::abs(norm2 - 1.0) > kNormTol)
    throw std::invalid_argument("state is not normalized (squared norm " +
                                std::to_string(norm2) + ")");
  std::erase_if(amps_, [](const auto& p) { return p.second == cplx{}; });
}

PureState PureState::basis_state(int qubit_count, std::uint64_t label) {
  return PureState(qubit_count, {{label, cplx{1.0, 0.0}}});
}

cplx PureState::amplitude(std::uint64_t label) const {
  auto it = std::lower_bound(amps_.begin(), amps_.end(), label,
                             [](const auto& p, std::uint64_t l) { return p.first < l; });
  if (it != amps_.end() && it->first == label) return it->second;
  return {};
}

WParams::WParams(std::vector<double> coefficients) : coeffs_(std::move(coefficients)) {
  if (coeffs_.size() < 2) throw std::invalid_argument("need at least 2 coefficients");
  double s = 0.0;
  for (double c : coeffs_) {
    if (!(c >= 0.0)) throw std::invalid_argument("coefficients must be non-negative");
    s += c * c;
  }
  if (std::abs(s - 1.0) > kNormTol)
    throw std::invalid_argument("coefficients must have unit square sum");
}

WParams WParams::one_param(int n, double q) {
  if (n < 2) throw std::invalid_argument("one-parameter family needs n >= 2");
  if (!(q >= 0.0 && q <= 1.0)) throw std::invalid_argument("q must be in [0, 1]");
  const double a = std::sqrt((1.0 - q * q) / (n - 1));
  std::vector<double> c(n, a);
  c.back() = q;
  return WParams(std::move(c));
}

double WParams::at(int k) const {
  if (k < 1 || k > size()) throw std::out_of_range("coefficient index out of range");
  return coeffs_[k - 1];
}

ProductState::ProductState(std::vector<SingleQubitState> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw std::invalid_argument("product state needs at least one factor");
  for (const auto& f : factors_)
    if (std::abs(f.norm_sq() - 1.0) > kNormTol)
      throw std::invalid_argument("product factor is not unit norm");
}

ProductState ProductState::one_hot(int n, int k) {
  if (n < 1 || k < 1 || k > n) throw std::invalid_argument("one-hot index out of range");
  std::vector<SingleQubitState> f(n);
  f[k - 1] = SingleQubitState{{0.0, 0.0}, {1.0, 0.0}};
  return ProductState(std::move(f));
}

const SingleQubitState& ProductState::factor(int k) const {
  if (k < 1 || k > qubit_count()) throw std::out_of_range("factor index out of range");
  return factors_[k - 1];
}

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

BlochVector BlochVector::from_state(const SingleQubitState& s) {
  if (std::abs(s.norm_sq() - 1.0) > kNormTol)
    throw std::invalid_argument("factor is not unit norm");
  const cplx c = std::conj(s.c0) * s.c1;
  return {2.0 * c.real(), 2.0 * c.imag(), std::norm(s.c0) - std::norm(s.c1)};
}

SingleQubitState BlochVector::to_state() const {
  if (std::abs(x * x + y * y + z * z - 1.0) > kNormTol)
    throw std::invalid_argument("Bloch vector is not unit length");
  const double theta = std::atan2(std::hypot(x, y), z);
  const double phi = (x == 0.0 && y == 0.0) ? 0.0 : std::atan2(y, x);
  return {std::cos(theta / 2.0), std::polar(std::sin(theta / 2.0), phi)};
}

DensityMatrix::DensityMatrix(Eigen::MatrixXcd m) : m_(std::move(m)) {
  const auto dim = m_.rows();
  if (dim < 1 || dim != m_.cols()) throw std::invalid_argument("density matrix must be square");
  if ((dim & (dim - 1)) != 0)
    throw std::invalid_argument("density matrix dimension must be a power of two");
  if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
    throw std::invalid_argument("density matrix is not Hermitian");
  const cplx tr = m_.trace();
  if (std::abs(tr.real() - 1.0) > 1e-12 || std::abs(tr.imag()) > 1e-12)
    throw std::invalid_argument("density matrix trace must be 1");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-12)
    throw std::invalid_argument("density matrix has a negative eigenvalue");
}

namespace {

double parse_double(const std::string& tok, int lineno) {
  double v = 0.0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  auto [p, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || p != last)
    throw std::invalid_argument("unparsable number '" + tok + "' at line " +
                                std::to_string(lineno));
  return v;
}

}  // namespace

PureState parse_state(std::istream& in) {
  std::vector<std::pair<std::uint64_t, cplx>> amps;
  int nbits = -1;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    std::istringstream ls(line);
    std::string bits;
    if (!(ls >> bits)) continue;
    for (char c : bits)
      if (c != '0' && c != '1')
        throw std::invalid_argument("bad bitstring '" + bits + "' at line " +
                                    std::to_string(lineno));
    if (nbits == -1) {
      nbits = static_cast<int>(bits.size());
    } else if (static_cast<int>(bits.size()) != nbits) {
      throw std::invalid_argument("inconsistent bit length at line " + std::to_string(lineno));
    }
    std::string re_s, im_s;
    if (!(ls >> re_s))
      throw std::invalid_argument("missing amplitude at line " + std::to_string(lineno));
    const bool has_im = static_cast<bool>(ls >> im_s);
    std::string extra;
    if (ls >> extra)
      throw std::invalid_argument("trailing tokens at line " + std::to_string(lineno));
    const double re = parse_double(re_s, lineno);
    const double im = has_im ? parse_double(im_s, lineno) : 0.0;
    std::uint64_t label = 0;
    for (char c : bits) label = (label << 1) | static_cast<std::uint64_t>(c == '1');
    amps.emplace_back(label, cplx{re, im});
  }
  if (nbits == -1) throw std::invalid_argument("no amplitudes in state description");
  return PureState(nbits, std::move(amps));
}

PureState parse_state(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_state(in);
}

PureState w_state(const WParams& params) {
  const int n = params.size();
  std::vector<std::pair<std::uint64_t, cplx>> amps;
  for (int k = 1; k <= n; ++k)
    amps.emplace_back(std::uint64_t{1} << (n - k), cplx{params.at(k), 0.0});
  return PureState(n, std::move(amps));
}

namespace detail {

cplx overlap(const PureState& psi, const std::vector<SingleQubitState>& factors) {
  const int n = psi.qubit_count();
  cplx tot = 0.0;
  for (const auto& [label, amp] : psi.amplitudes()) {
    cplx t = amp;
    for (int k = 1; k <= n; ++k) {
      const SingleQubitState& q = factors[k - 1];
      t *= std::conj(label_bit(label, n, k) ? q.c1 : q.c0);
    }
    tot += t;
  }
  return tot;
}

SingleQubitState partial_inner(const PureState& psi, const std::vector<SingleQubitState>& factors,
                               int k) {
  const int n = psi.qubit_count();
  cplx out0 = 0.0, out1 = 0.0;
  for (const auto& [label, amp] : psi.amplitudes()) {
    cplx t = amp;
    for (int j = 1; j <= n; ++j) {
      if (j == k) continue;
      const SingleQubitState& q = factors[j - 1];
      t *= std::conj(label_bit(label, n, j) ? q.c1 : q.c0);
    }
    (label_bit(label, n, k) ? out1 : out0) += t;
  }
  return {out0, out1};
}

}  // namespace detail

cplx overlap(const PureState& psi, const ProductState& prod) {
  if (psi.qubit_count() != prod.qubit_count())
    throw std::invalid_argument("qubit count mismatch between state and product state");
  return detail::overlap(psi, prod.factors());
}

SingleQubitState partial_inner(const PureState& psi, const ProductState& prod, int k) {
  if (psi.qubit_count() != prod.qubit_count())
    throw std::invalid_argument("qubit count mismatch between state and product state");
  if (k < 1 || k > psi.qubit_count()) throw std::out_of_range("qubit index out of range");
  return detail::partial_inner(psi, prod.factors(), k);
}

DensityMatrix reduced_density(const PureState& psi, const std::vector<int>& keep) {
  const int n = psi.qubit_count();
  if (keep.empty()) throw std::invalid_argument("keep subset must be nonempty");
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 1 || keep[i] > n)
      throw std::invalid_argument("qubit index out of range in keep subset");
    if (i > 0 && keep[i] <= keep[i - 1])
      throw std::invalid_argument("keep subset must be strictly increasing");
  }
  if (keep.size() > 12) throw std::invalid_argument("dense reduction capped at 12 qubits");
  const int m = static_cast<int>(keep.size());
  std::uint64_t keep_mask = 0;
  for (int k : keep) keep_mask |= std::uint64_t{1} << (n - k);
  const auto sub = [&](std::uint64_t label) {
    std::uint64_t idx = 0;
    for (int i = 0; i < m; ++i)
      idx = (idx << 1) | static_cast<std::uint64_t>(label_bit(label, n, keep[i]));
    return idx;
  };
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(1 << m, 1 << m);
  for (const auto& [lx, ax] : psi.amplitudes())
    for (const auto& [ly, ay] : psi.amplitudes())
      if (((lx ^ ly) & ~keep_mask) == 0) rho(sub(lx), sub(ly)) += ax * std::conj(ay);
  return DensityMatrix(std::move(rho));
}

namespace {

Eigen::Matrix2cd pauli(int i) {
  Eigen::Matrix2cd s;
  switch (i) {
    case 1:
      s << 0, 1, 1, 0;
      break;
    case 2:
      s << 0, cplx(0, -1), cplx(0, 1), 0;
      break;
    default:
      s << 1, 0, 0, -1;
  }
  return s;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    for (Eigen::Index c = 0; c < a.cols(); ++c)
      out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
  return out;
}

}  // namespace

std::array<double, 3> pauli_vector(const DensityMatrix& rho) {
  if (rho.dimension() != 2)
    throw std::invalid_argument("pauli_vector needs a single-qubit density matrix");
  std::array<double, 3> v{};
  for (int i = 1; i <= 3; ++i) v[i - 1] = (rho.matrix() * pauli(i)).trace().real();
  return v;
}

std::array<std::array<double, 3>, 3> pauli_matrix(const DensityMatrix& rho) {
  if (rho.dimension() != 4)
    throw std::invalid_argument("pauli_matrix needs a two-qubit density matrix");
  std::array<std::array<double, 3>, 3> m{};
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      m[i - 1][j - 1] = (rho.matrix() * kron(pauli(i), pauli(j))).trace().real();
  return m;
}

CorrelationTensors correlation_tensors(const PureState& psi) {
  if (psi.qubit_count() != 4)
    throw std::invalid_argument("correlation tensors are defined for 4-qubit states");
  CorrelationTensors t;
  for (int k = 1; k <= 3; ++k) t.r_vectors[k - 1] = pauli_vector(reduced_density(psi, {k}));
  for (int k = 0; k < 3; ++k) t.r_scalars[k] = t.r_vectors[k][2];
  t.r_scalars[3] = pauli_vector(reduced_density(psi, {4}))[2];
  // g^(k) couples the two qubits among 1..3 other than k.
  const std::array<std::vector<int>, 3> pairs = {{{2, 3}, {1, 3}, {1, 2}}};
  for (int k = 0; k < 3; ++k) t.g_matrices[k] = pauli_matrix(reduced_density(psi, pairs[k]));
  for (int k = 0; k < 3; ++k) {
    t.omega[k] = t.g_matrices[k][0][0];
    t.r_tilde[k] = -t.g_matrices[k][2][2];
  }
  const DensityMatrix r123 = reduced_density(psi, {1, 2, 3});
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int k = 1; k <= 3; ++k)
        t.h_tensor[i - 1][j - 1][k - 1] =
            (r123.matrix() * kron(kron(pauli(i), pauli(j)), pauli(k))).trace().real();
  return t;
}

SingleQubitState random_factor(CounterRng& rng) {
  const double z = 1.0 - 2.0 * rng.uniform();
  const double phi = 2.0 * std::numbers::pi * rng.uniform();
  return {std::sqrt((1.0 + z) / 2.0), std::polar(std::sqrt((1.0 - z) / 2.0), phi)};
}

}  // namespace wmax
