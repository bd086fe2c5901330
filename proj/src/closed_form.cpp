#include "wmax/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wmax {

namespace {

// Branch ties within this tolerance report regime = boundary.
constexpr double kBranchTol = 1e-12;

// Index (1-based) of the largest value, lowest index on ties.
int argmax_lowest(const std::vector<double>& v) {
  int best = 1;
  for (int i = 2; i <= static_cast<int>(v.size()); ++i)
    if (v[i - 1] > v[best - 1]) best = i;
  return best;
}

}  // namespace

std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::kHighlyEntangled:
      return "highly-entangled";
    case Regime::kSlightlyEntangled:
      return "slightly-entangled";
    default:
      return "boundary";
  }
}

OverlapResult pmax_two_qubit(const PureState& psi) {
  if (psi.qubit_count() != 2)
    throw std::invalid_argument("pmax_two_qubit needs a 2-qubit state");
  const DensityMatrix rho_a = reduced_density(psi, {1});
  double det = rho_a.matrix().determinant().real();
  // A normalized pure 2-qubit state has det in [0, 1/4]; allow roundoff.
  if (det < -kBranchTol || det > 0.25 + kBranchTol)
    throw std::logic_error("reduced determinant outside [0, 1/4]");
  det = std::clamp(det, 0.0, 0.25);
  const double pmax = 0.5 * (1.0 + std::sqrt(1.0 - 4.0 * det));

  OverlapResult res;
  res.pmax = pmax;
  // pmax is the top Schmidt coefficient squared, which is the 2-qubit form
  // of the max-squared-coefficient law; det = 1/4 is the regime boundary.
  res.regime = std::abs(pmax - 0.5) <= kBranchTol ? Regime::kBoundary
                                                  : Regime::kSlightlyEntangled;
  res.method = "two-qubit-closed-form";

  // Factor 1 of the optimal product state is the top eigenvector of the
  // reduced density matrix; factor 2 follows as the normalized partial
  // inner product.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho_a.matrix());
  const Eigen::Index top = es.eigenvalues()(0) >= es.eigenvalues()(1) ? 0 : 1;
  SingleQubitState f1{es.eigenvectors()(0, top), es.eigenvectors()(1, top)};
  std::vector<SingleQubitState> factors{f1, SingleQubitState{}};
  const SingleQubitState pi = detail::partial_inner(psi, factors, 2);
  const double nrm = std::sqrt(std::norm(pi.c0) + std::norm(pi.c1));
  if (nrm > 1e-15) {
    factors[1] = SingleQubitState{pi.c0 / nrm, pi.c1 / nrm};
    res.nearest = ProductState(std::move(factors));
  }
  return res;
}

OverlapResult pmax_w3(const WParams& params) {
  if (params.size() != 3) throw std::invalid_argument("pmax_w3 needs 3 coefficients");
  const std::vector<double>& a = params.coefficients();
  std::array<double, 3> sq{a[0] * a[0], a[1] * a[1], a[2] * a[2]};
  std::array<double, 3> sides{a[0], a[1], a[2]};
  std::sort(sq.begin(), sq.end(), std::greater<>());
  std::sort(sides.begin(), sides.end(), std::greater<>());
  const double diff = sq[0] - (sq[1] + sq[2]);

  OverlapResult res;
  res.method = "w3-circumradius";
  if (diff > kBranchTol) {
    res.pmax = sq[0];
    res.regime = Regime::kSlightlyEntangled;
    res.method = "w3-max-coefficient";
    res.nearest = ProductState::one_hot(3, argmax_lowest(a));
    return res;
  }
  if (diff >= -kBranchTol) {
    // Right coefficient triangle: the circumradius is half the hypotenuse
    // and both branch values collapse to the largest squared coefficient.
    // Heron is avoided here since the triangle may be degenerate (gamma=0).
    res.pmax = sq[0];
    res.regime = Regime::kBoundary;
    res.circumradius = sides[0] / 2.0;
    res.nearest = ProductState::one_hot(3, argmax_lowest(a));
    return res;
  }
  // Stable Heron on descending sides x >= y >= z; the triangle inequality
  // x <= y + z is implied by x^2 < y^2 + z^2 but asserted anyway.
  const double x = sides[0], y = sides[1], z = sides[2];
  const double t1 = x + (y + z);
  const double t2 = z - (x - y);
  const double t3 = z + (x - y);
  const double t4 = x + (y - z);
  if (t2 <= 0.0) throw std::logic_error("coefficient triangle inequality violated");
  const double area = 0.25 * std::sqrt(t1 * t2 * t3 * t4);
  const double r = (x * y * z) / (4.0 * area);
  res.pmax = 4.0 * r * r;
  res.regime = Regime::kHighlyEntangled;
  res.circumradius = r;
  return res;
}

OverlapResult pmax_wn_one_param(int n, double q) {
  if (n < 3) throw std::invalid_argument("one-parameter formula needs n >= 3");
  if (!(q >= 0.0 && q <= 1.0)) throw std::invalid_argument("q must be in [0, 1]");
  const double q2 = q * q;
  const double d = q2 - 0.5;  // q^2 - (n-1)a^2 rescaled: sign decides the branch

  OverlapResult res;
  res.method = "wn-one-param";
  if (d > kBranchTol) {
    res.pmax = q2;
    res.regime = Regime::kSlightlyEntangled;
    res.nearest = ProductState::one_hot(n, n);
    return res;
  }
  res.pmax = std::pow(1.0 - q2, n - 1) *
             std::pow(static_cast<double>(n - 2) / ((n - 1) - n * q2), n - 2);
  res.regime = d >= -kBranchTol ? Regime::kBoundary : Regime::kHighlyEntangled;
  res.nearest = nearest_wn_one_param(n, q);
  return res;
}

ProductState nearest_wn_one_param(int n, double q, double phase) {
  if (n < 3) throw std::invalid_argument("nearest-state construction needs n >= 3");
  if (!(q >= 0.0 && q <= 1.0)) throw std::invalid_argument("q must be in [0, 1]");
  const double q2 = q * q;
  const double a2 = (1.0 - q2) / (n - 1);
  if (q2 > (n - 1) * a2 + 1e-12)
    throw std::invalid_argument("outside the validity domain q <= 1/sqrt(2)");
  const double a = std::sqrt(a2);
  // t = (n-1)a^2 - q^2 (= 1 - 2q^2), clamped against roundoff at the edge.
  const double t = std::max(0.0, (n - 1) * a2 - q2);
  const double den = std::sqrt((n - 1) * (n - 1) * a2 - q2);
  const cplx ph = std::polar(1.0, phase);

  SingleQubitState head{std::sqrt(static_cast<double>(n - 1) * (n - 2)) * a / den,
                        ph * (std::sqrt(t) / den)};
  SingleQubitState last{std::sqrt((n - 1) * t) / den, ph * (std::sqrt(n - 2.0) * q / den)};
  std::vector<SingleQubitState> factors(n - 1, head);
  factors.push_back(last);
  return ProductState(std::move(factors));
}

OverlapResult pmax_w4_two_param(double a, double b) {
  if (!(a >= 0.0) || !(b >= 0.0)) throw std::invalid_argument("a, b must be non-negative");
  const double s = a * a + b * b;
  if (s > 1.0 + kBranchTol) throw std::invalid_argument("a^2 + b^2 must not exceed 1");
  const double q2 = std::max(0.0, (1.0 - s) / 2.0);

  const std::vector<double> coeff_sq{a * a, b * b, q2, q2};
  const double alpha2 = *std::max_element(coeff_sq.begin(), coeff_sq.end());
  const double rest = (coeff_sq[0] + coeff_sq[1] + coeff_sq[2] + coeff_sq[3]) - alpha2;
  const double diff = alpha2 - rest;

  OverlapResult res;
  res.method = "w4-two-param";
  if (diff >= -kBranchTol) {
    res.pmax = alpha2;
    res.regime = diff > kBranchTol ? Regime::kSlightlyEntangled : Regime::kBoundary;
    res.nearest = ProductState::one_hot(4, argmax_lowest(coeff_sq));
    return res;
  }

  const double big_d = 4.0 * q2 - a * a - b * b;
  const double guard = big_d * big_d - 4.0 * a * a * b * b;
  if (std::abs(guard) < 1e-9) {
    // Removable 0/0 on the line 2q = a + b; inside the highly entangled
    // region that line only exists for min(a,b) >= sqrt2/6 and
    // max(a,b) <= sqrt2/2, so ab > 0 here.
    if (a * b <= 0.0) throw std::logic_error("degenerate line reached with a vanishing side");
    const double lo = std::min(a, b), hi = std::max(a, b);
    if (lo < std::numbers::sqrt2 / 6.0 - 1e-6 || hi > std::numbers::sqrt2 / 2.0 + 1e-6)
      throw std::logic_error("degenerate line outside its parameter bounds");
    const double ab_sum = a + b;
    res.pmax = (27.0 / 256.0) * ab_sum * ab_sum * ab_sum * ab_sum / (a * b);
    res.regime = Regime::kHighlyEntangled;
    res.method = "w4-degenerate-line";
    return res;
  }
  const double num =
      big_d * (big_d * big_d - 36.0 * a * a * b * b) +
      std::pow(big_d * big_d + 12.0 * a * a * b * b, 1.5);
  res.pmax = 2.0 * q2 * q2 * num / (guard * guard);
  res.regime = Regime::kHighlyEntangled;
  return res;
}

std::optional<OverlapResult> pmax_slightly_entangled(const WParams& params) {
  const std::vector<double>& a = params.coefficients();
  std::vector<double> sq(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) sq[i] = a[i] * a[i];
  const double maxsq = *std::max_element(sq.begin(), sq.end());
  if (maxsq < 0.5 - kBranchTol) return std::nullopt;

  OverlapResult res;
  res.pmax = maxsq;
  res.regime = std::abs(maxsq - 0.5) <= kBranchTol ? Regime::kBoundary
                                                   : Regime::kSlightlyEntangled;
  res.nearest = ProductState::one_hot(params.size(), argmax_lowest(sq));
  res.method = "slightly-entangled-rule";
  return res;
}

}  // namespace wmax
