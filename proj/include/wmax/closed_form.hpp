#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "wmax/qstate.hpp"

// Analytic maximal-overlap formulas for W-type states, their validity
// regimes, and the nearest-product-state constructions.

namespace wmax {

enum class Regime { kHighlyEntangled, kSlightlyEntangled, kBoundary };

std::string_view to_string(Regime r);

struct OverlapResult {
  double pmax = 0.0;
  // Set by every closed-form routine; left empty by numeric searches, which
  // have no branch to classify.
  std::optional<Regime> regime;
  // Circumradius R of the coefficient triangle; 3-qubit triangle branch only.
  std::optional<double> circumradius;
  std::optional<ProductState> nearest;
  std::string method;
};

// pmax = (1 + sqrt(1 - 4 det rho_A)) / 2 for any 2-qubit pure state.
OverlapResult pmax_two_qubit(const PureState& psi);

// 3-qubit W-type state. Sorting squared coefficients into alpha^2 >= beta^2
// >= gamma^2: the triangle branch 4R^2 applies when alpha^2 <= beta^2 +
// gamma^2 (R the circumradius of the triangle with the coefficients as
// sides), otherwise pmax = alpha^2.
OverlapResult pmax_w3(const WParams& params);

// One-parameter family (a,...,a,q), a = sqrt((1-q^2)/(n-1)), n >= 3.
// q <= 1/sqrt2: pmax = (1-q^2)^(n-1) * ((n-2)/((n-1)-n q^2))^(n-2);
// beyond, pmax = q^2.
OverlapResult pmax_wn_one_param(int n, double q);

// Nearest product state for the one-parameter family in the highly
// entangled domain q^2 <= (n-1) a^2. `phase` is the free phase angle of the
// excited components; the overlap modulus does not depend on it.
ProductState nearest_wn_one_param(int n, double q, double phase = 0.0);

// Two-parameter 4-qubit family (a, b, q, q) with q = sqrt((1-a^2-b^2)/2).
// Rational closed form in the highly entangled region, with the removable
// 0/0 singularity on the line 2q = a+b replaced by its limit
// (27/256)(a+b)^4/(ab); max(a^2, b^2, q^2) in the slightly entangled region.
OverlapResult pmax_w4_two_param(double a, double b);

// Generic W-type rule for the slightly entangled region: when some
// a_k^2 >= 1/2, pmax is exactly max_k a_k^2 and the nearest state is the
// corresponding one-hot basis state. Empty when no coefficient dominates
// (no analytic answer is claimed there).
std::optional<OverlapResult> pmax_slightly_entangled(const WParams& params);

}  // namespace wmax
