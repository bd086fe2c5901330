#pragma once

#include <iosfwd>
#include <string>

#include "wmax/oracle.hpp"

// Parameter sweeps over the closed forms and the alternating oracle,
// emitted as CSV. Rows are computed independently (parallel under OpenMP)
// and written in ascending parameter order; output is byte-identical across
// runs for fixed spec and seed.

namespace wmax {

enum class SweepFamily { kWnOneParam, kW4TwoParam };

struct SweepSpec {
  SweepFamily family = SweepFamily::kWnOneParam;

  // wn-one-param: q sweeps [q_min, q_max] inclusive in q_steps points.
  int n = 4;
  double q_min = 0.0;
  double q_max = 0.99;
  int q_steps = 100;

  // w4-two-param: (a, b) lattice, each axis inclusive of both ends.
  double a_min = 0.0;
  double a_max = 0.975;
  int a_steps = 40;
  double b_min = 0.0;
  double b_max = 0.975;
  int b_steps = 40;

  bool method_closed = true;
  bool method_oracle = true;

  AlternatingOptions oracle;
};

// Throws std::invalid_argument on out-of-domain ranges or step counts < 2.
void validate(const SweepSpec& spec);

// Header comments + column header + rows. Columns:
//   wn family: q,closed,oracle,regime,abs_diff
//   w4 family: a,b,q,closed,oracle,regime,abs_diff
// Disabled-method columns are left empty; w4 lattice points with
// a^2 + b^2 > 1 become '#' comment rows.
void write_sweep_csv(const SweepSpec& spec, std::ostream& out);

std::string sweep_csv(const SweepSpec& spec);

}  // namespace wmax
