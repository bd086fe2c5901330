#include "wmax/sweep.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "wmax/format.hpp"

namespace wmax {

namespace {

double parse_back(const std::string& s) {
  double v = 0.0;
  std::from_chars(s.data(), s.data() + s.size(), v);
  return v;
}

// The printed abs_diff must be recomputable from the printed closed and
// oracle fields alone, so it is derived from the round-tripped 12-digit
// values rather than the internal doubles.
std::string printed_diff(const std::string& closed_s, const std::string& oracle_s) {
  return fmt12(std::abs(parse_back(closed_s) - parse_back(oracle_s)));
}

std::string wn_row(const SweepSpec& spec, double q) {
  std::string closed_s, oracle_s, regime_s, diff_s;
  if (spec.method_closed) {
    const OverlapResult r = pmax_wn_one_param(spec.n, q);
    closed_s = fmt12(r.pmax);
    regime_s = std::string(to_string(*r.regime));
  }
  if (spec.method_oracle) {
    const OracleResult r = alternating_maximize(w_state(WParams::one_param(spec.n, q)), spec.oracle);
    oracle_s = fmt12(r.pmax);
  }
  if (spec.method_closed && spec.method_oracle) diff_s = printed_diff(closed_s, oracle_s);
  return fmt12(q) + "," + closed_s + "," + oracle_s + "," + regime_s + "," + diff_s;
}

std::string w4_row(const SweepSpec& spec, double a, double b) {
  if (a * a + b * b > 1.0 + 1e-12)
    return "# skipped a=" + fmt12(a) + " b=" + fmt12(b) + " (a^2 + b^2 > 1)";
  const double q = std::sqrt(std::max(0.0, (1.0 - a * a - b * b) / 2.0));
  std::string closed_s, oracle_s, regime_s, diff_s;
  if (spec.method_closed) {
    const OverlapResult r = pmax_w4_two_param(a, b);
    closed_s = fmt12(r.pmax);
    regime_s = std::string(to_string(*r.regime));
  }
  if (spec.method_oracle) {
    const WParams params({a, b, q, q});
    const OracleResult r = alternating_maximize(w_state(params), spec.oracle);
    oracle_s = fmt12(r.pmax);
  }
  if (spec.method_closed && spec.method_oracle) diff_s = printed_diff(closed_s, oracle_s);
  return fmt12(a) + "," + fmt12(b) + "," + fmt12(q) + "," + closed_s + "," + oracle_s + "," +
         regime_s + "," + diff_s;
}

}  // namespace

void validate(const SweepSpec& spec) {
  if (!spec.method_closed && !spec.method_oracle)
    throw std::invalid_argument("at least one method must be enabled");
  if (spec.family == SweepFamily::kWnOneParam) {
    if (spec.n < 3) throw std::invalid_argument("wn sweep needs n >= 3");
    if (spec.q_steps < 2) throw std::invalid_argument("step counts must be >= 2");
    if (!(spec.q_min >= 0.0 && spec.q_max <= 1.0 && spec.q_min <= spec.q_max))
      throw std::invalid_argument("q range must satisfy 0 <= q_min <= q_max <= 1");
  } else {
    if (spec.a_steps < 2 || spec.b_steps < 2)
      throw std::invalid_argument("step counts must be >= 2");
    if (!(spec.a_min >= 0.0 && spec.a_max <= 1.0 && spec.a_min <= spec.a_max) ||
        !(spec.b_min >= 0.0 && spec.b_max <= 1.0 && spec.b_min <= spec.b_max))
      throw std::invalid_argument("a, b ranges must lie inside [0, 1]");
  }
}

std::string sweep_csv(const SweepSpec& spec) {
  validate(spec);
  std::ostringstream out;
  std::vector<std::string> rows;
  if (spec.family == SweepFamily::kWnOneParam) {
    out << "# one-parameter family sweep: n=" << spec.n << ", q in [" << fmt12(spec.q_min)
        << ", " << fmt12(spec.q_max) << "], " << spec.q_steps << " points\n";
    rows.resize(spec.q_steps);
    const double step = (spec.q_max - spec.q_min) / (spec.q_steps - 1);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int i = 0; i < spec.q_steps; ++i) rows[i] = wn_row(spec, spec.q_min + i * step);
    out << "# methods:" << (spec.method_closed ? " closed" : "")
        << (spec.method_oracle ? " oracle" : "") << "; oracle seed " << spec.oracle.seed
        << "\n";
    out << "q,closed,oracle,regime,abs_diff\n";
  } else {
    out << "# two-parameter family sweep: a in [" << fmt12(spec.a_min) << ", "
        << fmt12(spec.a_max) << "] x" << spec.a_steps << ", b in [" << fmt12(spec.b_min)
        << ", " << fmt12(spec.b_max) << "] x" << spec.b_steps << "\n";
    rows.resize(static_cast<std::size_t>(spec.a_steps) * spec.b_steps);
    const double astep = (spec.a_max - spec.a_min) / (spec.a_steps - 1);
    const double bstep = (spec.b_max - spec.b_min) / (spec.b_steps - 1);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int i = 0; i < spec.a_steps; ++i)
      for (int j = 0; j < spec.b_steps; ++j)
        rows[static_cast<std::size_t>(i) * spec.b_steps + j] =
            w4_row(spec, spec.a_min + i * astep, spec.b_min + j * bstep);
    out << "# methods:" << (spec.method_closed ? " closed" : "")
        << (spec.method_oracle ? " oracle" : "") << "; oracle seed " << spec.oracle.seed
        << "\n";
    out << "a,b,q,closed,oracle,regime,abs_diff\n";
  }
  for (const std::string& r : rows) out << r << "\n";
  return out.str();
}

void write_sweep_csv(const SweepSpec& spec, std::ostream& out) { out << sweep_csv(spec); }

}  // namespace wmax
