#include "wmax/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <numbers>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "wmax/closed_form.hpp"
#include "wmax/oracle.hpp"
#include "wmax/qstate.hpp"
#include "wmax/rng.hpp"
#include "wmax/stationarity.hpp"
#include "wmax/witness.hpp"

namespace wmax {

namespace {

// Workload knobs that differ between quick and full runs. Tolerances never
// change; only sample counts and grid resolutions shrink in quick mode.
struct Workload {
    int c3_q_count;
    int c4_grid;
    int c8_samples;
    int c9_trials;
    int c10_trials;
    int c11_trials;
};

Workload workload_for(VerifyLevel level) {
    if (level == VerifyLevel::kQuick) {
        return {10, 10, 1000, 50, 25, 12};
    }
    return {50, 40, 10000, 200, 100, 50};
}

// Tracks the worst deviation seen and whether everything stayed under
// tolerance. Criteria push every deviation they measure through here.
struct Tracker {
    double worst = 0.0;
    bool ok = true;

    void check(double deviation, double tol) {
        deviation = std::abs(deviation);
        worst = std::max(worst, deviation);
        if (!(deviation <= tol)) ok = false;
    }

    // For boolean sub-conditions that have no natural magnitude.
    void require(bool cond) {
        if (!cond) ok = false;
    }
};

// Per-criterion RNG streams: criterion c, item i gets stream 1000*c + i so
// runs are reproducible and criteria stay independent of each other.
uint64_t stream_of(int criterion, int item) {
    return static_cast<uint64_t>(1000 * criterion + item);
}

PureState random_dense_two_qubit(uint64_t seed, uint64_t stream) {
    CounterRng rng(seed, stream);
    std::vector<std::pair<uint64_t, cplx>> amps;
    double n2 = 0.0;
    std::vector<cplx> raw(4);
    for (int k = 0; k < 4; ++k) {
        // Box-Muller; the offset keeps log() away from zero.
        double u1 = rng.uniform() + 1e-300;
        double u2 = rng.uniform();
        double u3 = rng.uniform() + 1e-300;
        double u4 = rng.uniform();
        double re = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
        double im = std::sqrt(-2.0 * std::log(u3)) * std::cos(2.0 * std::numbers::pi * u4);
        raw[k] = cplx(re, im);
        n2 += std::norm(raw[k]);
    }
    double inv = 1.0 / std::sqrt(n2);
    for (int k = 0; k < 4; ++k) {
        amps.emplace_back(static_cast<uint64_t>(k), raw[k] * inv);
    }
    return PureState(2, amps);
}

PureState random_sparse_state(uint64_t seed, uint64_t stream, int n) {
    CounterRng rng(seed, stream);
    uint64_t dim = uint64_t(1) << n;
    std::size_t m = static_cast<std::size_t>(std::min<uint64_t>(dim, 12));
    std::set<uint64_t> labels;
    while (labels.size() < m) {
        labels.insert(rng.next_u64() & (dim - 1));
    }
    std::vector<std::pair<uint64_t, cplx>> amps;
    double n2 = 0.0;
    for (uint64_t label : labels) {
        double u1 = rng.uniform() + 1e-300;
        double u2 = rng.uniform();
        double u3 = rng.uniform() + 1e-300;
        double u4 = rng.uniform();
        double re = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
        double im = std::sqrt(-2.0 * std::log(u3)) * std::cos(2.0 * std::numbers::pi * u4);
        cplx amp(re, im);
        amps.emplace_back(label, amp);
        n2 += std::norm(amp);
    }
    double inv = 1.0 / std::sqrt(n2);
    for (auto& [label, amp] : amps) amp *= inv;
    return PureState(n, amps);
}

bool same_bits(double x, double y) {
    return std::memcmp(&x, &y, sizeof(double)) == 0;
}

bool same_factor_bits(const ProductState& x, const ProductState& y) {
    if (x.qubit_count() != y.qubit_count()) return false;
    for (int k = 1; k <= x.qubit_count(); ++k) {
        const auto& fx = x.factor(k);
        const auto& fy = y.factor(k);
        if (!same_bits(fx.c0.real(), fy.c0.real())) return false;
        if (!same_bits(fx.c0.imag(), fy.c0.imag())) return false;
        if (!same_bits(fx.c1.real(), fy.c1.real())) return false;
        if (!same_bits(fx.c1.imag(), fy.c1.imag())) return false;
    }
    return true;
}

std::string fmt_count(const char* label, int value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%s=%d", label, value);
    return buf;
}

// 1: equal-coefficient value (1-1/n)^(n-1) at q = 1/sqrt(n), n = 3..10.
CriterionResult criterion_equal_coefficients() {
    Tracker t;
    for (int n = 3; n <= 10; ++n) {
        double q = 1.0 / std::sqrt(static_cast<double>(n));
        double expected = std::pow(1.0 - 1.0 / n, n - 1);
        auto res = pmax_wn_one_param(n, q);
        t.check(res.pmax - expected, 1e-12);
    }
    return {1, "equal-coefficient value", t.ok, t.worst, 1e-12, ""};
}

// 2: q = 0 reduces to the (n-1)-qubit equal-coefficient value.
CriterionResult criterion_q_zero_reduction() {
    Tracker t;
    for (int n = 4; n <= 10; ++n) {
        double expected = std::pow(1.0 - 1.0 / (n - 1), n - 2);
        auto res = pmax_wn_one_param(n, 0.0);
        t.check(res.pmax - expected, 1e-12);
    }
    return {2, "q=0 reduction", t.ok, t.worst, 1e-12, ""};
}

// 3: closed form vs alternating oracle over the one-parameter family,
// plus continuity of the branch value 1/2 at q = 1/sqrt(2).
CriterionResult criterion_one_param_vs_oracle(const Workload& w, uint64_t seed) {
    Tracker t;
    const int nq = w.c3_q_count;
    for (int n : {4, 5, 6}) {
        for (int i = 0; i < nq; ++i) {
            double q = 0.99 * i / (nq - 1);
            auto closed = pmax_wn_one_param(n, q);
            AlternatingOptions opts;
            opts.seed = seed + stream_of(3, 100 * n + i);
            auto oracle = alternating_maximize(w_state(WParams::one_param(n, q)), opts);
            t.check(closed.pmax - oracle.pmax, 1e-6);
        }
        double qc = 1.0 / std::sqrt(2.0);
        t.check(pmax_wn_one_param(n, qc * (1.0 - 1e-10)).pmax - 0.5, 1e-9);
        t.check(pmax_wn_one_param(n, qc * (1.0 + 1e-10)).pmax - 0.5, 1e-9);
    }
    return {3, "one-parameter family vs oracle", t.ok, t.worst, 1e-6,
            fmt_count("q_points", nq)};
}

// 4: two-parameter surface vs oracle on an (a, b) lattice; surface minimum
// 27/64 sits at a = b = 1/2.
CriterionResult criterion_two_param_surface(const Workload& w, uint64_t seed) {
    Tracker t;
    const int steps = w.c4_grid;
    double min_val = 2.0;
    double min_a = -1.0, min_b = -1.0;
    int used = 0;
    for (int i = 0; i < steps; ++i) {
        for (int j = 0; j < steps; ++j) {
            double a = static_cast<double>(i) / steps;
            double b = static_cast<double>(j) / steps;
            if (a * a + b * b > 1.0) continue;
            ++used;
            auto closed = pmax_w4_two_param(a, b);
            double q = std::sqrt(std::max(0.0, (1.0 - a * a - b * b) / 2.0));
            AlternatingOptions opts;
            opts.seed = seed + stream_of(4, steps * i + j);
            auto oracle = alternating_maximize(w_state(WParams({a, b, q, q})), opts);
            t.check(closed.pmax - oracle.pmax, 1e-6);
            if (closed.pmax < min_val) {
                min_val = closed.pmax;
                min_a = a;
                min_b = b;
            }
        }
    }
    t.require(min_a == 0.5 && min_b == 0.5);
    double min_dev = std::abs(min_val - 27.0 / 64.0);
    t.require(min_dev <= 1e-9);
    std::ostringstream detail;
    detail << "lattice_points=" << used << " min_at=(" << min_a << "," << min_b
           << ") min_dev=" << min_dev;
    return {4, "two-parameter surface vs oracle", t.ok, t.worst, 1e-6, detail.str()};
}

// 5: the four special-case identities of the two-parameter surface.
CriterionResult criterion_special_cases() {
    Tracker t;
    const double tol = 1e-9;

    // a = 0: value 4 q^4 / (4 q^2 - b^2).
    for (int i = 1; i <= 7; ++i) {
        double b = 0.1 * i;
        double q2 = (1.0 - b * b) / 2.0;
        double expected = 4.0 * q2 * q2 / (4.0 * q2 - b * b);
        t.check(pmax_w4_two_param(0.0, b).pmax - expected, tol);
    }

    // a = q: value 4 (1-b^2)^3 / (3-4b^2)^2.
    for (int i = 0; i <= 7; ++i) {
        double b = 0.1 * i;
        double a = std::sqrt((1.0 - b * b) / 3.0);
        double b2 = b * b;
        double expected = 4.0 * std::pow(1.0 - b2, 3) / std::pow(3.0 - 4.0 * b2, 2);
        t.check(pmax_w4_two_param(a, b).pmax - expected, tol);
    }

    // Degenerate line 2q = a + b: the generic expression is 0/0 there, but
    // its limit is (27/256)(a+b)^4/(ab). Approach the line from offsets
    // +-1e-4 (and half that) in a and extrapolate the even error away.
    for (double ratio : {1.0, 1.5, 2.0, 2.5, 2.99}) {
        double b = 1.0 / std::sqrt(ratio * ratio + 1.0 + (ratio + 1.0) * (ratio + 1.0) / 2.0);
        double a = ratio * b;
        double expected = 27.0 / 256.0 * std::pow(a + b, 4) / (a * b);
        auto avg = [&](double d) {
            return 0.5 * (pmax_w4_two_param(a + d, b).pmax +
                          pmax_w4_two_param(a - d, b).pmax);
        };
        double d = 1e-4;
        double limit = (4.0 * avg(d / 2.0) - avg(d)) / 3.0;
        t.check(limit - expected, tol);
        // The on-line evaluation routes through the same limit expression.
        t.check(pmax_w4_two_param(a, b).pmax - expected, tol);
    }

    // Endpoint a = 3b on the degenerate line: value exactly 1/2.
    {
        double a = std::sqrt(2.0) / 2.0;
        double b = std::sqrt(2.0) / 6.0;
        t.check(pmax_w4_two_param(a, b).pmax - 0.5, tol);
    }

    return {5, "special-case identities", t.ok, t.worst, 1e-9, ""};
}

// 6: symmetric stationary points satisfy the Bloch-vector stationarity
// equations, and the constructed nearest product states are fixed points
// of the alternating map.
CriterionResult criterion_stationarity() {
    Tracker t;
    double worst_residual = 0.0;
    for (int i = 0; i < 20; ++i) {
        double q = 0.03 + (0.67 - 0.03) * i / 19.0;
        for (int n : {3, 4}) {
            auto sol = solve_symmetric(n, q);
            worst_residual = std::max(worst_residual, sol.residual);
            t.check(sol.residual, 1e-10);
        }
    }
    double worst_fp = 0.0;
    for (int n = 3; n <= 8; ++n) {
        for (int i = 1; i <= 7; ++i) {
            double q = 0.1 * i;
            auto nearest = nearest_wn_one_param(n, q);
            auto check = verify_fixed_point(w_state(WParams::one_param(n, q)), nearest);
            t.require(!check.degenerate);
            worst_fp = std::max(worst_fp, check.residual);
            t.check(check.residual, 1e-12);
        }
    }
    std::ostringstream detail;
    detail << "worst_stationarity=" << worst_residual << " worst_fixed_point=" << worst_fp;
    return {6, "stationarity and fixed points", t.ok, t.worst, 1e-10, detail.str()};
}

// 7: the constructed nearest product state actually achieves the closed-form
// overlap.
CriterionResult criterion_nearest_consistency() {
    Tracker t;
    for (int n = 3; n <= 8; ++n) {
        for (int i = 1; i <= 7; ++i) {
            double q = 0.1 * i;
            auto res = pmax_wn_one_param(n, q);
            auto nearest = nearest_wn_one_param(n, q);
            auto psi = w_state(WParams::one_param(n, q));
            double achieved = std::norm(overlap(psi, nearest));
            t.check(achieved - res.pmax, 1e-12);
        }
    }
    return {7, "nearest-state overlap consistency", t.ok, t.worst, 1e-12, ""};
}

// 8: witness sanity: negative on the target state, non-negative on sampled
// separable states, zero at the nearest product state.
CriterionResult criterion_witness(const Workload& w, uint64_t seed) {
    Tracker t;
    double scan_min = 1.0;
    int item = 0;
    for (int n = 3; n <= 6; ++n) {
        for (double q : {0.2, 0.5, 0.8}) {
            auto witness = build_witness(n, q);
            auto psi = w_state(WParams::one_param(n, q));
            double on_target = evaluate(witness, psi);
            t.require(on_target < 0.0);
            t.check(on_target - (witness.pmax - 1.0), 1e-12);

            auto scan = separable_scan(witness, w.c8_samples,
                                       seed + stream_of(8, item++));
            scan_min = std::min(scan_min, scan);
            t.require(scan >= -1e-10);

            auto closed = pmax_wn_one_param(n, q);
            t.require(closed.nearest.has_value());
            double at_nearest = evaluate(witness, *closed.nearest);
            t.check(at_nearest, 1e-10);
        }
    }
    std::ostringstream detail;
    detail << "scan_min=" << scan_min << " samples=" << w.c8_samples;
    return {8, "witness sign structure", t.ok, t.worst, 1e-10, detail.str()};
}

// 9: three-coefficient closed form vs oracle on random triples, hitting
// both regimes.
CriterionResult criterion_w3_random(const Workload& w, uint64_t seed) {
    Tracker t;
    int highly = 0, slightly = 0;
    for (int i = 0; i < w.c9_trials; ++i) {
        double c1, c2, c3;
        if (i == 0) {
            c1 = 0.8; c2 = 0.36; c3 = 0.48;
        } else if (i == 1) {
            c1 = c2 = c3 = 1.0 / std::sqrt(3.0);
        } else {
            CounterRng rng(seed, stream_of(9, i));
            double u1 = rng.uniform(), u2 = rng.uniform(), u3 = rng.uniform();
            double norm = std::sqrt(u1 * u1 + u2 * u2 + u3 * u3);
            c1 = u1 / norm; c2 = u2 / norm; c3 = u3 / norm;
        }
        WParams params({c1, c2, c3});
        auto closed = pmax_w3(params);
        if (closed.regime == Regime::kSlightlyEntangled) ++slightly;
        else ++highly;
        AlternatingOptions opts;
        opts.seed = seed + stream_of(9, 500 + i);
        auto oracle = alternating_maximize(w_state(params), opts);
        t.check(closed.pmax - oracle.pmax, 1e-6);
    }
    t.require(highly > 0 && slightly > 0);
    std::ostringstream detail;
    detail << "highly=" << highly << " slightly=" << slightly;
    return {9, "three-coefficient form vs oracle", t.ok, t.worst, 1e-6, detail.str()};
}

// 10: two-qubit closed form vs grid search on random dense states.
CriterionResult criterion_two_qubit(const Workload& w, uint64_t seed) {
    Tracker t;
    for (int i = 0; i < w.c10_trials; ++i) {
        auto psi = random_dense_two_qubit(seed, stream_of(10, i));
        auto closed = pmax_two_qubit(psi);
        auto grid = grid_search(psi, 64);
        t.check(closed.pmax - grid.pmax, 1e-5);
    }
    return {10, "two-qubit form vs grid search", t.ok, t.worst, 1e-5,
            fmt_count("trials", w.c10_trials)};
}

// 11: alternating sweeps never decrease the objective, and reruns (serial
// or parallel) are bit-identical.
CriterionResult criterion_monotone_deterministic(const Workload& w, uint64_t seed) {
    Tracker t;
    double worst_drop = 0.0;
    for (int i = 0; i < w.c11_trials; ++i) {
        int n = 2 + (i % 7);
        auto psi = random_sparse_state(seed, stream_of(11, i), n);

        std::vector<double> trace;
        alternating_single_start(psi, seed + i, 0, 1e-12, 10000, &trace);
        for (std::size_t j = 1; j < trace.size(); ++j) {
            double drop = trace[j - 1] - trace[j];
            worst_drop = std::max(worst_drop, drop);
            t.check(std::max(0.0, drop), 1e-15);
        }

        AlternatingOptions opts;
        opts.seed = seed + stream_of(11, 500 + i);
        opts.starts = 8;
        auto r1 = alternating_maximize(psi, opts);
        auto r2 = alternating_maximize(psi, opts);
        auto r3 = alternating_maximize_serial(psi, opts);
        t.require(same_bits(r1.pmax, r2.pmax) && same_bits(r1.pmax, r3.pmax));
        t.require(same_factor_bits(r1.nearest, r2.nearest));
        t.require(same_factor_bits(r1.nearest, r3.nearest));
    }
    std::ostringstream detail;
    detail << "worst_drop=" << worst_drop << " trials=" << w.c11_trials;
    return {11, "sweep monotonicity and determinism", t.ok, t.worst, 1e-15, detail.str()};
}

}  // namespace

std::vector<CriterionResult> run_acceptance(VerifyLevel level, uint64_t seed) {
    Workload w = workload_for(level);
    std::vector<CriterionResult> results;
    results.push_back(criterion_equal_coefficients());
    results.push_back(criterion_q_zero_reduction());
    results.push_back(criterion_one_param_vs_oracle(w, seed));
    results.push_back(criterion_two_param_surface(w, seed));
    results.push_back(criterion_special_cases());
    results.push_back(criterion_stationarity());
    results.push_back(criterion_nearest_consistency());
    results.push_back(criterion_witness(w, seed));
    results.push_back(criterion_w3_random(w, seed));
    results.push_back(criterion_two_qubit(w, seed));
    results.push_back(criterion_monotone_deterministic(w, seed));
    return results;
}

bool report_acceptance(const std::vector<CriterionResult>& results, std::ostream& out) {
    int passed = 0;
    for (const auto& r : results) {
        char line[256];
        std::snprintf(line, sizeof(line), "%s %2d  %-40s worst %.3e  tol %.0e",
                      r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), r.worst,
                      r.tolerance);
        out << line;
        if (!r.detail.empty()) out << "  (" << r.detail << ")";
        out << '\n';
        if (r.passed) ++passed;
    }
    out << passed << " of " << results.size() << " criteria passed\n";
    return passed == static_cast<int>(results.size());
}

}  // namespace wmax
