// Command-line front end: single-point overlap computation, sweep CSV
// emission, nearest product state printing, and the verification suite.

#include <CLI11.hpp>

#include <bit>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "wmax/closed_form.hpp"
#include "wmax/format.hpp"
#include "wmax/oracle.hpp"
#include "wmax/qstate.hpp"
#include "wmax/sweep.hpp"
#include "wmax/verify.hpp"

namespace {

using namespace wmax;

struct StateArgs {
    std::vector<double> wn;
    std::vector<double> w3;
    std::vector<double> w4;
    std::string state_file;
};

void add_state_options(CLI::App* cmd, StateArgs& args) {
    auto* wn = cmd->add_option("--wn", args.wn, "one-parameter W family: n q")
                   ->expected(2);
    auto* w3 = cmd->add_option("--w3", args.w3, "three-qubit W coefficients a1 a2 a3 (normalized on input)")
                   ->expected(3);
    auto* w4 = cmd->add_option("--w4", args.w4, "four-qubit (a,b,q,q) family: a b")
                   ->expected(2);
    auto* st = cmd->add_option("--state", args.state_file, "state file (bitstring real [imag] per line)")
                   ->check(CLI::ExistingFile);
    // exactly one input source
    wn->excludes(w3)->excludes(w4)->excludes(st);
    w3->excludes(w4)->excludes(st);
    w4->excludes(st);
    cmd->callback([&args, cmd]() {
        int given = !args.wn.empty() + !args.w3.empty() + !args.w4.empty() +
                    !args.state_file.empty();
        if (given != 1)
            throw CLI::ValidationError(cmd->get_name(),
                                       "exactly one of --wn/--w3/--w4/--state is required");
    });
}

int parse_qubit_count(double raw) {
    int n = static_cast<int>(std::lround(raw));
    if (std::abs(raw - n) > 0.0 || n < 3)
        throw std::invalid_argument("n must be an integer >= 3");
    return n;
}

std::vector<double> normalized(std::vector<double> v) {
    double n2 = 0.0;
    for (double x : v) n2 += x * x;
    if (n2 <= 0.0) throw std::invalid_argument("coefficients must not all vanish");
    double inv = 1.0 / std::sqrt(n2);
    for (double& x : v) x *= inv;
    return v;
}

PureState build_state(const StateArgs& args) {
    if (!args.wn.empty()) {
        int n = parse_qubit_count(args.wn[0]);
        return w_state(WParams::one_param(n, args.wn[1]));
    }
    if (!args.w3.empty()) {
        return w_state(WParams(normalized(args.w3)));
    }
    if (!args.w4.empty()) {
        double a = args.w4[0], b = args.w4[1];
        double rest = 1.0 - a * a - b * b;
        if (rest < -1e-12)
            throw std::invalid_argument("--w4 requires a^2 + b^2 <= 1");
        double q = std::sqrt(std::max(0.0, rest / 2.0));
        return w_state(WParams({a, b, q, q}));
    }
    std::ifstream in(args.state_file);
    if (!in) throw std::runtime_error("cannot open " + args.state_file);
    return parse_state(in);
}

// W-type detection for state files: every label one-hot. Phases are local
// and drop out of the overlap problem, so the moduli serve as coefficients.
std::optional<WParams> as_w_type(const PureState& psi) {
    int n = psi.qubit_count();
    std::vector<double> coeffs(n, 0.0);
    for (const auto& [label, amp] : psi.amplitudes()) {
        if (label == 0 || (label & (label - 1)) != 0) return std::nullopt;
        int k = n - std::countr_zero(label);
        coeffs[static_cast<std::size_t>(k) - 1] = std::abs(amp);
    }
    return WParams(coeffs);
}

std::optional<OverlapResult> closed_form_for(const StateArgs& args, const PureState& psi) {
    if (!args.wn.empty())
        return pmax_wn_one_param(parse_qubit_count(args.wn[0]), args.wn[1]);
    if (!args.w3.empty())
        return pmax_w3(WParams(normalized(args.w3)));
    if (!args.w4.empty())
        return pmax_w4_two_param(args.w4[0], args.w4[1]);
    if (psi.qubit_count() == 2) return pmax_two_qubit(psi);
    if (auto params = as_w_type(psi)) {
        if (psi.qubit_count() == 3) return pmax_w3(*params);
        return pmax_slightly_entangled(*params);
    }
    return std::nullopt;
}

void print_factors(const ProductState& prod) {
    for (int k = 1; k <= prod.qubit_count(); ++k) {
        const auto& f = prod.factor(k);
        std::cout << "factor " << k << "  c0 (" << fmt12(f.c0.real()) << ","
                  << fmt12(f.c0.imag()) << ")  c1 (" << fmt12(f.c1.real()) << ","
                  << fmt12(f.c1.imag()) << ")\n";
    }
}

int run_pmax(const StateArgs& state_args, const std::string& method, double tol,
             bool want_nearest, std::uint64_t seed, int starts) {
    PureState psi = build_state(state_args);

    std::optional<OverlapResult> closed;
    if (method != "oracle") {
        closed = closed_form_for(state_args, psi);
        if (!closed && method == "closed")
            throw std::runtime_error("no closed form applies to this state; use --method oracle");
    }

    std::optional<OracleResult> oracle;
    if (method != "closed") {
        AlternatingOptions opts;
        opts.seed = seed;
        opts.starts = starts;
        oracle = alternating_maximize(psi, opts);
    }

    if (closed) std::cout << "closed " << fmt12(closed->pmax) << '\n';
    if (oracle) std::cout << "oracle " << fmt12(oracle->pmax) << '\n';
    if (closed && closed->regime)
        std::cout << "regime " << to_string(*closed->regime) << '\n';

    bool disagree = false;
    if (closed && oracle) {
        double diff = std::abs(closed->pmax - oracle->pmax);
        std::cout << "abs_diff " << fmt12(diff) << '\n';
        disagree = diff > tol;
    }

    if (want_nearest) {
        if (closed && closed->nearest) {
            print_factors(*closed->nearest);
        } else if (oracle) {
            print_factors(oracle->nearest);
        } else {
            throw std::runtime_error("closed form provides no nearest state here; use --method both");
        }
    }

    return disagree ? 2 : 0;
}

int run_nearest(const StateArgs& state_args, const std::string& method, double phase,
                std::uint64_t seed, int starts) {
    PureState psi = build_state(state_args);

    if (method != "oracle") {
        std::optional<OverlapResult> closed = closed_form_for(state_args, psi);
        if (!state_args.wn.empty() && phase != 0.0) {
            int n = parse_qubit_count(state_args.wn[0]);
            double q = state_args.wn[1];
            if (q * q <= 0.5) closed->nearest = nearest_wn_one_param(n, q, phase);
        }
        if (closed && closed->nearest) {
            std::cout << "pmax " << fmt12(closed->pmax) << '\n';
            std::cout << "method " << closed->method << '\n';
            print_factors(*closed->nearest);
            auto check = verify_fixed_point(psi, *closed->nearest);
            std::cout << "fixed_point_residual " << fmt12(check.residual) << '\n';
            return 0;
        }
        if (method == "closed")
            throw std::runtime_error("no closed-form nearest state here; use --method oracle");
    }

    AlternatingOptions opts;
    opts.seed = seed;
    opts.starts = starts;
    auto oracle = alternating_maximize(psi, opts);
    std::cout << "pmax " << fmt12(oracle.pmax) << '\n';
    std::cout << "method alternating-oracle\n";
    print_factors(oracle.nearest);
    std::cout << "fixed_point_residual " << fmt12(oracle.fixed_point_residual) << '\n';
    return 0;
}

int run_sweep(const SweepSpec& spec, const std::string& out_path) {
    validate(spec);
    if (out_path.empty()) {
        write_sweep_csv(spec, std::cout);
        return 0;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open output file " + out_path);
    write_sweep_csv(spec, out);
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"maximal product-state overlap of multi-qubit pure states"};
    app.require_subcommand(1);

    // pmax
    StateArgs pmax_state;
    std::string pmax_method = "both";
    double pmax_tol = 1e-6;
    bool pmax_nearest = false;
    std::uint64_t pmax_seed = 42;
    int pmax_starts = 32;
    auto* pmax_cmd = app.add_subcommand("pmax", "compute the maximal product overlap");
    add_state_options(pmax_cmd, pmax_state);
    pmax_cmd->add_option("--method", pmax_method, "closed, oracle, or both")
        ->check(CLI::IsMember({"closed", "oracle", "both"}))
        ->default_val("both");
    pmax_cmd->add_option("--tol", pmax_tol, "method disagreement threshold (exit 2 beyond it)")
        ->default_val(1e-6);
    pmax_cmd->add_flag("--nearest", pmax_nearest, "also print the nearest product state factors");
    pmax_cmd->add_option("--seed", pmax_seed, "oracle seed")->default_val(42);
    pmax_cmd->add_option("--starts", pmax_starts, "oracle multistart count")->default_val(32);

    // nearest
    StateArgs near_state;
    std::string near_method = "auto";
    double near_phase = 0.0;
    std::uint64_t near_seed = 42;
    int near_starts = 32;
    auto* near_cmd = app.add_subcommand("nearest", "print the nearest product state");
    add_state_options(near_cmd, near_state);
    near_cmd->add_option("--method", near_method, "closed, oracle, or auto")
        ->check(CLI::IsMember({"closed", "oracle", "auto"}))
        ->default_val("auto");
    near_cmd->add_option("--phase", near_phase,
                         "relative phase of the one-parameter construction (with --wn)")
        ->default_val(0.0);
    near_cmd->add_option("--seed", near_seed, "oracle seed")->default_val(42);
    near_cmd->add_option("--starts", near_starts, "oracle multistart count")->default_val(32);

    // sweep
    SweepSpec spec;
    std::string family = "wn-one-param";
    std::vector<std::string> methods = {"closed", "oracle"};
    std::string out_path;
    auto* sweep_cmd = app.add_subcommand("sweep", "emit a parameter sweep as CSV");
    sweep_cmd->add_option("--family", family, "wn-one-param or w4-two-param")
        ->check(CLI::IsMember({"wn-one-param", "w4-two-param"}))
        ->default_val("wn-one-param");
    sweep_cmd->add_option("--n", spec.n, "qubit count for the wn family")->default_val(4);
    sweep_cmd->add_option("--qmin", spec.q_min)->default_val(0.0);
    sweep_cmd->add_option("--qmax", spec.q_max)->default_val(0.99);
    sweep_cmd->add_option("--qsteps", spec.q_steps)->default_val(100);
    sweep_cmd->add_option("--amin", spec.a_min)->default_val(0.0);
    sweep_cmd->add_option("--amax", spec.a_max)->default_val(0.975);
    sweep_cmd->add_option("--asteps", spec.a_steps)->default_val(40);
    sweep_cmd->add_option("--bmin", spec.b_min)->default_val(0.0);
    sweep_cmd->add_option("--bmax", spec.b_max)->default_val(0.975);
    sweep_cmd->add_option("--bsteps", spec.b_steps)->default_val(40);
    sweep_cmd->add_option("--methods", methods, "subset of {closed, oracle}")
        ->delimiter(',')
        ->check(CLI::IsMember({"closed", "oracle"}));
    sweep_cmd->add_option("--seed", spec.oracle.seed, "oracle seed")->default_val(42);
    sweep_cmd->add_option("--out", out_path, "output file (default standard output)");

    // verify
    std::string level = "quick";
    std::uint64_t verify_seed = 42;
    auto* verify_cmd = app.add_subcommand("verify", "run the acceptance-criteria suite");
    verify_cmd->add_option("--level", level, "quick or full")
        ->check(CLI::IsMember({"quick", "full"}))
        ->default_val("quick");
    verify_cmd->add_option("--seed", verify_seed)->default_val(42);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (pmax_cmd->parsed()) {
            return run_pmax(pmax_state, pmax_method, pmax_tol, pmax_nearest,
                            pmax_seed, pmax_starts);
        }
        if (near_cmd->parsed()) {
            return run_nearest(near_state, near_method, near_phase, near_seed,
                               near_starts);
        }
        if (sweep_cmd->parsed()) {
            spec.family = family == "wn-one-param" ? SweepFamily::kWnOneParam
                                                   : SweepFamily::kW4TwoParam;
            spec.method_closed = false;
            spec.method_oracle = false;
            for (const auto& m : methods) {
                if (m == "closed") spec.method_closed = true;
                if (m == "oracle") spec.method_oracle = true;
            }
            return run_sweep(spec, out_path);
        }
        if (verify_cmd->parsed()) {
            auto results = run_acceptance(
                level == "full" ? VerifyLevel::kFull : VerifyLevel::kQuick, verify_seed);
            bool ok = report_acceptance(results, std::cout);
            return ok ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
