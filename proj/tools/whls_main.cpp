#include <cmath>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "whls/candidate.hpp"
#include "whls/criteria.hpp"
#include "whls/kernel.hpp"
#include "whls/nonexistence.hpp"
#include "whls/pohozaev.hpp"
#include "whls/serialize.hpp"
#include "whls/solver.hpp"
#include "whls/sweep.hpp"

namespace {

using namespace whls;

constexpr double kPi = 3.14159265358979323846;

struct CommonFlags {
    int n = 3;
    double alpha = 2.0;
    double sigma1 = 0.0;
    double sigma2 = 0.0;
    double p = 1.0;
    double q = -1.0; // -1: default to p
    double grid_min = 1e-4;
    double grid_max = 1e4;
    std::size_t grid_points = 256;
    double quad_tol = 1e-8;
    std::string rate = "slow";
    std::string output;
    std::string format = "json";

    Params params() const {
        return Params{n, alpha, sigma1, sigma2, p, q < 0.0 ? p : q};
    }
    RadialGrid grid() const { return RadialGrid::log_spaced(grid_min, grid_max, grid_points); }
    QuadratureConfig quad() const {
        QuadratureConfig cfg;
        cfg.rel_tol = quad_tol;
        return cfg;
    }
    Rate rate_enum() const {
        if (rate == "slow") return Rate::Slow;
        if (rate == "fast") return Rate::Fast;
        throw domain_error("--rate must be slow or fast");
    }
};

void add_param_flags(CLI::App* cmd, CommonFlags& f, bool require_pq = true) {
    cmd->add_option("--n", f.n, "spatial dimension (>= 3)")->required();
    cmd->add_option("--alpha", f.alpha, "kernel order in (1, n)")->required();
    cmd->add_option("--sigma1", f.sigma1, "weight exponent in the u-equation");
    cmd->add_option("--sigma2", f.sigma2, "weight exponent in the v-equation");
    auto* po = cmd->add_option("--p", f.p, "exponent on u");
    if (require_pq) po->required();
    cmd->add_option("--q", f.q, "exponent on v (defaults to p)");
}

void add_grid_flags(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--grid-min", f.grid_min, "smallest radius (default 1e-4)");
    cmd->add_option("--grid-max", f.grid_max, "largest radius (default 1e4)");
    cmd->add_option("--grid-points", f.grid_points, "number of log-spaced nodes (default 256)");
    cmd->add_option("--quad-tol", f.quad_tol, "quadrature relative tolerance (default 1e-8)");
}

void add_output_flags(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--output", f.output, "write the machine-readable report to this path");
    cmd->add_option("--format", f.format, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
}

void emit(const CommonFlags& f, const std::string& text) {
    if (f.output.empty())
        std::cout << text;
    else
        write_text_file(f.output, text);
}

int cmd_classify(const CommonFlags& f) {
    const Params params = f.params();
    const Classification c = classify(params);
    std::cout << "general: " << to_string(c.general_verdict)
              << "  radial: " << to_string(c.radial_verdict) << '\n';
    std::cout << "n - alpha = " << format_double(params.n - params.alpha) << '\n';
    if (c.exponents_valid) {
        std::cout << "M = " << format_double(c.exponents.M)
                  << "  theta1 = " << format_double(c.exponents.theta1)
                  << "  theta2 = " << format_double(c.exponents.theta2)
                  << "  hyperbola_lhs = " << format_double(c.exponents.hyperbola_lhs) << '\n';
    } else {
        std::cout << "exponent formulas not applicable (pq <= 1)\n";
    }
    nlohmann::json j = c;
    emit(f, j.dump(2) + "\n");
    return 0;
}

int cmd_sweep(const CommonFlags& f, const SweepSpec& spec) {
    const std::string csv = run_sweep(spec);
    if (f.output.empty())
        std::cout << csv;
    else {
        write_text_file(f.output, csv);
        std::cout << "wrote " << spec.p_count * spec.q_count << " rows to " << f.output << '\n';
    }
    return 0;
}

int cmd_verify(const CommonFlags& f) {
    const BoundednessReport rep =
        verify_double_bounded(f.params(), f.rate_enum(), f.grid(), f.quad());
    std::cout << "verdict: " << to_string(rep.verdict) << '\n'
              << "c1 in [" << format_double(rep.c1_min) << ", " << format_double(rep.c1_max)
              << "]  c2 in [" << format_double(rep.c2_min) << ", " << format_double(rep.c2_max)
              << "]\n";
    if (f.format == "csv") {
        emit(f, csv_ratios(rep));
    } else {
        nlohmann::json j = rep;
        emit(f, j.dump(2) + "\n");
    }
    return 0;
}

int cmd_pohozaev(const CommonFlags& f, bool bubble) {
    if (bubble) {
        const Params params = Params::scalar(f.n, f.alpha, f.sigma1, f.p);
        // Normalized critical bubble: u = c (1+r^2)^{-1/2} with c^{p-1} = 3/(4 pi)
        // solves the scalar equation at n = 3, alpha = 2, sigma = 0, p = 5.
        const double c = std::pow(3.0 / (4.0 * kPi), 0.25);
        const RadialGrid grid = f.grid();
        const RadialFunction u =
            sample(grid, [c](double r) { return c * std::pow(1.0 + r * r, -0.5); }, 0.0, -1.0);
        const IdentityReport rep = pohozaev_scalar(u, params, f.sigma1);
        std::cout << rep.identity_name << ": lhs = " << format_double(rep.lhs)
                  << "  rhs = " << format_double(rep.rhs)
                  << "  residual = " << format_double(rep.residual) << '\n';
        std::cout << "contradiction factor = "
                  << format_double(contradiction_factor(f.n, f.alpha, f.sigma1, f.p)) << '\n';
        nlohmann::json j = rep;
        emit(f, j.dump(2) + "\n");
        return 0;
    }
    // Generic surface: the integration-by-parts identity on the explicit
    // candidate (holds for any decaying profile), plus the contradiction factor.
    const Params params = f.params();
    auto [u, v] = build_candidate(params, f.rate_enum(), f.grid());
    const IdentityReport rep = ibp_identity(u, params.n, params.sigma2, params.p);
    std::cout << rep.identity_name << ": lhs = " << format_double(rep.lhs)
              << "  rhs = " << format_double(rep.rhs)
              << "  residual = " << format_double(rep.residual) << '\n';
    std::cout << "contradiction factor (u-side) = "
              << format_double(contradiction_factor(params.n, params.alpha, params.sigma2, params.p))
              << '\n';
    nlohmann::json j = rep;
    emit(f, j.dump(2) + "\n");
    return 0;
}

int cmd_iterate(const CommonFlags& f, int jmax) {
    const ExponentTrace trace = iterate_exponents(f.params(), jmax);
    std::cout << "verdict: " << to_string(trace.verdict);
    if (trace.verdict == TraceVerdict::ConvergesNegative)
        std::cout << "  limit = " << format_double(trace.limit);
    std::cout << '\n';
    if (f.format == "json") {
        nlohmann::json j = trace;
        emit(f, j.dump(2) + "\n");
    } else {
        emit(f, csv_trace(trace));
    }
    return 0;
}

int cmd_solve(const CommonFlags& f, double damping, double tol, int max_iter) {
    const SolverInit init =
        f.rate_enum() == Rate::Slow ? SolverInit::CandidateSlow : SolverInit::CandidateFast;
    const SolveResult res =
        picard_solve(f.params(), f.grid(), init, damping, tol, max_iter, f.quad());
    std::cout << "status: " << to_string(res.status) << "  iterations: " << res.iterations
              << "  final residual: "
              << format_double(res.residual_history.empty() ? 0.0 : res.residual_history.back())
              << '\n';
    if (f.format == "csv") {
        emit(f, csv_radial_pair(res.u, res.v));
    } else {
        nlohmann::json j = res;
        emit(f, j.dump(2) + "\n");
    }
    return 0;
}

int cmd_potential(const CommonFlags& f, bool newton_ball, double theta) {
    if (newton_ball) {
        // Potential of the unit-ball indicator at n = 3, alpha = 2:
        // 2 pi (1 - r^2/3) inside, (4 pi / 3) / r outside.
        const RadialGrid source = RadialGrid::log_spaced(1e-4, 1.0, 200);
        const RadialFunction ball = sample(source, [](double) { return 1.0; }, 0.0, kCompactTail);
        std::vector<double> radii(50);
        for (std::size_t i = 0; i < radii.size(); ++i)
            radii[i] = 0.05 * std::pow(20.0 / 0.05, static_cast<double>(i) / 49.0);
        const RadialGrid target(radii);
        const KernelMatrix km = assemble_kernel(source, target, 3, 2.0, 0.0, f.quad());
        const std::vector<double> got = km.apply_values(ball);
        double worst = 0.0;
        for (std::size_t i = 0; i < radii.size(); ++i) {
            const double r = radii[i];
            const double exact = r <= 1.0 ? 2.0 * kPi * (1.0 - r * r / 3.0) : (4.0 * kPi / 3.0) / r;
            worst = std::max(worst, std::abs(got[i] - exact) / exact);
        }
        std::cout << "newton-ball max relative error: " << format_double(worst) << '\n';
        return 0;
    }
    const Params params = f.params();
    const RadialGrid grid = f.grid();
    const double th = theta > 0.0 ? theta : 0.5 * (params.n - params.alpha);
    const RadialFunction w =
        sample(grid, [th](double r) { return std::pow(1.0 + r * r, -th); }, 0.0, -2.0 * th);
    const RadialFunction pot = riesz_potential(w, params.sigma1, params, f.quad());
    std::cout << "P[(1+r^2)^{-" << format_double(th) << "}] computed on " << grid.size()
              << " nodes; tail exponent fit " << format_double(pot.tail_exp) << '\n';
    if (f.format == "json") {
        nlohmann::json j = pot;
        emit(f, j.dump(2) + "\n");
    } else {
        emit(f, csv_radial(pot));
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"weighted Hardy-Littlewood-Sobolev integral system toolkit"};
    app.require_subcommand(1);

    CommonFlags f;
    SweepSpec spec;
    bool bubble = false, newton_ball = false;
    int jmax = 40, max_iter = 50;
    double damping = 0.5, tol = 1e-6, theta = -1.0;

    auto* classify_cmd = app.add_subcommand("classify", "existence / non-existence verdicts");
    add_param_flags(classify_cmd, f);
    add_output_flags(classify_cmd, f);

    auto* sweep_cmd = app.add_subcommand("sweep", "phase-diagram CSV over a (p, q) grid");
    sweep_cmd->add_option("--n", spec.n, "spatial dimension")->required();
    sweep_cmd->add_option("--alpha", spec.alpha, "kernel order")->required();
    sweep_cmd->add_option("--sigma1", spec.sigma1, "weight exponent (u-equation)");
    sweep_cmd->add_option("--sigma2", spec.sigma2, "weight exponent (v-equation)");
    sweep_cmd->add_option("--p-min", spec.p_min, "p range start");
    sweep_cmd->add_option("--p-max", spec.p_max, "p range end");
    sweep_cmd->add_option("--p-count", spec.p_count, "p grid size (>= 2)");
    sweep_cmd->add_option("--q-min", spec.q_min, "q range start");
    sweep_cmd->add_option("--q-max", spec.q_max, "q range end");
    sweep_cmd->add_option("--q-count", spec.q_count, "q grid size (>= 2)");
    sweep_cmd->add_option("--output", f.output, "CSV path (stdout if omitted)");

    auto* verify_cmd = app.add_subcommand("verify", "double-boundedness of the explicit candidates");
    add_param_flags(verify_cmd, f);
    add_grid_flags(verify_cmd, f);
    verify_cmd->add_option("--rate", f.rate, "decay rate: slow or fast")
        ->check(CLI::IsMember({"slow", "fast"}));
    add_output_flags(verify_cmd, f);

    auto* poh_cmd = app.add_subcommand("pohozaev", "virial / energy identity reports");
    add_param_flags(poh_cmd, f);
    add_grid_flags(poh_cmd, f);
    poh_cmd->add_flag("--bubble", bubble, "use the exactly normalized critical bubble");
    poh_cmd->add_option("--rate", f.rate, "candidate rate when not using --bubble")
        ->check(CLI::IsMember({"slow", "fast"}));
    add_output_flags(poh_cmd, f);

    auto* iter_cmd = app.add_subcommand("iterate", "non-existence exponent recurrence trace");
    add_param_flags(iter_cmd, f);
    iter_cmd->add_option("--jmax", jmax, "number of iterations (default 40)");
    add_output_flags(iter_cmd, f);

    auto* solve_cmd = app.add_subcommand("solve", "damped Picard iteration");
    add_param_flags(solve_cmd, f);
    add_grid_flags(solve_cmd, f);
    solve_cmd->add_option("--rate", f.rate, "initial iterate rate: slow or fast")
        ->check(CLI::IsMember({"slow", "fast"}));
    solve_cmd->add_option("--damping", damping, "step damping in (0, 1] (default 0.5)");
    solve_cmd->add_option("--tol", tol, "residual tolerance (default 1e-6)");
    solve_cmd->add_option("--max-iter", max_iter, "iteration cap (default 50)");
    add_output_flags(solve_cmd, f);

    auto* pot_cmd = app.add_subcommand("potential", "weighted Riesz potential evaluation");
    add_param_flags(pot_cmd, f, /*require_pq=*/false);
    add_grid_flags(pot_cmd, f);
    pot_cmd->add_flag("--newton-ball", newton_ball,
                      "self-test against the uniform-ball closed form");
    pot_cmd->add_option("--theta", theta, "profile exponent of (1+r^2)^{-theta}");
    add_output_flags(pot_cmd, f);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (classify_cmd->parsed()) return cmd_classify(f);
        if (sweep_cmd->parsed()) return cmd_sweep(f, spec);
        if (verify_cmd->parsed()) return cmd_verify(f);
        if (poh_cmd->parsed()) return cmd_pohozaev(f, bubble);
        if (iter_cmd->parsed()) return cmd_iterate(f, jmax);
        if (solve_cmd->parsed()) return cmd_solve(f, damping, tol, max_iter);
        if (pot_cmd->parsed()) return cmd_potential(f, newton_ball, theta);
    } catch (const whls::divergence_error& e) {
        std::cerr << "divergence: " << e.what() << '\n';
        return 4;
    } catch (const whls::io_error& e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
