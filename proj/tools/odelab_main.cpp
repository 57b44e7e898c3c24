// odelab command-line front end: discretize polynomial vector fields into
// their nonlocal lattice maps, evolve and solve them exactly, and apply the
// finite Borel regularization. See README.md for the full interface.

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "odelab/cli.hpp"
#include "odelab/field_parser.hpp"

namespace {

struct RawArgs {
    std::string field;
    std::string z0 = "0";
    std::size_t n_max = 0;
    std::string sequence_name;
    std::string trajectory_path;
    std::string out_path;
    std::string format = "csv";
    int decimals = -1;
    long stencil_lower = 0;
    long stencil_upper = 1;
    std::string sigma = "1";
    std::string problem_path;
};

void add_output_flags(CLI::App* cmd, RawArgs& raw) {
    cmd->add_option("--out", raw.out_path, "Write the artifact to this file instead of stdout");
    cmd->add_option("--format", raw.format, "Artifact format")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--decimals", raw.decimals, "Also emit decimal approximations with this many digits");
}

void add_field_flags(CLI::App* cmd, RawArgs& raw, bool need_z0) {
    cmd->add_option("--field", raw.field, "Polynomial right-hand side, e.g. \"1/2*z^2 - 3*z + 1\"")
        ->required();
    if (need_z0) cmd->add_option("--z0", raw.z0, "Initial value as p or p/q")->required();
    cmd->add_option("--n", raw.n_max, "Largest lattice index / coefficient index")->required();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact integrability-preserving discretization of polynomial ODEs"};
    app.require_subcommand(0, 1);

    RawArgs raw;
    odelab::Mode mode = odelab::Mode::evolve;

    auto* cmd_evolve = app.add_subcommand("evolve", "Iterate the lattice map from z0");
    add_field_flags(cmd_evolve, raw, true);
    add_output_flags(cmd_evolve, raw);

    auto* cmd_solve = app.add_subcommand("solve", "Construct the exact transported solution and check it");
    add_field_flags(cmd_solve, raw, true);
    add_output_flags(cmd_solve, raw);

    auto* cmd_verify = app.add_subcommand("verify", "Check a stored trajectory against the lattice map");
    cmd_verify->add_option("--field", raw.field, "Polynomial right-hand side")->required();
    cmd_verify->add_option("--traj", raw.trajectory_path, "Trajectory file (CSV or JSON)")->required();
    add_output_flags(cmd_verify, raw);

    auto* cmd_borel = app.add_subcommand("borel", "Borel-regularized trajectory and residuals (degree <= 2)");
    add_field_flags(cmd_borel, raw, true);
    add_output_flags(cmd_borel, raw);

    auto* cmd_recurrence = app.add_subcommand("recurrence", "Hat-space coefficients of the map's solution");
    add_field_flags(cmd_recurrence, raw, true);
    add_output_flags(cmd_recurrence, raw);

    auto* cmd_taylor = app.add_subcommand("taylor", "Taylor coefficients of the continuum solution");
    add_field_flags(cmd_taylor, raw, true);
    add_output_flags(cmd_taylor, raw);

    auto* cmd_sequence = app.add_subcommand("sequence", "Emit a named number sequence");
    cmd_sequence->add_option("name", raw.sequence_name, "gamma | beta")
        ->required()
        ->check(CLI::IsMember({"gamma", "beta"}));
    cmd_sequence->add_option("--n", raw.n_max, "Largest index")->required();
    cmd_sequence->add_option("--field", raw.field, "Quadratic field (beta only)");
    cmd_sequence->add_option("--z0", raw.z0, "Initial value (beta only)");
    add_output_flags(cmd_sequence, raw);

    auto* cmd_stencil = app.add_subcommand("stencil", "Finite-difference stencil weights for nodes l..m");
    cmd_stencil->add_option("--l", raw.stencil_lower, "Lower node")->required();
    cmd_stencil->add_option("--m", raw.stencil_upper, "Upper node")->required();
    cmd_stencil->add_option("--sigma", raw.sigma, "Lattice spacing, p or p/q");
    add_output_flags(cmd_stencil, raw);

    auto* cmd_run = app.add_subcommand("run", "Execute a JSON problem file");
    cmd_run->add_option("--problem", raw.problem_path, "Problem file path")->required();

    cmd_evolve->callback([&] { mode = odelab::Mode::evolve; });
    cmd_solve->callback([&] { mode = odelab::Mode::solve; });
    cmd_verify->callback([&] { mode = odelab::Mode::verify; });
    cmd_borel->callback([&] { mode = odelab::Mode::borel; });
    cmd_recurrence->callback([&] { mode = odelab::Mode::recurrence; });
    cmd_taylor->callback([&] { mode = odelab::Mode::taylor; });
    cmd_sequence->callback([&] { mode = odelab::Mode::sequence; });
    cmd_stencil->callback([&] { mode = odelab::Mode::stencil; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return odelab::kExitUsageError;
    }

    if (app.get_subcommands().empty()) {
        std::cerr << app.help();
        return odelab::kExitUsageError;
    }

    try {
        odelab::ProblemSpec spec;
        if (cmd_run->parsed()) {
            spec = odelab::load_problem_file(raw.problem_path);
        } else {
            spec.mode = mode;
            const bool field_required = mode == odelab::Mode::evolve || mode == odelab::Mode::solve ||
                                        mode == odelab::Mode::verify || mode == odelab::Mode::borel ||
                                        mode == odelab::Mode::recurrence || mode == odelab::Mode::taylor;
            if (field_required || !raw.field.empty()) spec.field = odelab::parse_field(raw.field);
            spec.z0 = odelab::Rational::from_string(raw.z0);
            spec.n_max = raw.n_max;
            spec.sequence_name = raw.sequence_name.empty() ? "gamma" : raw.sequence_name;
            spec.trajectory_path = raw.trajectory_path;
            spec.out_path = raw.out_path;
            spec.format = raw.format;
            spec.decimals = raw.decimals;
            spec.stencil_lower = raw.stencil_lower;
            spec.stencil_upper = raw.stencil_upper;
            spec.stencil_sigma = odelab::Rational::from_string(raw.sigma);
        }
        return odelab::run(spec, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return odelab::kExitUsageError;
    }
}
