#include "odelab/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "odelab/borel.hpp"
#include "odelab/continuum.hpp"
#include "odelab/field_parser.hpp"
#include "odelab/io.hpp"
#include "odelab/umbral.hpp"

namespace odelab {

namespace {

void write_artifact(const ProblemSpec& spec, const std::string& text, std::ostream& out) {
    if (spec.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(spec.out_path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file '" + spec.out_path + "'");
    file << text;
}

std::string render_trajectory(const ProblemSpec& spec, const LatticeTrajectory& traj) {
    if (spec.format == "json") return trajectory_json(traj, spec.decimals).dump() + "\n";
    return trajectory_csv(traj, spec.decimals);
}

void summarize_residuals(const std::vector<Residual>& residuals, std::ostream& err) {
    std::size_t nonzero = 0;
    for (const Residual& r : residuals)
        if (!r.value.is_zero()) ++nonzero;
    if (nonzero == 0) {
        err << "residuals: all zero (n = 0.." << residuals.size() - 1 << ")\n";
    } else {
        err << "residuals: " << nonzero << " nonzero of " << residuals.size() << "\n";
        for (const Residual& r : residuals)
            if (!r.value.is_zero()) err << "  n=" << r.index << " residual=" << r.value << "\n";
    }
}

int run_evolve(const ProblemSpec& spec, std::ostream& out) {
    write_artifact(spec, render_trajectory(spec, evolve(spec.field, spec.z0, spec.n_max)), out);
    return kExitSuccess;
}

int run_solve(const ProblemSpec& spec, std::ostream& out, std::ostream& err) {
    const CoefficientSequence b = taylor_coefficients(spec.field, spec.z0, spec.n_max);
    const LatticeTrajectory traj = lattice_solution(b, spec.n_max);
    const std::vector<Residual> residuals = verify_solution(spec.field, traj);

    if (spec.format == "json") {
        nlohmann::json report{{"field", print_field(spec.field)},
                              {"z0", spec.z0.to_string()},
                              {"n_max", spec.n_max},
                              {"coefficients", sequence_json(b)},
                              {"trajectory", trajectory_json(traj, spec.decimals)},
                              {"residuals", residuals_json(residuals)},
                              {"all_zero", all_zero(residuals)}};
        write_artifact(spec, report.dump() + "\n", out);
    } else {
        write_artifact(spec, trajectory_csv(traj, spec.decimals), out);
    }
    summarize_residuals(residuals, err);
    return all_zero(residuals) ? kExitSuccess : kExitVerificationFailure;
}

int run_verify(const ProblemSpec& spec, std::ostream& out, std::ostream& err) {
    std::ifstream file(spec.trajectory_path);
    if (!file) throw std::runtime_error("cannot open trajectory file '" + spec.trajectory_path + "'");
    const LatticeTrajectory traj = read_trajectory(file);
    const std::vector<Residual> residuals = spec.mode == Mode::borel
                                                ? verify_borel_solution(spec.field, traj)
                                                : verify_solution(spec.field, traj);
    if (spec.format == "json")
        write_artifact(spec, residuals_json(residuals).dump() + "\n", out);
    else
        write_artifact(spec, residuals_csv(residuals), out);
    summarize_residuals(residuals, err);
    return all_zero(residuals) ? kExitSuccess : kExitVerificationFailure;
}

int run_borel(const ProblemSpec& spec, std::ostream& out, std::ostream& err) {
    if (spec.field.degree() > 2)
        throw std::invalid_argument("borel mode supports fields of degree <= 2 only");
    if (!spec.trajectory_path.empty()) return run_verify(spec, out, err);

    const CoefficientSequence b = taylor_coefficients(spec.field, spec.z0, spec.n_max);
    const LatticeTrajectory w = borel_transform(b, spec.n_max);
    const std::vector<Residual> residuals = verify_borel_solution(spec.field, w);

    if (spec.format == "json") {
        nlohmann::json report{{"field", print_field(spec.field)},
                              {"z0", spec.z0.to_string()},
                              {"n_max", spec.n_max},
                              {"trajectory", trajectory_json(w, spec.decimals)},
                              {"residuals", residuals_json(residuals)},
                              {"all_zero", all_zero(residuals)}};
        write_artifact(spec, report.dump() + "\n", out);
    } else {
        write_artifact(spec, trajectory_csv(w, spec.decimals), out);
    }
    summarize_residuals(residuals, err);
    return all_zero(residuals) ? kExitSuccess : kExitVerificationFailure;
}

int run_coefficients(const ProblemSpec& spec, std::ostream& out) {
    CoefficientSequence seq = taylor_coefficients(spec.field, spec.z0, spec.n_max);
    if (spec.mode == Mode::recurrence) seq.label = "z_hat";
    write_artifact(spec, sequence_json(seq).dump() + "\n", out);
    return kExitSuccess;
}

int run_sequence(const ProblemSpec& spec, std::ostream& out) {
    CoefficientSequence seq;
    if (spec.sequence_name == "gamma") {
        seq = gamma_sequence(spec.n_max);
    } else if (spec.sequence_name == "beta") {
        if (spec.field.degree() != 2)
            throw std::invalid_argument("sequence beta requires a quadratic field (degree 2)");
        const QuadraticClosedForm qcf(spec.field.coeff(0), spec.field.coeff(1), spec.field.coeff(2), spec.z0);
        seq = beta_sequence(qcf, spec.n_max);
    } else {
        throw std::invalid_argument("unknown sequence '" + spec.sequence_name + "' (expected gamma or beta)");
    }
    write_artifact(spec, sequence_json(seq).dump() + "\n", out);
    return kExitSuccess;
}

int run_stencil(const ProblemSpec& spec, std::ostream& out) {
    const DeltaOperator op = make_delta_operator(spec.stencil_lower, spec.stencil_upper, spec.stencil_sigma);
    nlohmann::json alphas = nlohmann::json::array();
    for (const Rational& a : op.stencil()) alphas.push_back(a.to_string());
    nlohmann::json j{{"l", op.lower()},
                     {"m", op.upper()},
                     {"order", op.order()},
                     {"sigma", op.spacing().to_string()},
                     {"alpha", std::move(alphas)}};
    write_artifact(spec, j.dump() + "\n", out);
    return kExitSuccess;
}

}  // namespace

Mode mode_from_string(const std::string& name) {
    if (name == "evolve") return Mode::evolve;
    if (name == "solve") return Mode::solve;
    if (name == "verify") return Mode::verify;
    if (name == "borel") return Mode::borel;
    if (name == "recurrence") return Mode::recurrence;
    if (name == "taylor") return Mode::taylor;
    if (name == "sequence") return Mode::sequence;
    if (name == "stencil") return Mode::stencil;
    throw std::invalid_argument("unknown mode '" + name + "'");
}

ProblemSpec load_problem_file(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw std::runtime_error("cannot open problem file '" + path + "'");
    nlohmann::json j = nlohmann::json::parse(file);

    ProblemSpec spec;
    spec.mode = mode_from_string(j.at("mode").get<std::string>());
    if (j.contains("field")) spec.field = parse_field(j.at("field").get<std::string>());
    if (j.contains("z0")) spec.z0 = Rational::from_string(j.at("z0").get<std::string>());
    if (j.contains("n_max")) spec.n_max = j.at("n_max").get<std::size_t>();
    if (j.contains("sequence")) spec.sequence_name = j.at("sequence").get<std::string>();
    if (j.contains("trajectory")) spec.trajectory_path = j.at("trajectory").get<std::string>();
    if (j.contains("out")) spec.out_path = j.at("out").get<std::string>();
    if (j.contains("format")) spec.format = j.at("format").get<std::string>();
    if (j.contains("decimals")) spec.decimals = j.at("decimals").get<int>();
    if (j.contains("l")) spec.stencil_lower = j.at("l").get<long>();
    if (j.contains("m")) spec.stencil_upper = j.at("m").get<long>();
    if (j.contains("sigma")) spec.stencil_sigma = Rational::from_string(j.at("sigma").get<std::string>());
    return spec;
}

int run(const ProblemSpec& spec, std::ostream& out, std::ostream& err) {
    try {
        if (spec.format != "csv" && spec.format != "json")
            throw std::invalid_argument("unknown format '" + spec.format + "' (expected csv or json)");
        switch (spec.mode) {
            case Mode::evolve:
                return run_evolve(spec, out);
            case Mode::solve:
                return run_solve(spec, out, err);
            case Mode::verify:
                return run_verify(spec, out, err);
            case Mode::borel:
                return run_borel(spec, out, err);
            case Mode::recurrence:
            case Mode::taylor:
                return run_coefficients(spec, out);
            case Mode::sequence:
                return run_sequence(spec, out);
            case Mode::stencil:
                return run_stencil(spec, out);
        }
        return kExitUsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsageError;
    }
}

}  // namespace odelab
