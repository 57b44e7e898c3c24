#pragma once

#include <iosfwd>
#include <string>

#include "odelab/lattice_map.hpp"
#include "odelab/rational.hpp"

namespace odelab {

enum class Mode { evolve, solve, verify, borel, recurrence, taylor, sequence, stencil };

/// One fully-specified job for the pipeline. Built either from command-line
/// flags or from a JSON problem file
///   {"field": "z^2", "z0": "1/2", "n_max": 20, "mode": "solve"}
/// (optional keys: "sequence", "trajectory", "out", "format", "decimals",
/// and "l"/"m"/"sigma" for stencil mode).
struct ProblemSpec {
    Mode mode = Mode::evolve;
    VectorField field;
    Rational z0;
    std::size_t n_max = 0;

    std::string sequence_name = "gamma";  // mode == sequence: gamma | beta
    std::string trajectory_path;          // mode == verify: input trajectory
    long stencil_lower = 0;               // mode == stencil
    long stencil_upper = 1;
    Rational stencil_sigma{1};

    std::string out_path;        // empty: write the artifact to stdout
    std::string format = "csv";  // csv | json (trajectory artifacts only)
    int decimals = -1;           // >= 0 adds decimal approximations
};

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitUsageError = 2;

/// Parses "mode" strings of the problem-file schema. Throws
/// std::invalid_argument for unknown modes.
Mode mode_from_string(const std::string& name);

/// Loads a ProblemSpec from a JSON problem file.
ProblemSpec load_problem_file(const std::string& path);

/// Executes the job: writes the artifact to spec.out_path (or `out` when no
/// path is set) and a human-readable summary of residual checks to `err`.
/// Returns kExitSuccess, kExitVerificationFailure (nonzero residual in
/// solve / verify / borel) or kExitUsageError (bad input, unsupported
/// degree). Identical specs produce byte-identical artifacts.
int run(const ProblemSpec& spec, std::ostream& out, std::ostream& err);

}  // namespace odelab
