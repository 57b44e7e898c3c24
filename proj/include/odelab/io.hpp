#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "odelab/continuum.hpp"
#include "odelab/lattice_map.hpp"
#include "odelab/umbral.hpp"

namespace odelab {

/// Rounded decimal expansion of r with `digits` fractional digits,
/// computed in integer arithmetic (round half away from zero).
std::string decimal_string(const Rational& r, int digits);

/// CSV with header "n,value" and one row per lattice point; a third
/// "decimal" column is added when decimals >= 0.
std::string trajectory_csv(const LatticeTrajectory& traj, int decimals = -1);

nlohmann::json trajectory_json(const LatticeTrajectory& traj, int decimals = -1);

/// Plain JSON array of "p/q" strings.
nlohmann::json sequence_json(const CoefficientSequence& seq);

/// CSV with header "n,residual".
std::string residuals_csv(const std::vector<Residual>& residuals);

nlohmann::json residuals_json(const std::vector<Residual>& residuals);

/// Reads a trajectory previously written by this tool: either the CSV
/// above or JSON carrying a "values" array (or a bare array). Values must
/// be densely indexed from 0. Throws std::invalid_argument on bad input.
LatticeTrajectory read_trajectory(std::istream& in);

}  // namespace odelab
