#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "odelab/lattice_map.hpp"

namespace odelab {

/// Syntax error in a field expression; position() is the 0-based character
/// offset of the offending input.
class FieldParseError : public std::runtime_error {
public:
    FieldParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Parses a polynomial in z as a sum of signed terms:
///   term  := coeff [ '*' zpow ] | zpow
///   zpow  := 'z' [ '^' digits ]
///   coeff := digits [ '/' digits ] | digits '.' digits
/// "z" means z^1; repeated powers accumulate by addition; decimal literals
/// are converted exactly (0.125 -> 1/8). Empty input is rejected.
VectorField parse_field(std::string_view text);

/// Canonical printer, highest power first. print_field output reparses to
/// an identical VectorField.
std::string print_field(const VectorField& field);

}  // namespace odelab
