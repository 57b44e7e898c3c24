#pragma once

#include <cstddef>
#include <vector>

#include "odelab/continuum.hpp"
#include "odelab/lattice_map.hpp"
#include "odelab/rational.hpp"
#include "odelab/umbral.hpp"

namespace odelab {

/// Finite Borel-type regularization of a coefficient sequence:
///   w_n = sum_{k=0..n} b_k / (n-k)!,
/// the transported lattice solution with n!/(n-k)! reweighted to 1/(n-k)!.
/// Tames the factorial growth of the plain lattice solution. Requires
/// coefficients up to index n_max; the result is kind = borel.
LatticeTrajectory borel_transform(const CoefficientSequence& coeffs, std::size_t n_max);

/// Right-hand side of the regularized quadratic map at step n:
///   a2 sum'_{k1+k2 <= n} (-1)^(k1+k2+n) w_k1 w_k2 / (n-k1-k2)!
///   + a1 w_n + a0 / n!,
/// the image of the quadratic lattice map under z_n = n! w_n. Only fields
/// of degree <= 2 are supported.
Rational borel_map_rhs(const VectorField& field, const LatticeTrajectory& w, std::size_t n);

/// Residuals (n+1) w_{n+1} - w_n - borel_map_rhs(field, w, n) for
/// n = 0..len-2. Requires degree <= 2 and length >= 2.
std::vector<Residual> verify_borel_solution(const VectorField& field, const LatticeTrajectory& w);

}  // namespace odelab
