#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "odelab/lattice_map.hpp"
#include "odelab/rational.hpp"
#include "odelab/umbral.hpp"

namespace odelab {

/// Number sequence c_0..c_K with a short tag ("b", "beta", "gamma", ...).
struct CoefficientSequence {
    std::vector<Rational> coeffs;
    std::string label;

    std::size_t size() const { return coeffs.size(); }
    Rational at(std::size_t k) const { return k < coeffs.size() ? coeffs[k] : Rational(0); }
    const Rational& operator[](std::size_t k) const { return coeffs[k]; }
};

/// Taylor coefficients b_0..b_{k_max} of the solution of z' = sum a_j z^j
/// with z(0) = z0, generated by the exact recurrence
///   b_0 = z0,   (l+1) b_{l+1} = sum_j a_j (b^{x j})_l,
/// where b^{x j} is the j-fold Cauchy convolution and b^{x 0} = (1, 0, ...).
/// The same recurrence is the hat-space form of the lattice map, so these
/// coefficients double as the hat coefficients of its exact solution.
CoefficientSequence taylor_coefficients(const VectorField& field, const Rational& z0, std::size_t k_max);

/// Transported lattice solution z_n = sum_{k=0..n} b_k n!/(n-k)!.
/// Requires coefficients up to index n_max.
LatticeTrajectory lattice_solution(const CoefficientSequence& coeffs, std::size_t n_max);

/// gamma_k = C(2k, k) / 4^k, the Taylor coefficients of (1-x)^(-1/2),
/// by the exact ratio recurrence gamma_{k+1} = gamma_k (2k+1)/(2k+2).
CoefficientSequence gamma_sequence(std::size_t k_max);

enum class QuadraticBranch { tan, tanh, rational };

/// Closed-form solution of z' = a2 z^2 + a1 z + a0 with z(0) = z0 and
/// a2 != 0. With u = 2 a2 z + a1 and G = 4 a2 a0 - a1^2 the flow is
/// u' = (u^2 + G)/2, solved by
///   G > 0:  u = w (u0 cos(wt/2) + w sin(wt/2)) / (w cos(wt/2) - u0 sin(wt/2)),  w = sqrt(G)
///   G < 0:  u = w (u0 - w tanh(wt/2)) / (w - u0 tanh(wt/2)),                    w = sqrt(-G)
///   G = 0:  u = u0 / (1 - u0 t / 2),
/// which is the tan / tanh / rational branch written without an explicit
/// integration offset. c0() reports that offset where the textbook one-sided
/// form exists (NaN otherwise, e.g. the coth-like region |u0| > w at G < 0).
class QuadraticClosedForm {
public:
    QuadraticClosedForm(const Rational& a0, const Rational& a1, const Rational& a2, const Rational& z0);

    const VectorField& field() const { return field_; }
    const Rational& initial_value() const { return z0_; }
    const Rational& discriminant() const { return gamma_; }
    QuadraticBranch branch() const { return branch_; }
    double c0() const { return c0_; }

    /// Floating-point evaluation. Throws std::domain_error near a pole of
    /// the branch; never returns a silent infinity.
    double evaluate(double t) const;

    /// Distance from t = 0 to the nearest pole of the solution in the
    /// complex plane (the radius of convergence of its Taylor series).
    /// Infinity when the solution is entire along the real axis and has no
    /// complex pole (bounded tanh branch has pi/w type poles; those count).
    double pole_distance() const;

private:
    VectorField field_;
    Rational z0_;
    Rational gamma_;  // 4 a2 a0 - a1^2
    QuadraticBranch branch_;
    double omega_ = 0.0;  // sqrt(|G|)
    double u0_ = 0.0;     // 2 a2 z0 + a1
    double c0_ = 0.0;
};

/// Free-function form of QuadraticClosedForm::evaluate.
double quadratic_closed_form(const QuadraticClosedForm& qcf, double t);

/// beta_k for the quadratic closed form, computed exactly through the
/// Taylor recurrence with the rational initial value (not by symbolic
/// differentiation); the two definitions coincide by Taylor's theorem.
CoefficientSequence beta_sequence(const QuadraticClosedForm& qcf, std::size_t k_max);

/// Lattice solution of the pure-cubic map built from
///   z_n = sum_{k<=n} (gamma_k / sqrt(2)) n!/(n-k)! a3^k / c0^(k + 1/2).
/// values holds exact rationals: the true z_n when sqrt(2 c0) is rational,
/// otherwise the root-free rescaling z_n * sqrt(2 c0), with rescaled set.
struct CubicSolution {
    LatticeTrajectory values;
    bool rescaled;
    Rational scale_square;  // 2 c0; values / sqrt(scale_square) = z_n when rescaled

    std::vector<double> approx() const;
};

/// Requires a3 < 0 and c0 > 0.
CubicSolution cubic_lattice_solution(const Rational& a3, const Rational& c0, std::size_t n_max);

}  // namespace odelab
