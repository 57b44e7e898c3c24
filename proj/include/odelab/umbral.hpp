#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "odelab/rational.hpp"

namespace odelab {

/// Lower-factorial basic polynomial p_k evaluated at the lattice point n:
/// p_k(n) = 0 for n < k, and n!/(n-k)! otherwise.
Rational lower_factorial(std::size_t n, std::size_t k);

/// Truncated coefficient sequence in the lower-factorial basis ("hat"
/// coordinates). Index k holds the coefficient of p_k; trailing zeros are
/// permitted, so the truncation degree is size() - 1.
class HatSeries {
public:
    HatSeries() : coeffs_(1, Rational(0)) {}
    explicit HatSeries(std::vector<Rational> coeffs);

    static HatSeries unit() { return HatSeries({Rational(1)}); }

    std::size_t truncation_degree() const { return coeffs_.size() - 1; }
    std::size_t size() const { return coeffs_.size(); }

    /// Coefficient of p_k; zero beyond the truncation degree.
    Rational at(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
    const Rational& operator[](std::size_t k) const { return coeffs_[k]; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    friend bool operator==(const HatSeries& a, const HatSeries& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const HatSeries& a, const HatSeries& b) { return !(a == b); }

private:
    std::vector<Rational> coeffs_;
};

/// Star product p_n * p_m = p_{n+m} extended bilinearly: a Cauchy
/// convolution of hat coefficients, truncated at the sum of the degrees.
HatSeries star_product(const HatSeries& f, const HatSeries& g);

/// N-fold star product; N = 0 gives the unit series [1].
HatSeries star_power(const HatSeries& f, std::size_t n);

/// Forward-difference action in hat coordinates: (Df)_k = (k+1) f_{k+1}.
/// This is the derivation of the star algebra (Q p_n = n p_{n-1}).
HatSeries hat_derivative(const HatSeries& f);

enum class TrajectoryKind { plain, borel };

/// Values z_0..z_{n_max} on the integer lattice. kind = borel marks
/// trajectories living in the regularized w variables.
class LatticeTrajectory {
public:
    explicit LatticeTrajectory(std::vector<Rational> values, TrajectoryKind kind = TrajectoryKind::plain);

    std::size_t size() const { return values_.size(); }
    std::size_t n_max() const { return values_.size() - 1; }
    TrajectoryKind kind() const { return kind_; }

    const Rational& operator[](std::size_t n) const { return values_[n]; }
    const std::vector<Rational>& values() const { return values_; }

    friend bool operator==(const LatticeTrajectory& a, const LatticeTrajectory& b) {
        return a.kind_ == b.kind_ && a.values_ == b.values_;
    }
    friend bool operator!=(const LatticeTrajectory& a, const LatticeTrajectory& b) { return !(a == b); }

private:
    std::vector<Rational> values_;
    TrajectoryKind kind_;
};

/// Interpolating transform: z_n = sum_{l <= min(n, K)} n!/(n-l)! zhat_l,
/// for n = 0..n_max. Finite because p_l(n) vanishes for l > n.
LatticeTrajectory hat_to_lattice(const HatSeries& f, std::size_t n_max);

/// Single point of the interpolating transform.
Rational hat_to_lattice_point(const HatSeries& f, std::size_t n);

/// Inverse interpolating transform:
/// zhat_n = sum_{l=0..n} (-1)^{n-l} / (l! (n-l)!) z_l.
HatSeries lattice_to_hat(const LatticeTrajectory& z);

/// Finite-difference stencil (1/sigma) sum_{k=l..m} alpha_k T^k with
/// sum alpha_k = 0, sum k alpha_k = 1 and vanishing higher moments up to
/// order p = m - l, so x^q maps to q x^{q-1} exactly for all q <= p.
class DeltaOperator {
public:
    long lower() const { return lower_; }
    long upper() const { return upper_; }
    long order() const { return upper_ - lower_; }
    const Rational& spacing() const { return spacing_; }

    /// Stencil weights alpha_l..alpha_m, densely indexed.
    const std::vector<Rational>& stencil() const { return stencil_; }
    const Rational& alpha(long k) const { return stencil_.at(static_cast<std::size_t>(k - lower_)); }

private:
    friend DeltaOperator make_delta_operator(long l, long m, const Rational& sigma);
    DeltaOperator(long l, long m, Rational sigma, std::vector<Rational> stencil)
        : lower_(l), upper_(m), spacing_(std::move(sigma)), stencil_(std::move(stencil)) {}

    long lower_;
    long upper_;
    Rational spacing_;
    std::vector<Rational> stencil_;
};

/// Solves the moment system sum_k k^j alpha_k = [j == 1] for j = 0..m-l
/// over the integer nodes l..m. Requires l < m and sigma > 0.
DeltaOperator make_delta_operator(long l, long m, const Rational& sigma);

/// (1/sigma) sum_{k=l..m} alpha_k f[n+k]. Every index n+k must lie inside
/// the trajectory; there is no implicit zero padding.
Rational apply_delta(const DeltaOperator& op, const LatticeTrajectory& f, std::size_t n);

/// Convenience: the forward difference (l=0, m=1, sigma=1).
DeltaOperator forward_difference();

std::ostream& operator<<(std::ostream& os, const HatSeries& f);
std::ostream& operator<<(std::ostream& os, const LatticeTrajectory& z);

}  // namespace odelab
