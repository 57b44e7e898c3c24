#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "odelab/rational.hpp"
#include "odelab/umbral.hpp"

namespace odelab {

/// Polynomial right-hand side a_N z^N + ... + a_1 z + a_0, densely indexed
/// from 0. Trailing zero coefficients are trimmed, so a_N != 0 unless N = 0.
class VectorField {
public:
    VectorField() : coeffs_(1, Rational(0)) {}
    explicit VectorField(std::vector<Rational> coeffs);

    std::size_t degree() const { return coeffs_.size() - 1; }
    Rational coeff(std::size_t j) const { return j < coeffs_.size() ? coeffs_[j] : Rational(0); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0].is_zero(); }

    friend bool operator==(const VectorField& a, const VectorField& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const VectorField& a, const VectorField& b) { return !(a == b); }

private:
    std::vector<Rational> coeffs_;
};

/// Left-hand side minus right-hand side of the lattice map at one step.
/// Exactly zero at every index iff the trajectory solves the map.
struct Residual {
    std::size_t index;
    Rational value;
};

bool all_zero(const std::vector<Residual>& residuals);

/// Closed-form map kernel for the degree-N term:
///   0                                    if sum(ks) > n,
///   (-1)^n n! (N-1)^(n-s) / (n-s)!       otherwise, s = sum(ks),
/// with the convention 0^0 = 1 (so N = 1 degenerates to the local linear
/// term). ks must have length N; the (-1)^(k_1+...+k_N) / (k_1!...k_N!)
/// prefactor is carried by the map sum, not by the kernel.
Rational kernel_closed(std::size_t n, const std::vector<std::size_t>& ks, std::size_t N);

/// Independent oracle for the N = 2 kernel: the literal double sum
///   sum_{l1 >= k1, l2 >= k2, l1+l2 <= n}
///     (-1)^(l1+l2) n! / ((l1-k1)! (l2-k2)! (n-l1-l2)!).
/// Must agree with kernel_closed(n, {k1, k2}, 2) everywhere, including the
/// n = k1 + k2 boundary. Requires k1 + k2 <= n.
Rational kernel_bruteforce(std::size_t n, std::size_t k1, std::size_t k2);

/// Right-hand side of the nonlocal lattice map at step n:
///   sum_{j=2..N} a_j sum'_{k in N^j, |k| <= n}
///       (-1)^(|k|+n) / (k_1!...k_j!) z_{k_1}...z_{k_j} n!(j-1)^(n-|k|)/(n-|k|)!
///   + a_1 z_n + a_0.
/// Evaluated through hat coordinates (transform, star powers, transform
/// back), which is algebraically identical to the explicit sum. Requires
/// z defined on 0..n.
Rational map_rhs(const VectorField& field, const LatticeTrajectory& z, std::size_t n);

/// The same quantity by direct simplex enumeration. Verification oracle for
/// map_rhs; O(n^N) terms.
Rational map_rhs_multisum(const VectorField& field, const LatticeTrajectory& z, std::size_t n);

/// Forward evolution z_{n+1} = z_n + map_rhs(field, z, n), exact throughout.
/// Values may grow factorially; that is the correct behavior of the
/// unregularized map.
LatticeTrajectory evolve(const VectorField& field, const Rational& z0, std::size_t n_max);

/// Residuals (z_{n+1} - z_n) - map_rhs(field, z, n) for n = 0..len-2.
/// Requires length >= 2.
std::vector<Residual> verify_solution(const VectorField& field, const LatticeTrajectory& z);

std::ostream& operator<<(std::ostream& os, const VectorField& field);

}  // namespace odelab
