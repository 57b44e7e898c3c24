#include "odelab/borel.hpp"

#include <stdexcept>
#include <utility>

namespace odelab {

LatticeTrajectory borel_transform(const CoefficientSequence& coeffs, std::size_t n_max) {
    if (coeffs.size() <= n_max)
        throw std::out_of_range("borel_transform: coefficient sequence shorter than n_max");
    std::vector<Rational> fact(n_max + 1);
    fact[0] = Rational(1);
    for (std::size_t i = 1; i <= n_max; ++i) fact[i] = fact[i - 1] * Rational(static_cast<long>(i));

    std::vector<Rational> w(n_max + 1, Rational(0));
    for (std::size_t n = 0; n <= n_max; ++n) {
        Rational sum(0);
        for (std::size_t k = 0; k <= n; ++k)
            if (!coeffs[k].is_zero()) sum += coeffs[k] / fact[n - k];
        w[n] = sum;
    }
    return LatticeTrajectory(std::move(w), TrajectoryKind::borel);
}

Rational borel_map_rhs(const VectorField& field, const LatticeTrajectory& w, std::size_t n) {
    if (field.degree() > 2)
        throw std::invalid_argument("borel_map_rhs: only fields of degree <= 2 are supported");
    if (n >= w.size()) throw std::out_of_range("borel_map_rhs: trajectory does not reach step n");

    Rational rhs = field.coeff(0) / factorial(n) + field.coeff(1) * w[n];
    const Rational a2 = field.coeff(2);
    if (!a2.is_zero()) {
        Rational quad(0);
        for (std::size_t k1 = 0; k1 <= n; ++k1) {
            if (w[k1].is_zero()) continue;
            for (std::size_t k2 = 0; k1 + k2 <= n; ++k2) {
                if (w[k2].is_zero()) continue;
                Rational term = w[k1] * w[k2] / factorial(n - k1 - k2);
                if ((k1 + k2 + n) % 2 == 1) term = -term;
                quad += term;
            }
        }
        rhs += a2 * quad;
    }
    return rhs;
}

std::vector<Residual> verify_borel_solution(const VectorField& field, const LatticeTrajectory& w) {
    if (w.size() < 2) throw std::invalid_argument("verify_borel_solution: need at least two lattice values");
    std::vector<Residual> out;
    out.reserve(w.size() - 1);
    for (std::size_t n = 0; n + 1 < w.size(); ++n) {
        const Rational lhs = Rational(static_cast<long>(n + 1)) * w[n + 1] - w[n];
        out.push_back({n, lhs - borel_map_rhs(field, w, n)});
    }
    return out;
}

}  // namespace odelab
