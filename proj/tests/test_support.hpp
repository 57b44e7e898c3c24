#pragma once

#include <random>
#include <vector>

#include "odelab/lattice_map.hpp"
#include "odelab/rational.hpp"
#include "odelab/umbral.hpp"

namespace odelab::testsupport {

/// Random rational with numerator in [-max_num, max_num] and denominator
/// in [1, max_den].
inline Rational random_rational(std::mt19937& rng, long max_num = 9, long max_den = 9) {
    std::uniform_int_distribution<long> num(-max_num, max_num);
    std::uniform_int_distribution<long> den(1, max_den);
    return Rational(num(rng), den(rng));
}

/// Random rational with |value| <= bound (bound a small positive integer
/// or half-integer numerator over 1): picks q in [1, max_den], p in
/// [-bound*q, bound*q].
inline Rational random_bounded(std::mt19937& rng, long bound_num, long bound_den = 1, long max_den = 8) {
    std::uniform_int_distribution<long> dq(1, max_den);
    const long q = dq(rng);
    const long limit = bound_num * q / bound_den;
    std::uniform_int_distribution<long> dp(-limit, limit);
    return Rational(dp(rng), q);
}

inline HatSeries random_hat_series(std::mt19937& rng, std::size_t degree) {
    std::vector<Rational> c;
    c.reserve(degree + 1);
    for (std::size_t k = 0; k <= degree; ++k) c.push_back(random_rational(rng));
    return HatSeries(std::move(c));
}

inline LatticeTrajectory random_trajectory(std::mt19937& rng, std::size_t length) {
    std::vector<Rational> v;
    v.reserve(length);
    for (std::size_t n = 0; n < length; ++n) v.push_back(random_rational(rng));
    return LatticeTrajectory(std::move(v));
}

inline VectorField random_field(std::mt19937& rng, std::size_t max_degree) {
    std::uniform_int_distribution<std::size_t> dd(0, max_degree);
    const std::size_t degree = dd(rng);
    std::vector<Rational> c;
    c.reserve(degree + 1);
    for (std::size_t j = 0; j <= degree; ++j) c.push_back(random_rational(rng, 4, 4));
    return VectorField(std::move(c));
}

}  // namespace odelab::testsupport
