#include "odelab/lattice_map.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace odelab {

VectorField::VectorField(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(Rational(0));
    while (coeffs_.size() > 1 && coeffs_.back().is_zero()) coeffs_.pop_back();
}

bool all_zero(const std::vector<Residual>& residuals) {
    for (const auto& r : residuals)
        if (!r.value.is_zero()) return false;
    return true;
}

Rational kernel_closed(std::size_t n, const std::vector<std::size_t>& ks, std::size_t N) {
    if (N == 0) throw std::invalid_argument("kernel_closed: N must be positive");
    if (ks.size() != N) throw std::invalid_argument("kernel_closed: ks must have length N");
    std::size_t s = 0;
    for (std::size_t k : ks) s += k;
    if (s > n) return Rational(0);

    Rational value = factorial(n) / factorial(n - s);
    if (N >= 2) {
        value *= Rational(static_cast<long>(N - 1)).pow(n - s);
    } else if (n != s) {
        return Rational(0);  // N = 1: 0^(n-s) with 0^0 = 1, so only s = n survives
    }
    if (n % 2 == 1) value = -value;
    return value;
}

Rational kernel_bruteforce(std::size_t n, std::size_t k1, std::size_t k2) {
    if (k1 + k2 > n) throw std::invalid_argument("kernel_bruteforce: requires k1 + k2 <= n");
    const Rational n_fact = factorial(n);
    Rational sum(0);
    for (std::size_t l1 = k1; l1 <= n; ++l1) {
        for (std::size_t l2 = k2; l1 + l2 <= n; ++l2) {
            Rational term = n_fact / (factorial(l1 - k1) * factorial(l2 - k2) * factorial(n - l1 - l2));
            if ((l1 + l2) % 2 == 1) term = -term;
            sum += term;
        }
    }
    return sum;
}

Rational map_rhs(const VectorField& field, const LatticeTrajectory& z, std::size_t n) {
    if (n >= z.size()) throw std::out_of_range("map_rhs: trajectory does not reach step n");

    // Hat coordinates of the prefix z_0..z_n. Coefficient k of any star
    // power depends on hat coefficients 0..k only, so the prefix suffices
    // and everything can be truncated at degree n.
    std::vector<Rational> prefix(z.values().begin(), z.values().begin() + static_cast<long>(n) + 1);
    const HatSeries hat = lattice_to_hat(LatticeTrajectory(std::move(prefix)));

    std::vector<Rational> acc(n + 1, Rational(0));
    std::vector<Rational> power(n + 1, Rational(0));  // hat^(*j), truncated at degree n
    power[0] = Rational(1);
    const std::size_t N = field.degree();
    for (std::size_t j = 0; j <= N; ++j) {
        const Rational aj = field.coeff(j);
        if (!aj.is_zero())
            for (std::size_t k = 0; k <= n; ++k)
                if (!power[k].is_zero()) acc[k] += aj * power[k];
        if (j < N) {
            std::vector<Rational> next(n + 1, Rational(0));
            for (std::size_t i = 0; i <= n; ++i) {
                if (power[i].is_zero()) continue;
                for (std::size_t k = 0; i + k <= n; ++k) next[i + k] += power[i] * hat[k];
            }
            power = std::move(next);
        }
    }
    return hat_to_lattice_point(HatSeries(std::move(acc)), n);
}

namespace {

// Recursively enumerates the simplex {k in N^j : sum(k) <= n} and
// accumulates the product z_{k_1}...z_{k_j} / (k_1!...k_j!) per total sum.
void simplex_sum(const LatticeTrajectory& z, std::size_t n, std::size_t depth, std::size_t remaining,
                 std::size_t total, const Rational& partial, std::vector<Rational>& by_total) {
    if (depth == 0) {
        by_total[total] += partial;
        return;
    }
    for (std::size_t k = 0; k <= remaining; ++k) {
        if (z[k].is_zero()) continue;  // every tuple through a zero value contributes zero
        simplex_sum(z, n, depth - 1, remaining - k, total + k, partial * (z[k] / factorial(k)), by_total);
    }
}

}  // namespace

Rational map_rhs_multisum(const VectorField& field, const LatticeTrajectory& z, std::size_t n) {
    if (n >= z.size()) throw std::out_of_range("map_rhs_multisum: trajectory does not reach step n");

    Rational rhs = field.coeff(0) + field.coeff(1) * z[n];
    for (std::size_t j = 2; j <= field.degree(); ++j) {
        const Rational aj = field.coeff(j);
        if (aj.is_zero()) continue;
        std::vector<Rational> by_total(n + 1, Rational(0));
        simplex_sum(z, n, j, n, 0, Rational(1), by_total);
        Rational term(0);
        std::vector<std::size_t> ks(j, 0);
        for (std::size_t s = 0; s <= n; ++s) {
            if (by_total[s].is_zero()) continue;
            ks[0] = s;  // kernel depends on the k's only through their sum
            Rational contrib = by_total[s] * kernel_closed(n, ks, j);
            if (s % 2 == 1) contrib = -contrib;
            term += contrib;
        }
        rhs += aj * term;
    }
    return rhs;
}

LatticeTrajectory evolve(const VectorField& field, const Rational& z0, std::size_t n_max) {
    const std::size_t N = field.degree();
    std::vector<Rational> z;
    z.reserve(n_max + 1);
    z.push_back(z0);

    // Incremental hat coefficients and star powers: entry k of hat^(*j) is
    // final once hat_0..hat_k are known, so each step appends one index.
    std::vector<Rational> fact(n_max + 2);
    fact[0] = Rational(1);
    for (std::size_t i = 1; i < fact.size(); ++i) fact[i] = fact[i - 1] * Rational(static_cast<long>(i));

    std::vector<Rational> hat;
    std::vector<std::vector<Rational>> power(N + 1);

    for (std::size_t n = 0; n <= n_max; ++n) {
        // hat_n from z_0..z_n
        Rational h(0);
        for (std::size_t l = 0; l <= n; ++l) {
            Rational term = z[l] / (fact[l] * fact[n - l]);
            if ((n - l) % 2 == 1) term = -term;
            h += term;
        }
        hat.push_back(h);

        // extend each star power by its new top coefficient
        for (std::size_t j = 0; j <= N; ++j) {
            if (j == 0) {
                power[0].push_back(n == 0 ? Rational(1) : Rational(0));
            } else {
                Rational c(0);
                for (std::size_t i = 0; i <= n; ++i)
                    if (!power[j - 1][i].is_zero()) c += power[j - 1][i] * hat[n - i];
                power[j].push_back(c);
            }
        }

        if (n == n_max) break;

        // rhs at n: transport sum_j a_j hat^(*j) back to the lattice point n
        Rational rhs(0);
        Rational ff(1);
        for (std::size_t k = 0; k <= n; ++k) {
            Rational coeff(0);
            for (std::size_t j = 0; j <= N; ++j) {
                const Rational aj = field.coeff(j);
                if (!aj.is_zero() && !power[j][k].is_zero()) coeff += aj * power[j][k];
            }
            if (!coeff.is_zero()) rhs += coeff * ff;
            ff *= Rational(static_cast<long>(n - k));
        }
        z.push_back(z.back() + rhs);
    }
    return LatticeTrajectory(std::move(z));
}

std::vector<Residual> verify_solution(const VectorField& field, const LatticeTrajectory& z) {
    if (z.size() < 2) throw std::invalid_argument("verify_solution: need at least two lattice values");
    std::vector<Residual> out;
    out.reserve(z.size() - 1);
    for (std::size_t n = 0; n + 1 < z.size(); ++n)
        out.push_back({n, (z[n + 1] - z[n]) - map_rhs(field, z, n)});
    return out;
}

std::ostream& operator<<(std::ostream& os, const VectorField& field) {
    os << "[";
    for (std::size_t j = 0; j < field.coeffs().size(); ++j) {
        if (j > 0) os << ", ";
        os << field.coeffs()[j];
    }
    return os << "]";
}

}  // namespace odelab
