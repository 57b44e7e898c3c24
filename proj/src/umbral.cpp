#include "odelab/umbral.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace odelab {

Rational lower_factorial(std::size_t n, std::size_t k) {
    if (n < k) return Rational(0);
    return falling_factorial(n, k);
}

HatSeries::HatSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("HatSeries: empty coefficient list");
}

HatSeries star_product(const HatSeries& f, const HatSeries& g) {
    std::vector<Rational> out(f.size() + g.size() - 1, Rational(0));
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i].is_zero()) continue;
        for (std::size_t j = 0; j < g.size(); ++j) out[i + j] += f[i] * g[j];
    }
    return HatSeries(std::move(out));
}

HatSeries star_power(const HatSeries& f, std::size_t n) {
    HatSeries acc = HatSeries::unit();
    for (std::size_t i = 0; i < n; ++i) acc = star_product(acc, f);
    return acc;
}

HatSeries hat_derivative(const HatSeries& f) {
    if (f.size() == 1) return HatSeries({Rational(0)});
    std::vector<Rational> out(f.size() - 1);
    for (std::size_t k = 0; k + 1 < f.size(); ++k) out[k] = Rational(static_cast<long>(k + 1)) * f[k + 1];
    return HatSeries(std::move(out));
}

LatticeTrajectory::LatticeTrajectory(std::vector<Rational> values, TrajectoryKind kind)
    : values_(std::move(values)), kind_(kind) {
    if (values_.empty()) throw std::invalid_argument("LatticeTrajectory: empty value list");
}

Rational hat_to_lattice_point(const HatSeries& f, std::size_t n) {
    Rational sum(0);
    Rational ff(1);  // n!/(n-l)! built up incrementally
    const std::size_t top = std::min(n, f.truncation_degree());
    for (std::size_t l = 0; l <= top; ++l) {
        if (!f[l].is_zero()) sum += f[l] * ff;
        ff *= Rational(static_cast<long>(n - l));
    }
    return sum;
}

LatticeTrajectory hat_to_lattice(const HatSeries& f, std::size_t n_max) {
    std::vector<Rational> values;
    values.reserve(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) values.push_back(hat_to_lattice_point(f, n));
    return LatticeTrajectory(std::move(values));
}

HatSeries lattice_to_hat(const LatticeTrajectory& z) {
    const std::size_t len = z.size();
    std::vector<Rational> fact(len);
    fact[0] = Rational(1);
    for (std::size_t i = 1; i < len; ++i) fact[i] = fact[i - 1] * Rational(static_cast<long>(i));

    std::vector<Rational> hat(len, Rational(0));
    for (std::size_t n = 0; n < len; ++n) {
        Rational sum(0);
        for (std::size_t l = 0; l <= n; ++l) {
            Rational term = z[l] / (fact[l] * fact[n - l]);
            if ((n - l) % 2 == 1) term = -term;
            sum += term;
        }
        hat[n] = sum;
    }
    return HatSeries(std::move(hat));
}

DeltaOperator make_delta_operator(long l, long m, const Rational& sigma) {
    if (l >= m) throw std::invalid_argument("make_delta_operator: requires l < m");
    if (sigma.sign() <= 0) throw std::invalid_argument("make_delta_operator: requires sigma > 0");

    const std::size_t dim = static_cast<std::size_t>(m - l) + 1;

    // Moment system: rows j = 0..p, columns are nodes k = l..m, entry k^j.
    std::vector<std::vector<Rational>> aug(dim, std::vector<Rational>(dim + 1, Rational(0)));
    for (std::size_t col = 0; col < dim; ++col) {
        const Rational node(l + static_cast<long>(col));
        Rational p(1);
        for (std::size_t row = 0; row < dim; ++row) {
            aug[row][col] = p;
            p *= node;
        }
    }
    aug[1][dim] = Rational(1);  // sum k alpha_k = 1, all other moments vanish

    // Exact Gaussian elimination.
    for (std::size_t col = 0; col < dim; ++col) {
        std::size_t pivot = col;
        while (pivot < dim && aug[pivot][col].is_zero()) ++pivot;
        if (pivot == dim) throw std::logic_error("make_delta_operator: singular moment system");
        std::swap(aug[col], aug[pivot]);
        const Rational inv = Rational(1) / aug[col][col];
        for (std::size_t j = col; j <= dim; ++j) aug[col][j] *= inv;
        for (std::size_t row = 0; row < dim; ++row) {
            if (row == col || aug[row][col].is_zero()) continue;
            const Rational factor = aug[row][col];
            for (std::size_t j = col; j <= dim; ++j) aug[row][j] -= factor * aug[col][j];
        }
    }

    std::vector<Rational> stencil(dim);
    for (std::size_t i = 0; i < dim; ++i) stencil[i] = aug[i][dim];
    if (stencil.front().is_zero() || stencil.back().is_zero())
        throw std::logic_error("make_delta_operator: vanishing endpoint weight");

    return DeltaOperator(l, m, sigma, std::move(stencil));
}

Rational apply_delta(const DeltaOperator& op, const LatticeTrajectory& f, std::size_t n) {
    const long lo = static_cast<long>(n) + op.lower();
    const long hi = static_cast<long>(n) + op.upper();
    if (lo < 0 || hi >= static_cast<long>(f.size()))
        throw std::out_of_range("apply_delta: stencil leaves the trajectory range");
    Rational sum(0);
    for (long k = op.lower(); k <= op.upper(); ++k) {
        const Rational& a = op.alpha(k);
        if (!a.is_zero()) sum += a * f[static_cast<std::size_t>(static_cast<long>(n) + k)];
    }
    return sum / op.spacing();
}

DeltaOperator forward_difference() { return make_delta_operator(0, 1, Rational(1)); }

std::ostream& operator<<(std::ostream& os, const HatSeries& f) {
    os << "[";
    for (std::size_t k = 0; k < f.size(); ++k) {
        if (k > 0) os << ", ";
        os << f[k];
    }
    return os << "]";
}

std::ostream& operator<<(std::ostream& os, const LatticeTrajectory& z) {
    os << "[";
    for (std::size_t n = 0; n < z.size(); ++n) {
        if (n > 0) os << ", ";
        os << z[n];
    }
    return os << "]";
}

}  // namespace odelab
