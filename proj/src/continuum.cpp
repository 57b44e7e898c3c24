#include "odelab/continuum.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <utility>

namespace odelab {

CoefficientSequence taylor_coefficients(const VectorField& field, const Rational& z0, std::size_t k_max) {
    const std::size_t N = field.degree();
    std::vector<Rational> b;
    b.reserve(k_max + 1);
    b.push_back(z0);

    // power[j][k] = coefficient k of the j-fold Cauchy power of b; entry k
    // only involves b_0..b_k, so each step extends every power by one index.
    std::vector<std::vector<Rational>> power(N + 1);
    for (std::size_t l = 0; l <= k_max; ++l) {
        for (std::size_t j = 0; j <= N; ++j) {
            if (j == 0) {
                power[0].push_back(l == 0 ? Rational(1) : Rational(0));
            } else {
                Rational c(0);
                for (std::size_t i = 0; i <= l; ++i)
                    if (!power[j - 1][i].is_zero()) c += power[j - 1][i] * b[l - i];
                power[j].push_back(c);
            }
        }
        if (l == k_max) break;
        Rational rhs(0);
        for (std::size_t j = 0; j <= N; ++j) {
            const Rational aj = field.coeff(j);
            if (!aj.is_zero() && !power[j][l].is_zero()) rhs += aj * power[j][l];
        }
        b.push_back(rhs / Rational(static_cast<long>(l + 1)));
    }
    return CoefficientSequence{std::move(b), "b"};
}

LatticeTrajectory lattice_solution(const CoefficientSequence& coeffs, std::size_t n_max) {
    if (coeffs.size() <= n_max)
        throw std::out_of_range("lattice_solution: coefficient sequence shorter than n_max");
    return hat_to_lattice(HatSeries(coeffs.coeffs), n_max);
}

CoefficientSequence gamma_sequence(std::size_t k_max) {
    std::vector<Rational> g;
    g.reserve(k_max + 1);
    g.push_back(Rational(1));
    for (std::size_t k = 0; k < k_max; ++k)
        g.push_back(g.back() * Rational(2 * static_cast<long>(k) + 1, 2 * static_cast<long>(k) + 2));
    return CoefficientSequence{std::move(g), "gamma"};
}

QuadraticClosedForm::QuadraticClosedForm(const Rational& a0, const Rational& a1, const Rational& a2,
                                         const Rational& z0)
    : field_(std::vector<Rational>{a0, a1, a2}), z0_(z0) {
    if (a2.is_zero()) throw std::invalid_argument("QuadraticClosedForm: requires a2 != 0");
    gamma_ = Rational(4) * a2 * a0 - a1 * a1;
    u0_ = (Rational(2) * a2 * z0 + a1).to_double();

    const double nan = std::numeric_limits<double>::quiet_NaN();
    if (gamma_.sign() > 0) {
        branch_ = QuadraticBranch::tan;
        omega_ = std::sqrt(gamma_.to_double());
        c0_ = (2.0 / omega_) * std::atan(u0_ / omega_);
    } else if (gamma_.sign() < 0) {
        branch_ = QuadraticBranch::tanh;
        omega_ = std::sqrt(-gamma_.to_double());
        c0_ = std::abs(u0_) < omega_ ? -(2.0 / omega_) * std::atanh(u0_ / omega_) : nan;
    } else {
        branch_ = QuadraticBranch::rational;
        omega_ = 0.0;
        c0_ = u0_ != 0.0 ? -2.0 / u0_ : nan;
    }
}

double QuadraticClosedForm::evaluate(double t) const {
    const double a1 = field_.coeff(1).to_double();
    const double two_a2 = 2.0 * field_.coeff(2).to_double();

    double num = 0.0, den = 0.0;
    switch (branch_) {
        case QuadraticBranch::tan: {
            const double c = std::cos(omega_ * t / 2.0), s = std::sin(omega_ * t / 2.0);
            num = omega_ * (u0_ * c + omega_ * s);
            den = omega_ * c - u0_ * s;
            break;
        }
        case QuadraticBranch::tanh: {
            const double th = std::tanh(omega_ * t / 2.0);
            num = omega_ * (u0_ - omega_ * th);
            den = omega_ - u0_ * th;
            break;
        }
        case QuadraticBranch::rational: {
            num = u0_;
            den = 1.0 - u0_ * t / 2.0;
            break;
        }
    }
    const double scale = std::abs(num) + std::abs(den) + omega_ + std::abs(u0_) + 1.0;
    if (std::abs(den) < 1e-12 * scale)
        throw std::domain_error("quadratic_closed_form: evaluation point too close to a pole");
    return (num / den - a1) / two_a2;
}

double QuadraticClosedForm::pole_distance() const {
    const double inf = std::numeric_limits<double>::infinity();
    switch (branch_) {
        case QuadraticBranch::tan: {
            // den = 0 at t = (2/w)(atan(w/u0) + j pi); nearest of j = 0, +-1
            const double base = u0_ != 0.0 ? std::atan(omega_ / u0_) : std::acos(-1.0) / 2.0;
            double best = inf;
            for (int j = -1; j <= 1; ++j) {
                const double t = (2.0 / omega_) * (base + j * std::acos(-1.0));
                if (t != 0.0) best = std::min(best, std::abs(t));
            }
            return best;
        }
        case QuadraticBranch::tanh: {
            if (u0_ == 0.0) return std::acos(-1.0) / omega_;  // pole of tanh at i pi/2
            const std::complex<double> w(omega_ / u0_, 0.0);
            const std::complex<double> t = (2.0 / omega_) * std::atanh(w);
            return std::abs(t);
        }
        case QuadraticBranch::rational:
            return u0_ != 0.0 ? std::abs(2.0 / u0_) : inf;
    }
    return inf;
}

double quadratic_closed_form(const QuadraticClosedForm& qcf, double t) { return qcf.evaluate(t); }

CoefficientSequence beta_sequence(const QuadraticClosedForm& qcf, std::size_t k_max) {
    CoefficientSequence b = taylor_coefficients(qcf.field(), qcf.initial_value(), k_max);
    b.label = "beta";
    return b;
}

namespace {

// sqrt of a rational if it is exactly the square of one.
bool rational_sqrt(const Rational& value, Rational& root) {
    if (value.sign() < 0) return false;
    const mpz_class& num = value.numerator();
    const mpz_class& den = value.denominator();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return false;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    root = Rational(mpq_class(sn, sd));
    return true;
}

}  // namespace

std::vector<double> CubicSolution::approx() const {
    const double scale = std::sqrt(scale_square.to_double());
    std::vector<double> out;
    out.reserve(values.size());
    for (const Rational& v : values.values()) out.push_back(rescaled ? v.to_double() / scale : v.to_double());
    return out;
}

CubicSolution cubic_lattice_solution(const Rational& a3, const Rational& c0, std::size_t n_max) {
    if (a3.sign() >= 0) throw std::domain_error("cubic_lattice_solution: requires a3 < 0");
    if (c0.sign() <= 0) throw std::domain_error("cubic_lattice_solution: requires c0 > 0");

    // z_n sqrt(2 c0) = sum_{k<=n} gamma_k n!/(n-k)! (a3/c0)^k, always rational.
    const CoefficientSequence gamma = gamma_sequence(n_max);
    const Rational ratio = a3 / c0;
    std::vector<Rational> hat(n_max + 1);
    Rational rk(1);
    for (std::size_t k = 0; k <= n_max; ++k) {
        hat[k] = gamma[k] * rk;
        rk *= ratio;
    }
    LatticeTrajectory scaled = hat_to_lattice(HatSeries(std::move(hat)), n_max);

    const Rational scale_square = Rational(2) * c0;
    Rational root(0);
    if (rational_sqrt(scale_square, root)) {
        std::vector<Rational> exact;
        exact.reserve(scaled.size());
        for (const Rational& v : scaled.values()) exact.push_back(v / root);
        return CubicSolution{LatticeTrajectory(std::move(exact)), false, scale_square};
    }
    return CubicSolution{std::move(scaled), true, scale_square};
}

}  // namespace odelab
