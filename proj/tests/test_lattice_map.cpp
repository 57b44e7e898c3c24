#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "odelab/lattice_map.hpp"
#include "test_support.hpp"

using namespace odelab;
using testsupport::random_field;
using testsupport::random_rational;
using testsupport::random_trajectory;

namespace {

VectorField pure_square() { return VectorField({Rational(0), Rational(0), Rational(1)}); }

}  // namespace

TEST_CASE("VectorField normalizes trailing zeros") {
    const VectorField f({Rational(1), Rational(2), Rational(0), Rational(0)});
    CHECK(f.degree() == 1);
    CHECK(f.coeff(0) == Rational(1));
    CHECK(f.coeff(1) == Rational(2));
    CHECK(f.coeff(5) == Rational(0));

    CHECK(VectorField({Rational(0), Rational(0)}).is_zero());
    CHECK(VectorField().is_zero());
    CHECK(VectorField().degree() == 0);
}

TEST_CASE("closed-form kernel") {
    // n = s boundary: single surviving term (-1)^n n!
    CHECK(kernel_closed(3, {1, 2}, 2) == Rational(-6));
    CHECK(kernel_closed(4, {1, 3}, 2) == Rational(24));
    CHECK(kernel_closed(0, {0, 0}, 2) == Rational(1));

    // interior values, frozen from the brute-force oracle below
    CHECK(kernel_closed(2, {0, 0}, 2) == Rational(1));
    CHECK(kernel_closed(2, {0, 0, 0}, 3) == Rational(4));
    CHECK(kernel_closed(3, {0, 0}, 2) == Rational(-1));

    // past the simplex boundary
    CHECK(kernel_closed(2, {2, 1}, 2) == Rational(0));

    // N = 1 degenerates to the local linear term: only k = n survives
    CHECK(kernel_closed(5, {5}, 1) == -factorial(5));
    CHECK(kernel_closed(5, {3}, 1) == Rational(0));
    CHECK(kernel_closed(0, {0}, 1) == Rational(1));  // 0^0 = 1

    CHECK_THROWS_AS(kernel_closed(2, {}, 0), std::invalid_argument);
    CHECK_THROWS_AS(kernel_closed(2, {0, 0}, 3), std::invalid_argument);
}

TEST_CASE("brute-force kernel agrees with the closed form") {
    // hand-expanded six-term double sum at n=2, k1=k2=0:
    // 2!/2! - 2!/1! - 2!/1! + 2!/0!/2 + 2!/0!/2 + 2!/0! = 1 - 2 - 2 + 1 + 1 + 2
    CHECK(kernel_bruteforce(2, 0, 0) == Rational(1));

    for (std::size_t n = 0; n <= 12; ++n)
        for (std::size_t k1 = 0; k1 <= n; ++k1)
            for (std::size_t k2 = 0; k1 + k2 <= n; ++k2) {
                CAPTURE(n);
                CAPTURE(k1);
                CAPTURE(k2);
                CHECK(kernel_bruteforce(n, k1, k2) == kernel_closed(n, {k1, k2}, 2));
            }

    // n = k1 + k2: only l1 = k1, l2 = k2 survives
    CHECK(kernel_bruteforce(5, 2, 3) == -factorial(5));
    CHECK(kernel_bruteforce(4, 2, 2) == factorial(4));

    CHECK_THROWS_AS(kernel_bruteforce(2, 2, 1), std::invalid_argument);
}

TEST_CASE("map_rhs on small cases") {
    const VectorField sq = pure_square();
    CHECK(map_rhs(sq, LatticeTrajectory({Rational(1)}), 0) == Rational(1));
    CHECK(map_rhs(sq, LatticeTrajectory({Rational(1), Rational(2)}), 1) == Rational(3));

    SUBCASE("linear part is local") {
        std::mt19937 rng(5);
        const VectorField lin({Rational(3, 2), Rational(-2, 7)});
        for (int round = 0; round < 10; ++round) {
            const LatticeTrajectory z = random_trajectory(rng, 8);
            for (std::size_t n = 0; n < z.size(); ++n) {
                CHECK(map_rhs(lin, z, n) == Rational(-2, 7) * z[n] + Rational(3, 2));
                CHECK(map_rhs_multisum(lin, z, n) == Rational(-2, 7) * z[n] + Rational(3, 2));
            }
        }
    }

    CHECK_THROWS_AS(map_rhs(sq, LatticeTrajectory({Rational(1)}), 1), std::out_of_range);
    CHECK_THROWS_AS(map_rhs_multisum(sq, LatticeTrajectory({Rational(1)}), 1), std::out_of_range);
}

namespace {

// Test-local transcription of the quadratic map sum, independent of the
// library's kernel helpers:
//   sum'_{k1,k2} (-1)^(k1+k2+n)/(k1! k2!) z_k1 z_k2 n!/(n-k1-k2)!
Rational quadratic_sum_literal(const LatticeTrajectory& z, std::size_t n) {
    Rational sum(0);
    for (std::size_t k1 = 0; k1 <= n; ++k1)
        for (std::size_t k2 = 0; k1 + k2 <= n; ++k2) {
            Rational term = z[k1] * z[k2] * factorial(n) /
                            (factorial(k1) * factorial(k2) * factorial(n - k1 - k2));
            if ((k1 + k2 + n) % 2 == 1) term = -term;
            sum += term;
        }
    return sum;
}

// Likewise for the cubic map sum with its 2^(n-|k|) weight.
Rational cubic_sum_literal(const LatticeTrajectory& z, std::size_t n) {
    Rational sum(0);
    for (std::size_t k1 = 0; k1 <= n; ++k1)
        for (std::size_t k2 = 0; k1 + k2 <= n; ++k2)
            for (std::size_t k3 = 0; k1 + k2 + k3 <= n; ++k3) {
                const std::size_t s = k1 + k2 + k3;
                Rational term = z[k1] * z[k2] * z[k3] * Rational(2).pow(n - s) * factorial(n) /
                                (factorial(k1) * factorial(k2) * factorial(k3) * factorial(n - s));
                if ((s + n) % 2 == 1) term = -term;
                sum += term;
            }
    return sum;
}

}  // namespace

TEST_CASE("map_rhs matches literal transcriptions of the printed sums") {
    std::mt19937 rng(60221);
    std::uniform_int_distribution<std::size_t> dlen(1, 10);
    const VectorField square({Rational(0), Rational(0), Rational(1)});
    const VectorField cube({Rational(0), Rational(0), Rational(0), Rational(1)});
    for (int round = 0; round < 20; ++round) {
        const LatticeTrajectory z = random_trajectory(rng, dlen(rng));
        for (std::size_t n = 0; n < z.size(); ++n) {
            CAPTURE(round);
            CAPTURE(n);
            CHECK(map_rhs(square, z, n) == quadratic_sum_literal(z, n));
            CHECK(map_rhs(cube, z, n) == cubic_sum_literal(z, n));
        }
    }
}

TEST_CASE("two evaluation paths of map_rhs agree") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<std::size_t> dlen(1, 15);
    for (int round = 0; round < 50; ++round) {
        const VectorField field = random_field(rng, 4);
        const LatticeTrajectory z = random_trajectory(rng, dlen(rng));
        for (std::size_t n = 0; n < z.size(); ++n) {
            CAPTURE(round);
            CAPTURE(n);
            CHECK(map_rhs(field, z, n) == map_rhs_multisum(field, z, n));
        }
    }
}

TEST_CASE("evolve") {
    CHECK(evolve(pure_square(), Rational(1), 2) ==
          LatticeTrajectory({Rational(1), Rational(2), Rational(5)}));

    SUBCASE("n_max = 0 yields just the initial value") {
        const LatticeTrajectory z = evolve(pure_square(), Rational(2, 3), 0);
        CHECK(z.size() == 1);
        CHECK(z[0] == Rational(2, 3));
    }

    SUBCASE("zero field is constant") {
        const Rational c(5, 7);
        const LatticeTrajectory z = evolve(VectorField(), c, 5);
        for (std::size_t n = 0; n < z.size(); ++n) CHECK(z[n] == c);
    }

    SUBCASE("pure drift") {
        const Rational a0(-3, 4);
        const LatticeTrajectory z = evolve(VectorField({a0}), Rational(0), 3);
        for (std::size_t n = 0; n < z.size(); ++n) CHECK(z[n] == Rational(static_cast<long>(n)) * a0);
    }

    SUBCASE("degree 1 is the standard linear difference equation") {
        const Rational a0(1, 3), a1(-2, 5), z0(4);
        const LatticeTrajectory z = evolve(VectorField({a0, a1}), z0, 12);
        Rational expected = z0;
        for (std::size_t n = 0; n < z.size(); ++n) {
            CHECK(z[n] == expected);
            expected = (Rational(1) + a1) * expected + a0;
        }
    }

    SUBCASE("evolve agrees with stepwise map_rhs") {
        std::mt19937 rng(88);
        for (int round = 0; round < 8; ++round) {
            const VectorField field = random_field(rng, 4);
            const Rational z0 = random_rational(rng, 3, 3);
            const LatticeTrajectory z = evolve(field, z0, 10);
            CHECK(z[0] == z0);
            for (std::size_t n = 0; n + 1 < z.size(); ++n) CHECK(z[n + 1] == z[n] + map_rhs(field, z, n));
        }
    }
}

TEST_CASE("verify_solution") {
    const VectorField sq = pure_square();

    SUBCASE("evolve output has zero residuals") {
        const std::vector<Residual> r = verify_solution(sq, evolve(sq, Rational(1, 2), 15));
        CHECK(r.size() == 15);
        CHECK(all_zero(r));
    }

    SUBCASE("non-solutions are flagged") {
        const std::vector<Residual> r = verify_solution(sq, LatticeTrajectory({Rational(1), Rational(3)}));
        REQUIRE(r.size() == 1);
        CHECK(r[0].index == 0);
        CHECK(r[0].value == Rational(1));
        CHECK(!all_zero(r));
    }

    CHECK_THROWS_AS(verify_solution(sq, LatticeTrajectory({Rational(1)})), std::invalid_argument);
}
