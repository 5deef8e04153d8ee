#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "logint/specfun.hpp"
#include "oracles.hpp"

using namespace logint;
using namespace logint::specfun;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();

// Frozen reference values, each reproduced by an oracle in oracles.hpp below.
constexpr double kLgammaHalf = 0.572364942924700087;     // ln sqrt(pi)
constexpr double kEulerGamma = 0.577215664901532861;
constexpr double kDigammaHalf = -1.96351002602142348;    // -gamma - 2 ln 2
constexpr double kZeta2 = 1.64493406684822644;           // pi^2 / 6
constexpr double kZeta2Half = 4.93480220054467931;       // pi^2 / 2
constexpr double kZeta3 = 1.20205690315959429;

bool rel_close(double a, double b, double rel) {
    return std::abs(a - b) <= rel * std::abs(b);
}

} // namespace

TEST_CASE("oracles reproduce the frozen constants") {
    CHECK(std::log(oracle::gamma_by_quadrature(0.5)) == doctest::Approx(kLgammaHalf).epsilon(1e-12));
    CHECK(oracle::euler_gamma() == doctest::Approx(kEulerGamma).epsilon(1e-14));
    CHECK(oracle::digamma_by_gauss_integral(0.5) == doctest::Approx(kDigammaHalf).epsilon(1e-10));
    CHECK(oracle::zeta_partial_sum(2.0, 1.0).mid() == doctest::Approx(kZeta2).epsilon(1e-14));
    CHECK(oracle::four_odd_reciprocal_squares().mid() == doctest::Approx(kZeta2Half).epsilon(1e-14));
    CHECK(oracle::zeta_partial_sum(3.0, 1.0).mid() == doctest::Approx(kZeta3).epsilon(1e-14));
}

TEST_CASE("lgamma") {
    SUBCASE("factorial points") {
        CHECK(std::abs(specfun::lgamma(1.0)) <= 1e-16);
        CHECK(std::abs(specfun::lgamma(2.0)) <= 1e-16);
        CHECK(rel_close(specfun::lgamma(5.0), std::log(24.0), 1e-14));
    }
    SUBCASE("half") { CHECK(rel_close(specfun::lgamma(0.5), kLgammaHalf, 1e-14)); }
    SUBCASE("relative accuracy on [1e-3, 1e6]") {
        // glibc lgamma as an external cross-check, away from the zeros at 1 and 2
        for (double x = 1e-3; x <= 1e6; x *= 1.37) {
            const double ref = std::lgamma(x);
            if (std::abs(ref) > 1e-2) {
                CHECK_MESSAGE(rel_close(specfun::lgamma(x), ref, 1e-13), "x = " << x);
            } else {
                CHECK_MESSAGE(std::abs(specfun::lgamma(x) - ref) <= 1e-15, "x = " << x);
            }
        }
    }
    SUBCASE("relative accuracy next to the zeros") {
        // ln Gamma(1 + e) = -gamma e + O(e^2); ln Gamma(2 + e) = (1 - gamma) e + O(e^2)
        const double x1 = 1.0 + 1e-9;
        const double x2 = 2.0 + 1e-9;
        CHECK(rel_close(specfun::lgamma(x1), -kEulerGamma * (x1 - 1.0), 1e-8));
        CHECK(rel_close(specfun::lgamma(x2), (1.0 - kEulerGamma) * (x2 - 2.0), 1e-8));
    }
    SUBCASE("domain") {
        CHECK_THROWS_AS(specfun::lgamma(0.0), DomainError);
        CHECK_THROWS_AS(specfun::lgamma(-1.5), DomainError);
        CHECK_THROWS_AS(specfun::lgamma(kNaN), DomainError);
        CHECK_THROWS_AS(specfun::lgamma(kInf), DomainError);
    }
}

TEST_CASE("gamma reflection defect") {
    CHECK(std::abs(gamma_reflection_defect(0.5)) <= 1e-15);
    CHECK(std::abs(gamma_reflection_defect(0.25)) < 1e-12);
    CHECK(std::abs(gamma_reflection_defect(0.9)) < 1e-12);

    std::mt19937_64 rng(20261015);
    std::uniform_real_distribution<double> dist(0.01, 0.99);
    for (int i = 0; i < 200; ++i) {
        const double z = dist(rng);
        CHECK_MESSAGE(std::abs(gamma_reflection_defect(z)) <= 1e-12, "z = " << z);
    }
    CHECK_THROWS_AS(gamma_reflection_defect(0.0), DomainError);
    CHECK_THROWS_AS(gamma_reflection_defect(1.0), DomainError);
}

TEST_CASE("digamma") {
    const double gamma = oracle::euler_gamma();
    CHECK(std::abs(digamma(1.0) + gamma) <= 1e-14);
    CHECK(std::abs(digamma(2.0) - (digamma(1.0) + 1.0)) <= 1e-15);
    CHECK(std::abs(digamma(0.5) - oracle::digamma_by_gauss_integral(0.5)) <= 1e-10);
    CHECK(std::abs(digamma(0.5) - kDigammaHalf) <= 1e-14);
    CHECK(std::abs(digamma(0.5) - (-gamma - 2.0 * std::numbers::ln2)) <= 1e-14);

    SUBCASE("Gauss integral across the range") {
        for (double z : {1e-3, 0.1, 0.7, 3.0, 25.0}) {
            CHECK_MESSAGE(std::abs(digamma(z) - oracle::digamma_by_gauss_integral(z)) <= 1e-9,
                          "z = " << z);
        }
    }
    SUBCASE("large argument") {
        // psi(x) = ln x - 1/2x - 1/12x^2 + ...
        const double x = 1e6;
        CHECK(std::abs(digamma(x) - (std::log(x) - 0.5 / x - 1.0 / (12.0 * x * x))) <= 1e-12);
    }
    CHECK_THROWS_AS(digamma(0.0), DomainError);
    CHECK_THROWS_AS(digamma(-2.0), DomainError);
}

TEST_CASE("hurwitz zeta") {
    const auto z2 = oracle::zeta_partial_sum(2.0, 1.0);
    CHECK(rel_close(hurwitz_zeta(2.0, 1.0), z2.mid(), 1e-12));
    CHECK(rel_close(hurwitz_zeta(2.0, 1.0), kPi * kPi / 6.0, 1e-14));
    CHECK(rel_close(hurwitz_zeta(2.0, 0.5), oracle::four_odd_reciprocal_squares().mid(), 1e-12));
    CHECK(rel_close(hurwitz_zeta(3.0, 1.0), oracle::zeta_partial_sum(3.0, 1.0).mid(), 1e-12));

    SUBCASE("against partial sums over a parameter grid") {
        for (double s : {1.5, 2.0, 4.0, 7.0, 13.0}) {
            for (double a : {1e-3, 0.3, 1.0, 2.5, 17.0, 300.0}) {
                const auto ref = oracle::zeta_partial_sum(s, a, 200'000);
                CHECK_MESSAGE(rel_close(hurwitz_zeta(s, a), ref.mid(), 1e-12 + (ref.hi - ref.lo) / ref.mid()),
                              "s = " << s << " a = " << a);
            }
        }
    }
    CHECK_THROWS_AS(hurwitz_zeta(1.0, 1.0), DomainError);
    CHECK_THROWS_AS(hurwitz_zeta(0.5, 1.0), DomainError);
    CHECK_THROWS_AS(hurwitz_zeta(2.0, 0.0), DomainError);
    CHECK_THROWS_AS(hurwitz_zeta(2.0, -1.0), DomainError);
}

TEST_CASE("polygamma and trigamma") {
    CHECK(rel_close(polygamma(1, 1.0), oracle::zeta_partial_sum(2.0, 1.0).mid(), 1e-11));
    CHECK(rel_close(polygamma(1, 0.5), oracle::four_odd_reciprocal_squares().mid(), 1e-11));
    CHECK(rel_close(polygamma(2, 1.0), -2.0 * oracle::zeta_partial_sum(3.0, 1.0).mid(), 1e-11));

    CHECK(rel_close(trigamma(1.0), kZeta2, 1e-12));
    CHECK(rel_close(trigamma(2.0), trigamma(1.0) - 1.0, 1e-14));
    CHECK(rel_close(trigamma(0.5), kZeta2Half, 1e-12));
    CHECK(trigamma(0.37) == polygamma(1, 0.37));

    SUBCASE("highest supported order") {
        // psi^(12)(x) = -12! zeta(13, x)
        const double fact12 = 479001600.0;
        for (double x : {0.2, 1.5, 40.0}) {
            CHECK(rel_close(polygamma(12, x), -fact12 * oracle::zeta_partial_sum(13.0, x, 1000).mid(), 1e-11));
        }
    }
    SUBCASE("order via PolygammaOrder") {
        CHECK(polygamma(PolygammaOrder(0), 1.0) == digamma(1.0));
        CHECK(polygamma(PolygammaOrder(3), 0.7) == polygamma(3, 0.7));
        CHECK_THROWS_AS(PolygammaOrder(-1), UnsupportedOrderError);
        CHECK_THROWS_AS(PolygammaOrder(13), UnsupportedOrderError);
    }
    CHECK_THROWS_AS(polygamma(0, 1.0), UnsupportedOrderError);
    CHECK_THROWS_AS(polygamma(13, 1.0), UnsupportedOrderError);
    CHECK_THROWS_AS(polygamma(1, 0.0), DomainError);
    CHECK_THROWS_AS(trigamma(-0.5), DomainError);
}

TEST_CASE("recurrences on a 500-point grid") {
    for (int i = 0; i < 500; ++i) {
        const double x = 0.01 + (50.0 - 0.01) * i / 499.0;
        CHECK_MESSAGE(std::abs(digamma(x + 1.0) - digamma(x) - 1.0 / x) <= 1e-11, "x = " << x);
        const double t = trigamma(x);
        CHECK_MESSAGE(std::abs(trigamma(x + 1.0) - t + 1.0 / (x * x)) <= 1e-11 * std::max(1.0, std::abs(t)),
                      "x = " << x);
    }
}

TEST_CASE("polygamma reflection") {
    SUBCASE("m = 1: psi'(1-z) + psi'(z) = pi^2 / sin^2(pi z)") {
        for (int i = 0; i <= 90; ++i) {
            const double z = 0.05 + 0.9 * i / 90.0;
            const double s = std::sin(kPi * z);
            const double rhs = kPi * kPi / (s * s);
            CHECK(std::abs(trigamma(1.0 - z) + trigamma(z) - rhs) <= 1e-10 * rhs);
        }
    }
    SUBCASE("m = 1, 2, 3 through the cot derivatives") {
        for (int m = 1; m <= 3; ++m) {
            const double sign_z = (m % 2 == 1) ? 1.0 : -1.0;
            const double sign_rhs = (m % 2 == 0) ? 1.0 : -1.0;
            for (int i = 0; i <= 40; ++i) {
                const double z = 0.1 + 0.8 * i / 40.0;
                const double lhs = polygamma(m, 1.0 - z) + sign_z * polygamma(m, z);
                const double rhs = sign_rhs * std::pow(kPi, m + 1) * cot_derivative(m, kPi * z);
                CHECK_MESSAGE(std::abs(lhs - rhs) <= 1e-9 * std::max(1.0, std::abs(rhs)),
                              "m = " << m << " z = " << z);
            }
        }
    }
}

TEST_CASE("polygamma matches finite differences of the previous order") {
    for (int m = 1; m <= 2; ++m) {
        for (double x : {0.5, 1.5, 3.0}) {
            const auto lower = [m](double y) { return m == 1 ? digamma(y) : polygamma(m - 1, y); };
            const double fd = oracle::central_difference(lower, x, 1e-5 * x);
            CHECK_MESSAGE(rel_close(polygamma(m, x), fd, 1e-6), "m = " << m << " x = " << x);
        }
    }
}

TEST_CASE("cot derivative polynomials") {
    const auto p0 = cot_derivative_poly(0);
    CHECK(std::vector<std::int64_t>(p0.coeffs().begin(), p0.coeffs().end()) == std::vector<std::int64_t>{0, 1});
    const auto p1 = cot_derivative_poly(1);
    CHECK(std::vector<std::int64_t>(p1.coeffs().begin(), p1.coeffs().end()) == std::vector<std::int64_t>{-1, 0, -1});
    const auto p2 = cot_derivative_poly(2);
    CHECK(std::vector<std::int64_t>(p2.coeffs().begin(), p2.coeffs().end()) == std::vector<std::int64_t>{0, 2, 0, 2});

    for (int m = 0; m <= kMaxOrder; ++m) {
        const auto p = cot_derivative_poly(m);
        CHECK(p.order() == m);
        CHECK(p.degree() == m + 1);
        for (int k = 0; k <= p.degree(); ++k) {
            if ((k % 2) != ((m + 1) % 2)) {
                CHECK(p.coeffs()[static_cast<std::size_t>(k)] == 0);
            }
        }
        // leading coefficient (-1)^m m!
        double fact = 1.0;
        for (int j = 2; j <= m; ++j) {
            fact *= j;
        }
        CHECK(static_cast<double>(p.coeffs().back()) == ((m % 2 == 0) ? fact : -fact));
    }
    CHECK_THROWS_AS(cot_derivative_poly(13), UnsupportedOrderError);
    CHECK_THROWS_AS(cot_derivative_poly(-1), UnsupportedOrderError);
}

TEST_CASE("cot derivative evaluation") {
    CHECK(cot_derivative(0, kPi / 4) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(cot_derivative(1, kPi / 4) == doctest::Approx(-2.0).epsilon(1e-15));
    CHECK(cot_derivative(2, kPi / 4) == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(oracle::nested_difference(oracle::cot, 2, kPi / 4, 1e-4) == doctest::Approx(4.0).epsilon(1e-6));

    for (int m = 1; m <= 2; ++m) {
        const double fd = oracle::nested_difference(oracle::cot, m, kPi / 3, 1e-4);
        CHECK(rel_close(cot_derivative(m, kPi / 3), fd, 1e-5));
    }
    CHECK_THROWS_AS(cot_derivative(0, 0.0), PoleError);
    CHECK_THROWS_AS(cot_derivative(1, kPi), PoleError);
    CHECK_THROWS_AS(cot_derivative(2, 1e-13), PoleError);
    CHECK_NOTHROW(cot_derivative(2, 1e-9));
    CHECK_THROWS_AS(cot_derivative(13, 1.0), UnsupportedOrderError);
}
