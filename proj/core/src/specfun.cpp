#include "logint/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace logint::specfun {

namespace {

// Even-index Bernoulli numbers B_2 .. B_16 (exact rationals, Abramowitz &
// Stegun table 23.2). kBernoulli[k] holds B_{2k+2}.
constexpr std::array<double, 8> kBernoulli = {
    1.0 / 6.0,         // B2
    -1.0 / 30.0,       // B4
    1.0 / 42.0,        // B6
    -1.0 / 30.0,       // B8
    5.0 / 66.0,        // B10
    -691.0 / 2730.0,   // B12
    7.0 / 6.0,         // B14
    -3617.0 / 510.0,   // B16
};

constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
constexpr double kHalfLog2Pi = 0.91893853320467274178032973640561764;
constexpr double kAsymptoticThreshold = 12.0;
constexpr int kZetaDirectTerms = 16;

bool positive_finite(double x) { return std::isfinite(x) && x > 0.0; }

[[noreturn]] void domain(const char* fn, const std::string& what) {
    throw DomainError(std::string(fn) + ": " + what);
}

void check_order(int m, int lo, const char* fn) {
    if (m < lo || m > kMaxOrder) {
        throw UnsupportedOrderError(std::string(fn) + ": order " + std::to_string(m) +
                                    " outside [" + std::to_string(lo) + ", " +
                                    std::to_string(kMaxOrder) + "]");
    }
}

// Stirling series for ln Gamma(x), x >= 12, with B2..B16.
double lgamma_stirling(double x) {
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    double series = 0.0;
    double power = inv; // x^-(2k-1)
    for (std::size_t k = 0; k < kBernoulli.size(); ++k) {
        const double two_k = 2.0 * static_cast<double>(k + 1);
        series += kBernoulli[k] / (two_k * (two_k - 1.0)) * power;
        power *= inv2;
    }
    return (x - 0.5) * std::log(x) - x + kHalfLog2Pi + series;
}

// zeta(k, 2) = zeta(k) - 1 for k = 2..kLgammaSeriesTerms+1, filled once.
constexpr int kLgammaSeriesTerms = 48;

const std::array<double, kLgammaSeriesTerms>& zeta_minus_one_table() {
    static const auto table = [] {
        std::array<double, kLgammaSeriesTerms> t{};
        for (int i = 0; i < kLgammaSeriesTerms; ++i) {
            t[static_cast<std::size_t>(i)] = hurwitz_zeta(static_cast<double>(i + 2), 2.0);
        }
        return t;
    }();
    return table;
}

// ln Gamma(1 + eps) for |eps| <= 0.5:
//   -gamma*eps + eps - log1p(eps) + sum_{k>=2} (-1)^k (zeta(k) - 1) eps^k / k
double lgamma1p_series(double eps) {
    const auto& zm1 = zeta_minus_one_table();
    double sum = 0.0;
    double power = eps; // eps^(k-1)
    for (int i = 0; i < kLgammaSeriesTerms; ++i) {
        const int k = i + 2;
        power *= eps;
        const double term = zm1[static_cast<std::size_t>(i)] * power / k;
        sum += (k % 2 == 0) ? term : -term;
        if (std::abs(term) <= std::numeric_limits<double>::epsilon() * 1e-3 * std::abs(sum)) {
            break;
        }
    }
    return sum + (eps - std::log1p(eps)) - kEulerGamma * eps;
}

} // namespace

PolygammaOrder::PolygammaOrder(int m) : m_(m) { check_order(m, 0, "PolygammaOrder"); }

CotPolynomial::CotPolynomial(int order) : order_(order), coeffs_{0, 1} {
    check_order(order, 0, "CotPolynomial");
    // d/dx P(cot x) = P'(c) * (-(1 + c^2))
    for (int m = 0; m < order; ++m) {
        std::vector<std::int64_t> deriv(coeffs_.size() - 1);
        for (std::size_t k = 1; k < coeffs_.size(); ++k) {
            deriv[k - 1] = static_cast<std::int64_t>(k) * coeffs_[k];
        }
        std::vector<std::int64_t> next(deriv.size() + 2, 0);
        for (std::size_t k = 0; k < deriv.size(); ++k) {
            next[k] -= deriv[k];
            next[k + 2] -= deriv[k];
        }
        coeffs_ = std::move(next);
    }
    if (degree() != order_ + 1) {
        throw std::logic_error("CotPolynomial: degree invariant violated");
    }
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const bool same_parity = (static_cast<int>(k) % 2) == ((order_ + 1) % 2);
        if (!same_parity && coeffs_[k] != 0) {
            throw std::logic_error("CotPolynomial: parity invariant violated");
        }
    }
}

double CotPolynomial::operator()(double c) const noexcept {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * c + static_cast<double>(*it);
    }
    return acc;
}

double lgamma(double x) {
    if (!positive_finite(x)) {
        domain("lgamma", "argument must be finite and > 0, got " + std::to_string(x));
    }
    // Near the zeros at 1 and 2 the recurrence + Stirling path loses relative
    // accuracy to cancellation; use the Taylor series about 1 instead.
    if (x >= 0.5 && x < 1.5) {
        return lgamma1p_series(x - 1.0);
    }
    if (x >= 1.5 && x < 2.5) {
        const double eps = x - 2.0;
        return lgamma1p_series(eps) + std::log1p(eps);
    }
    double shift = 1.0;
    while (x < kAsymptoticThreshold) {
        shift *= x;
        x += 1.0;
    }
    return lgamma_stirling(x) - std::log(shift);
}

double gamma_reflection_defect(double z) {
    if (!(z > 0.0 && z < 1.0)) {
        domain("gamma_reflection_defect", "argument must lie in (0, 1)");
    }
    const double lhs = lgamma(z) + lgamma(1.0 - z);
    const double rhs = std::log(std::numbers::pi) - std::log(std::sin(std::numbers::pi * z));
    return lhs - rhs;
}

double digamma(double x) {
    if (!positive_finite(x)) {
        domain("digamma", "argument must be finite and > 0, got " + std::to_string(x));
    }
    double shift = 0.0;
    while (x < kAsymptoticThreshold) {
        shift += 1.0 / x;
        x += 1.0;
    }
    const double inv2 = 1.0 / (x * x);
    double series = 0.0;
    double power = inv2;
    // k = 1..7: B_2 .. B_14
    for (std::size_t k = 0; k < 7; ++k) {
        series += kBernoulli[k] / (2.0 * static_cast<double>(k + 1)) * power;
        power *= inv2;
    }
    return std::log(x) - 0.5 / x - series - shift;
}

double hurwitz_zeta(double s, double a) {
    if (!(std::isfinite(s) && s > 1.0)) {
        domain("hurwitz_zeta", "s must be finite and > 1");
    }
    if (!positive_finite(a)) {
        domain("hurwitz_zeta", "a must be finite and > 0");
    }
    // Euler-Maclaurin: direct terms k < N, then the tail from N + a.
    const double n = a + kZetaDirectTerms;
    const double n_pow = std::pow(n, -s);
    const double inv_n = 1.0 / n;
    const double inv_n2 = inv_n * inv_n;

    double tail = n * n_pow / (s - 1.0) + 0.5 * n_pow;
    // term_j = B_2j / (2j)! * s (s+1) ... (s+2j-2) * n^(-s-2j+1), j = 1..6
    double rising = s;                 // s (s+1) ... (s+2j-2)
    double factorial = 2.0;            // (2j)!
    double power = n_pow * inv_n;      // n^(-s-2j+1)
    for (std::size_t j = 0; j < 6; ++j) {
        tail += kBernoulli[j] / factorial * rising * power;
        const double jj = static_cast<double>(j + 1);
        rising *= (s + 2.0 * jj - 1.0) * (s + 2.0 * jj);
        factorial *= (2.0 * jj + 1.0) * (2.0 * jj + 2.0);
        power *= inv_n2;
    }

    double sum = tail;
    for (int k = kZetaDirectTerms - 1; k >= 0; --k) {
        sum += std::pow(static_cast<double>(k) + a, -s);
    }
    return sum;
}

double polygamma(int m, double x) {
    check_order(m, 1, "polygamma");
    if (!positive_finite(x)) {
        domain("polygamma", "argument must be finite and > 0, got " + std::to_string(x));
    }
    double factorial = 1.0;
    for (int k = 2; k <= m; ++k) {
        factorial *= k;
    }
    const double sign = (m % 2 == 1) ? 1.0 : -1.0;
    return sign * factorial * hurwitz_zeta(static_cast<double>(m + 1), x);
}

double polygamma(PolygammaOrder m, double x) {
    if (m.value() == 0) {
        return digamma(x);
    }
    return polygamma(m.value(), x);
}

double trigamma(double x) { return polygamma(1, x); }

CotPolynomial cot_derivative_poly(int m) { return CotPolynomial(m); }

double cot_derivative(int m, double x) {
    check_order(m, 0, "cot_derivative");
    if (!std::isfinite(x)) {
        domain("cot_derivative", "argument must be finite");
    }
    const double s = std::sin(x);
    if (std::abs(s) < 1e-12) {
        throw PoleError("cot_derivative: x is within 1e-12 of a pole (sin x ~ 0)");
    }
    const double c = std::cos(x) / s;
    return CotPolynomial(m)(c);
}

} // namespace logint::specfun
