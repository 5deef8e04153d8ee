#ifndef LOGINT_SPECFUN_HPP
#define LOGINT_SPECFUN_HPP

// Real-argument special functions: log-gamma, digamma, Hurwitz zeta,
// polygamma, and exact derivatives of cot expressed as polynomials in cot.
//
// Every routine is a pure function of its arguments and may be called
// concurrently. Arguments outside the supported domain throw
// logint::DomainError (or UnsupportedOrderError for derivative orders).

#include <cstdint>
#include <span>
#include <vector>

#include "logint/errors.hpp"

namespace logint::specfun {

/// Highest derivative order supported by polygamma and the cot derivatives.
inline constexpr int kMaxOrder = 12;

/// Order m of a polygamma function psi^(m); 0 is digamma, 1 is trigamma.
class PolygammaOrder {
public:
    /// Throws UnsupportedOrderError unless 0 <= m <= kMaxOrder.
    explicit PolygammaOrder(int m);

    [[nodiscard]] int value() const noexcept { return m_; }

    friend bool operator==(PolygammaOrder, PolygammaOrder) = default;

private:
    int m_;
};

/// d^m/dx^m cot(x) written as an integer polynomial in c = cot(x).
///
/// coeffs()[k] is the coefficient of c^k. The polynomial for order m has
/// degree m + 1 and only contains powers with the parity of m + 1.
class CotPolynomial {
public:
    /// Builds the polynomial for order m (0 <= m <= kMaxOrder).
    explicit CotPolynomial(int order);

    [[nodiscard]] int order() const noexcept { return order_; }
    [[nodiscard]] int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] std::span<const std::int64_t> coeffs() const noexcept { return coeffs_; }

    /// Horner evaluation at c.
    [[nodiscard]] double operator()(double c) const noexcept;

    friend bool operator==(const CotPolynomial&, const CotPolynomial&) = default;

private:
    int order_;
    std::vector<std::int64_t> coeffs_;
};

/// ln Gamma(x) for finite x > 0.
double lgamma(double x);

/// lgamma(z) + lgamma(1 - z) - (ln pi - ln sin(pi z)) for 0 < z < 1.
/// Zero up to rounding when the reflection formula holds.
double gamma_reflection_defect(double z);

/// psi(x) = d/dx ln Gamma(x) for finite x > 0.
double digamma(double x);

/// zeta(s, a) = sum_{k>=0} (k + a)^-s for s > 1, a > 0.
double hurwitz_zeta(double s, double a);

/// psi^(m)(x) = (-1)^(m+1) m! zeta(m + 1, x) for 1 <= m <= kMaxOrder, x > 0.
double polygamma(int m, double x);
double polygamma(PolygammaOrder m, double x);

/// psi'(x) for x > 0.
double trigamma(double x);

/// Exact polynomial in cot for d^m/dx^m cot(x).
CotPolynomial cot_derivative_poly(int m);

/// d^m/dx^m cot(x). Throws PoleError when |sin x| < 1e-12.
double cot_derivative(int m, double x);

} // namespace logint::specfun

#endif // LOGINT_SPECFUN_HPP
