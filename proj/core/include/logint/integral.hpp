#ifndef LOGINT_INTEGRAL_HPP
#define LOGINT_INTEGRAL_HPP

// I(n) = integral over (0, inf) of ln x / (x^n + 1), n > 1.
//
// Four independent routes to the same number:
//   closed_form_trig              -(pi^2/n^2) cot(pi/n) csc(pi/n)
//   closed_form_trigamma          four trigamma values at 1/2 -+ 1/2n, 1 - 1/2n, 1/2n
//   closed_form_gamma_derivative  -d/dn [Gamma(1 - 1/n) Gamma(1/n)] by central difference
//   numeric_integral              tanh-sinh quadrature of the integral itself
//
// numeric_integral never touches specfun and the closed forms never touch
// quad, so agreement between them is a genuine cross-check.

#include <span>
#include <vector>

#include "logint/errors.hpp"
#include "logint/quad.hpp"

namespace logint {

/// Exponent n of the integrand; construction rejects n <= 1 and non-finite n.
class Exponent {
public:
    explicit Exponent(double n);

    [[nodiscard]] double value() const noexcept { return n_; }

    friend auto operator<=>(Exponent, Exponent) = default;

private:
    double n_;
};

double closed_form_trig(Exponent n);

double closed_form_trigamma(Exponent n);

/// (pi^2 / 4n^2) [sec^2(pi/2n) - csc^2(pi/2n)], the form just before the
/// double-angle collapse.
double closed_form_sec_csc(Exponent n);

inline constexpr double kDefaultDerivativeStep = 6e-6;

/// Central difference with step h = h_rel * n. Throws DomainError when
/// n - h <= 1 or h_rel is not a positive finite number.
double closed_form_gamma_derivative(Exponent n, double h_rel = kDefaultDerivativeStep);

/// Direct quadrature: the integral over (0, 1) plus the (1, inf) tail folded
/// back onto (0, 1) by x -> 1/t.
quad::QuadratureOutcome numeric_integral(Exponent n, const quad::QuadratureConfig& cfg = {});

struct EvaluationRow {
    Exponent n;
    double trig_form;
    double trigamma_form;
    double gamma_derivative_form;
    quad::QuadratureOutcome quadrature;
    double max_pairwise_spread;
};

EvaluationRow evaluate_all_routes(Exponent n, const quad::QuadratureConfig& cfg = {});

struct LimitSample {
    double n;
    double value;           // I(n)
    double residual;        // I(n) + 1
    double scaled_residual; // (I(n) + 1) * n^2, tends to pi^2 / 6
};

/// Closed-form values along a strictly ascending list of exponents.
/// Throws DomainError if the list is empty or not strictly ascending.
std::vector<LimitSample> limit_probe(std::span<const Exponent> n_list);

/// True if every residual is positive and each is strictly smaller than the last.
bool residuals_strictly_decreasing(std::span<const LimitSample> samples);

} // namespace logint

#endif // LOGINT_INTEGRAL_HPP
