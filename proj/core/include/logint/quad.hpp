#ifndef LOGINT_QUAD_HPP
#define LOGINT_QUAD_HPP

// Double-exponential quadrature for finite, semi-infinite and bilateral
// integrals of smooth integrands, including integrable endpoint
// singularities such as ln x or x^-1/2 at an end of the interval.
//
// All three entry points share one driver: the integral is mapped onto the
// real t-line (tanh-sinh for (a, b), exp-sinh for (a, inf)) and integrated
// with the trapezoidal rule, halving the step each level. The error estimate
// is the change between the last two levels, floored at a multiple of the
// rounding level of the sum. Endpoints are never sampled.

#include <cstdint>
#include <functional>

namespace logint::quad {

using Integrand = std::function<double(double)>;

struct QuadratureConfig {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_level = 12;              // step halvings, at most 16
    std::int64_t max_evals = 200000; // at most 1e7

    /// Throws std::invalid_argument if the invariants above do not hold or
    /// both tolerances are zero.
    void validate() const;
};

struct QuadratureOutcome {
    double value = 0.0;
    double error_estimate = 0.0;
    std::int64_t evaluations = 0;
    // true only if error_estimate <= max(abs_tol, rel_tol * |value|)
    bool converged = false;
};

/// Integral of f over (a, b). Throws InvalidIntervalError unless a < b are finite.
QuadratureOutcome integrate_finite(const Integrand& f, double a, double b,
                                   const QuadratureConfig& cfg = {});

/// Integral of f over (a, inf).
QuadratureOutcome integrate_semi_infinite(const Integrand& f, double a,
                                          const QuadratureConfig& cfg = {});

/// Integral of f over the real line, split at 0 into two half-line integrals
/// that are refined together. f is never evaluated at 0.
QuadratureOutcome integrate_bilateral(const Integrand& f, const QuadratureConfig& cfg = {});

} // namespace logint::quad

#endif // LOGINT_QUAD_HPP
