#include "logint/integral.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>

#include "logint/specfun.hpp"

namespace logint {

namespace {

constexpr double kPi = std::numbers::pi;

} // namespace

Exponent::Exponent(double n) : n_(n) {
    if (!std::isfinite(n)) {
        throw DomainError("exponent must be finite");
    }
    if (!(n > 1.0)) {
        throw DomainError("n must exceed 1 (the integral diverges for n <= 1), got " +
                          std::to_string(n));
    }
}

double closed_form_trig(Exponent n) {
    const double nv = n.value();
    const double angle = kPi / nv;
    const double s = std::sin(angle);
    // cot * csc = cos / sin^2
    return -(kPi * kPi) / (nv * nv) * std::cos(angle) / (s * s);
}

double closed_form_trigamma(Exponent n) {
    using specfun::trigamma;
    const double inv2n = 0.5 / n.value();
    const double bracket = trigamma(0.5 - inv2n) + trigamma(0.5 + inv2n) -
                           trigamma(1.0 - inv2n) - trigamma(inv2n);
    return bracket * inv2n * inv2n;
}

double closed_form_sec_csc(Exponent n) {
    const double nv = n.value();
    const double angle = 0.5 * kPi / nv;
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return kPi * kPi / (4.0 * nv * nv) * (1.0 / (c * c) - 1.0 / (s * s));
}

double closed_form_gamma_derivative(Exponent n, double h_rel) {
    if (!(std::isfinite(h_rel) && h_rel > 0.0)) {
        throw DomainError("closed_form_gamma_derivative: step must be positive and finite");
    }
    const double nv = n.value();
    const double h = h_rel * nv;
    if (!(nv - h > 1.0)) {
        throw DomainError("closed_form_gamma_derivative: n - h must exceed 1");
    }
    // Gamma(1 - 1/n) Gamma(1/n)
    const auto product = [](double m) {
        return std::exp(specfun::lgamma(1.0 - 1.0 / m) + specfun::lgamma(1.0 / m));
    };
    return -(product(nv + h) - product(nv - h)) / (2.0 * h);
}

quad::QuadratureOutcome numeric_integral(Exponent n, const quad::QuadratureConfig& cfg) {
    cfg.validate();
    const double nv = n.value();

    // Each half gets half the tolerance and half the evaluation budget so the
    // sum still honours cfg.
    quad::QuadratureConfig half = cfg;
    half.abs_tol = 0.5 * cfg.abs_tol;
    half.rel_tol = 0.5 * cfg.rel_tol;
    half.max_evals = std::max<std::int64_t>(1, cfg.max_evals / 2);

    const quad::Integrand head = [nv](double x) { return std::log(x) / (std::pow(x, nv) + 1.0); };
    const quad::Integrand tail = [nv](double t) {
        return -std::log(t) * std::pow(t, nv - 2.0) / (std::pow(t, nv) + 1.0);
    };
    const auto lo = quad::integrate_finite(head, 0.0, 1.0, half);
    const auto hi = quad::integrate_finite(tail, 0.0, 1.0, half);

    quad::QuadratureOutcome out;
    out.value = lo.value + hi.value;
    out.error_estimate = lo.error_estimate + hi.error_estimate;
    out.evaluations = lo.evaluations + hi.evaluations;
    out.converged = lo.converged && hi.converged &&
                    out.error_estimate <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(out.value));
    return out;
}

EvaluationRow evaluate_all_routes(Exponent n, const quad::QuadratureConfig& cfg) {
    EvaluationRow row{n,
                      closed_form_trig(n),
                      closed_form_trigamma(n),
                      closed_form_gamma_derivative(n),
                      numeric_integral(n, cfg),
                      0.0};
    const std::array<double, 4> values = {row.trig_form, row.trigamma_form,
                                          row.gamma_derivative_form, row.quadrature.value};
    double spread = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        for (std::size_t j = i + 1; j < values.size(); ++j) {
            spread = std::max(spread, std::abs(values[i] - values[j]));
        }
    }
    row.max_pairwise_spread = spread;
    return row;
}

std::vector<LimitSample> limit_probe(std::span<const Exponent> n_list) {
    if (n_list.empty()) {
        throw DomainError("limit_probe: exponent list is empty");
    }
    if (std::adjacent_find(n_list.begin(), n_list.end(), std::greater_equal<>{}) != n_list.end()) {
        throw DomainError("limit_probe: exponents must be strictly ascending");
    }
    std::vector<LimitSample> samples;
    samples.reserve(n_list.size());
    for (const Exponent n : n_list) {
        const double value = closed_form_trig(n);
        const double residual = value + 1.0;
        samples.push_back({n.value(), value, residual, residual * n.value() * n.value()});
    }
    return samples;
}

bool residuals_strictly_decreasing(std::span<const LimitSample> samples) {
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (!(samples[i].residual > 0.0)) {
            return false;
        }
        if (i > 0 && !(samples[i].residual < samples[i - 1].residual)) {
            return false;
        }
    }
    return true;
}

} // namespace logint
