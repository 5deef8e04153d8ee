#include "logint/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "logint/specfun.hpp"

namespace logint {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kSeriesRadius = 1e-4;

// Running max over the probe points of one report.
class Tracker {
public:
    Tracker(Subject subject, double tol) {
        report_.subject = subject;
        report_.tolerance = tol;
    }

    void record(ProbePoint point, double deviation) {
        if (report_.worst_point.empty() || deviation > report_.max_abs_deviation) {
            report_.max_abs_deviation = deviation;
            report_.worst_point = point;
        }
        report_.grid.push_back(std::move(point));
    }

    void record_unconverged(ProbePoint point) {
        report_.quadrature_converged = false;
        record(std::move(point), kInf);
    }

    VerificationReport finish() {
        if (report_.grid.empty()) {
            throw DomainError(std::string(to_string(report_.subject)) + ": probe grid is empty");
        }
        report_.pass = report_.max_abs_deviation <= report_.tolerance;
        return std::move(report_);
    }

private:
    VerificationReport report_;
};

// psi^(m)(1 - z) + (-1)^(m+1) psi^(m)(z)
double polygamma_reflection_lhs(int m, double z) {
    const double sign = (m % 2 == 1) ? 1.0 : -1.0;
    return specfun::polygamma(m, 1.0 - z) + sign * specfun::polygamma(m, z);
}

std::vector<double> linspace(double lo, double hi, int count) {
    std::vector<double> v;
    v.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        v.push_back(lo + (hi - lo) * i / (count - 1));
    }
    return v;
}

} // namespace

std::string_view to_string(Subject s) {
    switch (s) {
    case Subject::Lemma1: return "lemma1";
    case Subject::Lemma2: return "lemma2";
    case Subject::Lemma3: return "lemma3";
    case Subject::Theorem1: return "theorem";
    case Subject::SecCscForm: return "sec_csc_form";
    case Subject::Limit: return "limit";
    }
    return "unknown";
}

std::vector<double> default_lemma1_grid() { return {0.2, 0.35, 0.5, 0.65, 0.8}; }

std::vector<double> default_lemma2_grid() { return linspace(0.14, 0.86, 9); }

std::vector<double> default_lemma3_grid() {
    // Cell midpoints on (-3, 3); the closest approach to a multiple of pi/2 is
    // 0.03, well clear of the poles.
    std::vector<double> v;
    for (int k = 0; k < 100; ++k) {
        v.push_back(-3.0 + 6.0 * (k + 0.5) / 100.0);
    }
    return v;
}

std::vector<Exponent> default_theorem_grid() {
    return {Exponent(1.5), Exponent(2.0),  Exponent(std::numbers::e), Exponent(3.0),
            Exponent(4.0), Exponent(10.0), Exponent(100.0)};
}

quad::Integrand lemma1_integrand(int m, double z) {
    if (m < 1 || m > 3) {
        throw UnsupportedOrderError("lemma1_integrand: order must lie in [1, 3]");
    }
    if (!(z > 0.0 && z < 1.0)) {
        throw DomainError("lemma1_integrand: z must lie in (0, 1); the integral diverges otherwise");
    }
    return [m, z](double t) -> double {
        if (std::abs(t) < kSeriesRadius) {
            // t / (1 - e^{-t}) = 1 + t/2 + t^2/12 - t^4/720 + ...
            const double t2 = t * t;
            const double series = 1.0 + t / 2.0 + t2 / 12.0 - t2 * t2 / 720.0;
            return std::pow(t, m - 1) * std::exp(-z * t) * series;
        }
        const double log_abs_power = m * std::log(std::abs(t));
        if (t > 0.0) {
            return std::exp(log_abs_power - z * t) / -std::expm1(-t);
        }
        // e^{-zt} / (1 - e^{-t}) = e^{(1-z)t} / (e^t - 1), finite as t -> -inf
        const double sign = (m % 2 == 0) ? 1.0 : -1.0;
        return sign * std::exp(log_abs_power + (1.0 - z) * t) / std::expm1(t);
    };
}

VerificationReport verify_lemma1(int m, std::span<const double> z_grid,
                                 const quad::QuadratureConfig& cfg, double tol) {
    Tracker tracker(Subject::Lemma1, tol);
    for (const double z : z_grid) {
        const auto integrand = lemma1_integrand(m, z);
        const auto outcome = quad::integrate_bilateral(integrand, cfg);
        ProbePoint point{static_cast<double>(m), z};
        if (!outcome.converged) {
            tracker.record_unconverged(std::move(point));
            continue;
        }
        tracker.record(std::move(point), std::abs(outcome.value - polygamma_reflection_lhs(m, z)));
    }
    return tracker.finish();
}

VerificationReport verify_lemma2(int m_max, std::span<const double> z_grid, double tol) {
    if (m_max < 1 || m_max > 3) {
        throw UnsupportedOrderError("verify_lemma2: m_max must lie in [1, 3]");
    }
    Tracker tracker(Subject::Lemma2, tol);
    for (int m = 1; m <= m_max; ++m) {
        const double sign = (m % 2 == 0) ? 1.0 : -1.0;
        for (const double z : z_grid) {
            if (!(z > 0.05 && z < 0.95)) {
                throw DomainError("verify_lemma2: z must lie in (0.05, 0.95)");
            }
            const double lhs = polygamma_reflection_lhs(m, z);
            // d^m/dz^m cot(pi z) = pi^m cot^(m)(pi z)
            const double rhs =
                sign * std::pow(kPi, m + 1) * specfun::cot_derivative(m, kPi * z);
            tracker.record({static_cast<double>(m), z},
                           std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
        }
    }
    return tracker.finish();
}

VerificationReport verify_lemma3(std::span<const double> x_grid, double tol) {
    Tracker tracker(Subject::Lemma3, tol);
    for (const double x : x_grid) {
        const double s2 = std::sin(2.0 * x);
        if (!(std::abs(s2) > 1e-6)) {
            throw DomainError("verify_lemma3: x too close to a multiple of pi/2");
        }
        const double c = std::cos(x);
        const double s = std::sin(x);
        const double lhs = 1.0 / (c * c) - 1.0 / (s * s);
        const double rhs = -4.0 * (std::cos(2.0 * x) / s2) / s2;
        tracker.record({x}, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
    }
    return tracker.finish();
}

VerificationReport verify_theorem(std::span<const Exponent> n_grid,
                                  const quad::QuadratureConfig& cfg, double tol) {
    Tracker tracker(Subject::Theorem1, tol);
    for (const Exponent n : n_grid) {
        const auto numeric = numeric_integral(n, cfg);
        if (!numeric.converged) {
            tracker.record_unconverged({n.value()});
            continue;
        }
        const std::array<double, 4> routes = {numeric.value, closed_form_trigamma(n),
                                              closed_form_sec_csc(n), closed_form_trig(n)};
        const auto [lo, hi] = std::minmax_element(routes.begin(), routes.end());
        tracker.record({n.value()}, *hi - *lo);
    }
    return tracker.finish();
}

VerificationReport verify_sec_csc_form(std::span<const Exponent> n_grid, double tol) {
    Tracker tracker(Subject::SecCscForm, tol);
    for (const Exponent n : n_grid) {
        const double collapsed = closed_form_trig(n);
        const double expanded = closed_form_sec_csc(n);
        tracker.record({n.value()},
                       std::abs(expanded - collapsed) / std::max(1.0, std::abs(collapsed)));
    }
    return tracker.finish();
}

VerificationReport verify_limit(std::span<const Exponent> n_list, double tol) {
    const auto samples = limit_probe(n_list);
    Tracker tracker(Subject::Limit, tol);
    for (std::size_t i = 1; i < samples.size(); ++i) {
        const auto& prev = samples[i - 1];
        const auto& cur = samples[i];
        double deviation = std::abs(cur.scaled_residual / prev.scaled_residual - 1.0);
        if (!(cur.residual > 0.0 && cur.residual < prev.residual)) {
            deviation = kInf;
        }
        tracker.record({cur.n}, deviation);
    }
    if (samples.size() == 1) {
        tracker.record({samples.front().n}, samples.front().residual > 0.0 ? 0.0 : kInf);
    }
    return tracker.finish();
}

} // namespace logint
