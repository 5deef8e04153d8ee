#include "logint/quad.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "logint/errors.hpp"

namespace logint::quad {

namespace {

// Trapezoidal rule runs over |t| <= kTMax. Past it the tanh-sinh complement
// underflows and the exp-sinh abscissa leaves any meaningful range.
constexpr double kTMax = 6.2;
constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kRoundoffFactor = 8.0;
constexpr int kMinConvergedLevel = 3;

struct KahanSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double x) {
        const double y = x - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

// Integrand already pulled back to the t-line: returns weight(t) * f(x(t)),
// or 0 without calling f when the node collapses onto an endpoint.
using Transformed = std::function<double(double, std::int64_t&)>;

// Nodes t = j*h for j odd (or all j at level 0), in ascending |t| with the
// positive node first.
std::vector<double> level_nodes(int level) {
    std::vector<double> nodes;
    const double h = std::ldexp(1.0, -level);
    const auto j_max = static_cast<long>(std::floor(kTMax / h));
    if (level == 0) {
        nodes.push_back(0.0);
        for (long j = 1; j <= j_max; ++j) {
            nodes.push_back(static_cast<double>(j) * h);
            nodes.push_back(-static_cast<double>(j) * h);
        }
    } else {
        for (long j = 1; j <= j_max; j += 2) {
            nodes.push_back(static_cast<double>(j) * h);
            nodes.push_back(-static_cast<double>(j) * h);
        }
    }
    return nodes;
}

QuadratureOutcome run(std::span<const Transformed> pieces, const QuadratureConfig& cfg) {
    cfg.validate();
    const std::size_t count = pieces.size();
    std::vector<KahanSum> sums(count);
    std::vector<KahanSum> abs_sums(count);
    std::vector<double> previous(count, 0.0);

    QuadratureOutcome out;
    const int min_level = std::min(kMinConvergedLevel, cfg.max_level);

    for (int level = 0; level <= cfg.max_level; ++level) {
        const auto nodes = level_nodes(level);
        const auto budget = static_cast<std::int64_t>(nodes.size() * count);
        if (out.evaluations + budget > cfg.max_evals) {
            break;
        }
        const double h = std::ldexp(1.0, -level);

        double value = 0.0;
        double diff = 0.0;
        double l1 = 0.0;
        for (std::size_t i = 0; i < count; ++i) {
            for (double t : nodes) {
                const double g = pieces[i](t, out.evaluations);
                sums[i].add(g);
                abs_sums[i].add(std::abs(g));
            }
            const double current = h * sums[i].sum;
            if (level > 0) {
                diff += std::abs(current - previous[i]);
            }
            previous[i] = current;
            value += current;
            l1 += h * abs_sums[i].sum;
        }

        out.value = value;
        if (level == 0) {
            out.error_estimate = std::numeric_limits<double>::infinity();
            continue;
        }
        out.error_estimate = std::max(diff, kRoundoffFactor * kEps * l1);
        const double target = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(value));
        if (level >= min_level && out.error_estimate <= target) {
            out.converged = true;
            break;
        }
    }
    if (!std::isfinite(out.value)) {
        out.converged = false;
    }
    return out;
}

Transformed tanh_sinh(const Integrand& f, double a, double b) {
    const double half = 0.5 * (b - a);
    return [&f, a, b, half](double t, std::int64_t& evals) -> double {
        const double u = kHalfPi * std::sinh(t);
        const double cu = std::cosh(u);
        const double weight = half * kHalfPi * std::cosh(t) / (cu * cu);
        if (!(weight > 0.0) || !std::isfinite(weight)) {
            return 0.0;
        }
        // Distance from the nearer endpoint, computed without cancellation:
        // 1 - tanh|u| = 2 / (1 + exp(2|u|)).
        const double offset = half * 2.0 / (1.0 + std::exp(2.0 * std::abs(u)));
        const double x = (t < 0.0) ? a + offset : (t > 0.0 ? b - offset : a + half);
        if (!(x > a && x < b)) {
            return 0.0;
        }
        ++evals;
        return weight * f(x);
    };
}

Transformed exp_sinh(const Integrand& f, double a, bool reflect) {
    return [&f, a, reflect](double t, std::int64_t& evals) -> double {
        const double offset = std::exp(kHalfPi * std::sinh(t));
        if (!(offset > 0.0) || !std::isfinite(offset)) {
            return 0.0;
        }
        const double weight = kHalfPi * std::cosh(t) * offset;
        if (!std::isfinite(weight)) {
            return 0.0;
        }
        const double x = reflect ? a - offset : a + offset;
        if (!std::isfinite(x) || x == a) {
            return 0.0;
        }
        ++evals;
        return weight * f(x);
    };
}

} // namespace

void QuadratureConfig::validate() const {
    if (!(abs_tol >= 0.0) || !(rel_tol >= 0.0)) {
        throw std::invalid_argument("QuadratureConfig: tolerances must be >= 0");
    }
    if (!(abs_tol > 0.0 || rel_tol > 0.0)) {
        throw std::invalid_argument("QuadratureConfig: abs_tol or rel_tol must be > 0");
    }
    if (max_level < 1 || max_level > 16) {
        throw std::invalid_argument("QuadratureConfig: max_level must lie in [1, 16]");
    }
    if (max_evals < 1 || max_evals > 10'000'000) {
        throw std::invalid_argument("QuadratureConfig: max_evals must lie in [1, 1e7]");
    }
}

QuadratureOutcome integrate_finite(const Integrand& f, double a, double b,
                                   const QuadratureConfig& cfg) {
    if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
        throw InvalidIntervalError("integrate_finite: need finite a < b");
    }
    const std::array<Transformed, 1> pieces = {tanh_sinh(f, a, b)};
    return run(pieces, cfg);
}

QuadratureOutcome integrate_semi_infinite(const Integrand& f, double a,
                                          const QuadratureConfig& cfg) {
    if (!std::isfinite(a)) {
        throw InvalidIntervalError("integrate_semi_infinite: lower limit must be finite");
    }
    const std::array<Transformed, 1> pieces = {exp_sinh(f, a, false)};
    return run(pieces, cfg);
}

QuadratureOutcome integrate_bilateral(const Integrand& f, const QuadratureConfig& cfg) {
    const std::array<Transformed, 2> pieces = {exp_sinh(f, 0.0, false), exp_sinh(f, 0.0, true)};
    return run(pieces, cfg);
}

} // namespace logint::quad
