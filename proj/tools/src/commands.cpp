#include "logint_cli/commands.hpp"

#include <algorithm>
#include <cmath>

#include "logint/errors.hpp"
#include "logint/integral.hpp"
#include "logint/verify.hpp"

namespace logint::cli {

namespace {

quad::QuadratureConfig quad_config(const GlobalOptions& opts) {
    quad::QuadratureConfig cfg;
    if (opts.quad_tol) {
        cfg.abs_tol = *opts.quad_tol;
        cfg.rel_tol = *opts.quad_tol;
    }
    return cfg;
}

bool prose_enabled(const GlobalOptions& opts) {
    return !(opts.quiet && opts.format == OutputFormat::Human);
}

int usage_error(Streams io, const std::exception& e) {
    io.err << "error: " << e.what() << '\n';
    return kExitUsage;
}

int rows_status(std::span<const EvaluationRow> rows, double threshold) {
    const bool ok = std::all_of(rows.begin(), rows.end(), [threshold](const EvaluationRow& r) {
        return r.quadrature.converged && r.max_pairwise_spread < threshold;
    });
    return ok ? kExitSuccess : kExitNonConvergence;
}

} // namespace

std::vector<double> table_grid(double n_min, double n_max, int steps, Spacing spacing) {
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) {
        const double frac = static_cast<double>(i) / (steps - 1);
        if (i == steps - 1) {
            grid.push_back(n_max);
        } else if (spacing == Spacing::Log) {
            grid.push_back(n_min * std::pow(n_max / n_min, frac));
        } else {
            grid.push_back(n_min + (n_max - n_min) * frac);
        }
    }
    return grid;
}

int cmd_eval(double n, const GlobalOptions& opts, Streams io) {
    try {
        const Exponent exponent(n);
        const std::vector<EvaluationRow> rows = {evaluate_all_routes(exponent, quad_config(opts))};
        if (prose_enabled(opts)) {
            write_evaluations(io.out, rows, opts.format, true);
        }
        return rows_status(rows, opts.tol.value_or(kDefaultSpreadThreshold));
    } catch (const DomainError& e) {
        return usage_error(io, e);
    } catch (const std::invalid_argument& e) {
        return usage_error(io, e);
    }
}

int cmd_table(double n_min, double n_max, int steps, Spacing spacing, const GlobalOptions& opts,
              Streams io) {
    try {
        if (!(std::isfinite(n_min) && std::isfinite(n_max) && n_min > 1.0 && n_min < n_max)) {
            throw DomainError("table range must satisfy 1 < min < max (the integral diverges for n <= 1)");
        }
        if (steps < 2) {
            throw DomainError("table needs --steps >= 2");
        }
        const auto cfg = quad_config(opts);
        std::vector<EvaluationRow> rows;
        for (const double n : table_grid(n_min, n_max, steps, spacing)) {
            rows.push_back(evaluate_all_routes(Exponent(n), cfg));
        }
        if (prose_enabled(opts)) {
            write_evaluations(io.out, rows, opts.format, false);
        }
        return rows_status(rows, opts.tol.value_or(kDefaultSpreadThreshold));
    } catch (const DomainError& e) {
        return usage_error(io, e);
    } catch (const std::invalid_argument& e) {
        return usage_error(io, e);
    }
}

int cmd_verify(VerifySubject subject, const GlobalOptions& opts, Streams io) {
    const auto cfg = quad_config(opts);
    const auto tol_or = [&opts](double fallback) { return opts.tol.value_or(fallback); };
    const bool all = subject == VerifySubject::All;

    std::vector<VerificationReport> reports;
    try {
        if (all || subject == VerifySubject::Lemma1) {
            const auto grid = default_lemma1_grid();
            for (int m = 1; m <= 3; ++m) {
                reports.push_back(verify_lemma1(m, grid, cfg, tol_or(kLemma1Tolerance)));
            }
        }
        if (all || subject == VerifySubject::Lemma2) {
            reports.push_back(verify_lemma2(3, default_lemma2_grid(), tol_or(kLemma2Tolerance)));
        }
        if (all || subject == VerifySubject::Lemma3) {
            reports.push_back(verify_lemma3(default_lemma3_grid(), tol_or(kLemma3Tolerance)));
        }
        if (all || subject == VerifySubject::Theorem) {
            reports.push_back(verify_theorem(default_theorem_grid(), cfg, tol_or(kTheoremTolerance)));
        }
    } catch (const std::invalid_argument& e) {
        return usage_error(io, e);
    }

    if (prose_enabled(opts)) {
        write_reports(io.out, reports, opts.format);
    }
    const auto unconverged = std::any_of(reports.begin(), reports.end(),
                                         [](const auto& r) { return !r.quadrature_converged; });
    if (unconverged) {
        return kExitNonConvergence;
    }
    const auto passed =
        std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
    return passed ? kExitSuccess : kExitVerificationFailure;
}

int cmd_limit(std::span<const double> n_list, const GlobalOptions& opts, Streams io) {
    try {
        std::vector<Exponent> exponents;
        exponents.reserve(n_list.size());
        for (const double n : n_list) {
            exponents.emplace_back(n);
        }
        const auto samples = limit_probe(exponents);
        if (prose_enabled(opts)) {
            write_limit(io.out, samples, opts.format);
        }
        return residuals_strictly_decreasing(samples) ? kExitSuccess : kExitVerificationFailure;
    } catch (const DomainError& e) {
        return usage_error(io, e);
    }
}

} // namespace logint::cli
