#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "logint_cli/commands.hpp"

namespace logint::cli {

int run(std::span<const std::string> args, Streams io) {
    CLI::App app{"Evaluate and cross-check I(n) = integral_0^inf ln x / (x^n + 1) dx for n > 1",
                 "logint"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions opts;
    double tol = 0.0;
    double quad_tol = 0.0;
    const std::map<std::string, OutputFormat> formats = {
        {"human", OutputFormat::Human}, {"csv", OutputFormat::Csv}, {"json", OutputFormat::Json}};
    app.add_option("--format", opts.format, "Output format: human, csv or json")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    auto* tol_opt = app.add_option("--tol", tol, "Spread / pass threshold override")
                        ->check(CLI::PositiveNumber);
    auto* quad_tol_opt = app.add_option("--quad-tol", quad_tol,
                                        "Absolute and relative tolerance of the quadrature engine")
                             ->check(CLI::PositiveNumber);
    app.add_flag("--quiet,-q", opts.quiet, "Suppress human-readable output");

    double n = 0.0;
    auto* eval = app.add_subcommand("eval", "Evaluate I(n) by all four routes");
    eval->add_option("--n", n, "Exponent n > 1")->required();

    double n_min = 0.0;
    double n_max = 0.0;
    int steps = 0;
    Spacing spacing = Spacing::Linear;
    const std::map<std::string, Spacing> spacings = {{"linear", Spacing::Linear},
                                                     {"log", Spacing::Log}};
    auto* table = app.add_subcommand("table", "Tabulate I(n) over a grid of exponents");
    table->add_option("--min", n_min, "Smallest exponent")->required();
    table->add_option("--max", n_max, "Largest exponent")->required();
    table->add_option("--steps", steps, "Number of grid points (>= 2)")->required();
    table->add_option("--spacing", spacing, "Grid spacing: linear or log")
        ->transform(CLI::CheckedTransformer(spacings, CLI::ignore_case));

    VerifySubject subject = VerifySubject::All;
    const std::map<std::string, VerifySubject> subjects = {
        {"lemma1", VerifySubject::Lemma1}, {"lemma2", VerifySubject::Lemma2},
        {"lemma3", VerifySubject::Lemma3}, {"theorem", VerifySubject::Theorem},
        {"all", VerifySubject::All}};
    auto* verify = app.add_subcommand("verify", "Numerically verify the identities behind I(n)");
    verify->add_option("--subject", subject, "lemma1, lemma2, lemma3, theorem or all")
        ->transform(CLI::CheckedTransformer(subjects, CLI::ignore_case));

    std::vector<double> n_list;
    auto* limit = app.add_subcommand("limit", "Probe the approach of I(n) to -1");
    limit->add_option("--n-list", n_list, "Comma-separated ascending exponents")
        ->required()
        ->delimiter(',');

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, io.out, io.err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, io.out, io.err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, io.out, io.err);
        return kExitUsage;
    }
    if (tol_opt->count() > 0) {
        opts.tol = tol;
    }
    if (quad_tol_opt->count() > 0) {
        opts.quad_tol = quad_tol;
    }

    if (eval->parsed()) {
        return cmd_eval(n, opts, io);
    }
    if (table->parsed()) {
        return cmd_table(n_min, n_max, steps, spacing, opts, io);
    }
    if (verify->parsed()) {
        return cmd_verify(subject, opts, io);
    }
    return cmd_limit(n_list, opts, io);
}

} // namespace logint::cli
