#ifndef LOGINT_CLI_COMMANDS_HPP
#define LOGINT_CLI_COMMANDS_HPP

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "logint_cli/format.hpp"

namespace logint::cli {

// Process exit codes.
enum ExitStatus : int {
    kExitSuccess = 0,
    kExitVerificationFailure = 1,
    kExitUsage = 2,
    kExitNonConvergence = 3,
};

inline constexpr double kDefaultSpreadThreshold = 1e-6;

struct GlobalOptions {
    OutputFormat format = OutputFormat::Human;
    std::optional<double> tol;      // spread / pass threshold override
    std::optional<double> quad_tol; // internal quadrature abs and rel tolerance
    bool quiet = false;
};

enum class Spacing { Linear, Log };
enum class VerifySubject { Lemma1, Lemma2, Lemma3, Theorem, All };

struct Streams {
    std::ostream& out;
    std::ostream& err;
};

int cmd_eval(double n, const GlobalOptions& opts, Streams io);
int cmd_table(double n_min, double n_max, int steps, Spacing spacing, const GlobalOptions& opts,
              Streams io);
int cmd_verify(VerifySubject subject, const GlobalOptions& opts, Streams io);
int cmd_limit(std::span<const double> n_list, const GlobalOptions& opts, Streams io);

/// Grid used by `table`; exposed for tests.
std::vector<double> table_grid(double n_min, double n_max, int steps, Spacing spacing);

/// Full command line, excluding the program name.
int run(std::span<const std::string> args, Streams io);

} // namespace logint::cli

#endif // LOGINT_CLI_COMMANDS_HPP
