#ifndef LOGINT_CLI_FORMAT_HPP
#define LOGINT_CLI_FORMAT_HPP

#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include "logint/integral.hpp"
#include "logint/verify.hpp"

namespace logint::cli {

enum class OutputFormat { Human, Csv, Json };

/// Digits emitted for machine formats (round-trip safe for double).
inline constexpr int kMachineDigits = 17;
inline constexpr int kHumanDigits = 10;

inline constexpr std::string_view kEvaluationCsvHeader =
    "n,trig_form,trigamma_form,gamma_derivative_form,quadrature_value,quadrature_error,spread";
inline constexpr std::string_view kReportCsvHeader =
    "subject,max_abs_deviation,tolerance,pass,worst_point";
inline constexpr std::string_view kLimitCsvHeader = "n,value,residual,scaled_residual";

/// Locale-independent shortest-form printing with the given significant digits.
std::string format_number(double value, int digits);

void write_evaluations(std::ostream& out, std::span<const EvaluationRow> rows, OutputFormat format,
                       bool single);
void write_reports(std::ostream& out, std::span<const VerificationReport> reports,
                   OutputFormat format);
void write_limit(std::ostream& out, std::span<const LimitSample> samples, OutputFormat format);

} // namespace logint::cli

#endif // LOGINT_CLI_FORMAT_HPP
