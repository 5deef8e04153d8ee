#include "logint_cli/format.hpp"

#include <charconv>
#include <cmath>
#include <iomanip>
#include <system_error>

#include <json.hpp>

namespace logint::cli {

namespace {

using json = nlohmann::ordered_json;

json evaluation_json(const EvaluationRow& row) {
    return json{
        {"n", row.n.value()},
        {"trig_form", row.trig_form},
        {"trigamma_form", row.trigamma_form},
        {"gamma_derivative_form", row.gamma_derivative_form},
        {"quadrature_value", row.quadrature.value},
        {"quadrature_error", row.quadrature.error_estimate},
        {"spread", row.max_pairwise_spread},
    };
}

json report_json(const VerificationReport& report) {
    return json{
        {"subject", std::string(to_string(report.subject))},
        {"max_abs_deviation", report.max_abs_deviation},
        {"tolerance", report.tolerance},
        {"pass", report.pass},
        {"worst_point", report.worst_point},
    };
}

std::string machine(double v) { return format_number(v, kMachineDigits); }
std::string human(double v) { return format_number(v, kHumanDigits); }

std::string point_text(const ProbePoint& p, char sep, int digits) {
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i > 0) {
            s += sep;
        }
        s += format_number(p[i], digits);
    }
    return s;
}

} // namespace

std::string format_number(double value, int digits) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, digits);
    if (res.ec != std::errc{}) {
        return "nan";
    }
    return std::string(buf, res.ptr);
}

void write_evaluations(std::ostream& out, std::span<const EvaluationRow> rows, OutputFormat format,
                       bool single) {
    switch (format) {
    case OutputFormat::Csv:
        out << kEvaluationCsvHeader << '\n';
        for (const auto& r : rows) {
            out << machine(r.n.value()) << ',' << machine(r.trig_form) << ','
                << machine(r.trigamma_form) << ',' << machine(r.gamma_derivative_form) << ','
                << machine(r.quadrature.value) << ',' << machine(r.quadrature.error_estimate) << ','
                << machine(r.max_pairwise_spread) << '\n';
        }
        return;
    case OutputFormat::Json: {
        if (single && rows.size() == 1) {
            out << evaluation_json(rows.front()).dump(2) << '\n';
            return;
        }
        json arr = json::array();
        for (const auto& r : rows) {
            arr.push_back(evaluation_json(r));
        }
        out << arr.dump(2) << '\n';
        return;
    }
    case OutputFormat::Human:
        break;
    }

    if (single && rows.size() == 1) {
        const auto& r = rows.front();
        out << "I(n) = integral_0^inf ln x / (x^n + 1) dx,  n = " << human(r.n.value()) << '\n'
            << "  trig form              " << human(r.trig_form) << '\n'
            << "  trigamma form          " << human(r.trigamma_form) << '\n'
            << "  gamma-derivative form  " << human(r.gamma_derivative_form) << '\n'
            << "  quadrature             " << human(r.quadrature.value) << "  (error estimate "
            << format_number(r.quadrature.error_estimate, 3) << ", " << r.quadrature.evaluations
            << " evaluations" << (r.quadrature.converged ? "" : ", NOT CONVERGED") << ")\n"
            << "  max pairwise spread    " << format_number(r.max_pairwise_spread, 3) << '\n';
        return;
    }
    out << std::left << std::setw(18) << "n" << std::setw(18) << "trig" << std::setw(18)
        << "trigamma" << std::setw(18) << "gamma-deriv" << std::setw(18) << "quadrature"
        << "spread\n";
    for (const auto& r : rows) {
        out << std::setw(18) << human(r.n.value()) << std::setw(18) << human(r.trig_form)
            << std::setw(18) << human(r.trigamma_form) << std::setw(18)
            << human(r.gamma_derivative_form) << std::setw(18) << human(r.quadrature.value)
            << format_number(r.max_pairwise_spread, 3) << '\n';
    }
}

void write_reports(std::ostream& out, std::span<const VerificationReport> reports,
                   OutputFormat format) {
    switch (format) {
    case OutputFormat::Csv:
        out << kReportCsvHeader << '\n';
        for (const auto& r : reports) {
            out << to_string(r.subject) << ',' << machine(r.max_abs_deviation) << ','
                << machine(r.tolerance) << ',' << (r.pass ? "true" : "false") << ','
                << point_text(r.worst_point, ';', kMachineDigits) << '\n';
        }
        return;
    case OutputFormat::Json: {
        json arr = json::array();
        for (const auto& r : reports) {
            arr.push_back(report_json(r));
        }
        out << arr.dump(2) << '\n';
        return;
    }
    case OutputFormat::Human:
        break;
    }
    for (const auto& r : reports) {
        out << std::left << std::setw(18) << to_string(r.subject) << (r.pass ? "PASS" : "FAIL")
            << "  max deviation " << format_number(r.max_abs_deviation, 3) << " (tol "
            << format_number(r.tolerance, 3) << ", " << r.grid.size() << " points), worst at ("
            << point_text(r.worst_point, ',', kHumanDigits) << ")";
        if (!r.quadrature_converged) {
            out << "  quadrature did not converge";
        }
        out << '\n';
    }
}

void write_limit(std::ostream& out, std::span<const LimitSample> samples, OutputFormat format) {
    switch (format) {
    case OutputFormat::Csv:
        out << kLimitCsvHeader << '\n';
        for (const auto& s : samples) {
            out << machine(s.n) << ',' << machine(s.value) << ',' << machine(s.residual) << ','
                << machine(s.scaled_residual) << '\n';
        }
        return;
    case OutputFormat::Json: {
        json arr = json::array();
        for (const auto& s : samples) {
            arr.push_back(json{{"n", s.n},
                               {"value", s.value},
                               {"residual", s.residual},
                               {"scaled_residual", s.scaled_residual}});
        }
        out << arr.dump(2) << '\n';
        return;
    }
    case OutputFormat::Human:
        break;
    }
    out << std::left << std::setw(18) << "n" << std::setw(20) << "I(n)" << std::setw(20)
        << "I(n) + 1" << "(I(n) + 1) n^2\n";
    for (const auto& s : samples) {
        out << std::setw(18) << human(s.n) << std::setw(20) << human(s.value) << std::setw(20)
            << human(s.residual) << human(s.scaled_residual) << '\n';
    }
}

} // namespace logint::cli
