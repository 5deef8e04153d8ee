#ifndef LOGINT_VERIFY_HPP
#define LOGINT_VERIFY_HPP

// Numerical re-execution of each identity used in deriving I(n).
// Every verifier evaluates both sides independently over a grid and reports
// the worst deviation it saw.

#include <span>
#include <string_view>
#include <vector>

#include "logint/integral.hpp"
#include "logint/quad.hpp"

namespace logint {

enum class Subject { Lemma1, Lemma2, Lemma3, Theorem1, SecCscForm, Limit };

std::string_view to_string(Subject s);

/// A probe point is (m, z) for the polygamma identities, (x) for the trig
/// identity and (n) for everything indexed by the exponent.
using ProbePoint = std::vector<double>;

struct VerificationReport {
    Subject subject;
    std::vector<ProbePoint> grid;
    double max_abs_deviation = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    ProbePoint worst_point;
    // false if some quadrature in the check did not converge; the report then
    // fails with an infinite deviation at that point
    bool quadrature_converged = true;
};

inline constexpr double kLemma1Tolerance = 1e-6;
inline constexpr double kLemma2Tolerance = 1e-9;
inline constexpr double kLemma3Tolerance = 1e-12;
inline constexpr double kTheoremTolerance = 1e-6;
inline constexpr double kSecCscTolerance = 1e-12;
inline constexpr double kLimitTolerance = 0.01;

std::vector<double> default_lemma1_grid();
std::vector<double> default_lemma2_grid();
std::vector<double> default_lemma3_grid();
std::vector<Exponent> default_theorem_grid();

/// t^m e^{-zt} / (1 - e^{-t}) with the removable singularity at t = 0 filled in
/// by its Taylor expansion for |t| < 1e-4. Needs 1 <= m <= 3 and 0 < z < 1.
quad::Integrand lemma1_integrand(int m, double z);

/// Bilateral integral of lemma1_integrand(m, z) against
/// psi^(m)(1 - z) + (-1)^(m+1) psi^(m)(z), absolute deviation.
VerificationReport verify_lemma1(int m, std::span<const double> z_grid,
                                 const quad::QuadratureConfig& cfg = {},
                                 double tol = kLemma1Tolerance);

/// psi^(m)(1 - z) + (-1)^(m+1) psi^(m)(z) against (-1)^m pi^(m+1) cot^(m)(pi z)
/// for m = 1..m_max; deviation relative to max(1, |rhs|).
VerificationReport verify_lemma2(int m_max, std::span<const double> z_grid,
                                 double tol = kLemma2Tolerance);

/// sec^2 x - csc^2 x against -4 cot 2x csc 2x; deviation relative to max(1, |rhs|).
VerificationReport verify_lemma3(std::span<const double> x_grid, double tol = kLemma3Tolerance);

/// Spread of {numeric_integral, closed_form_trigamma, closed_form_sec_csc,
/// closed_form_trig} at each n.
VerificationReport verify_theorem(std::span<const Exponent> n_grid,
                                  const quad::QuadratureConfig& cfg = {},
                                  double tol = kTheoremTolerance);

/// closed_form_sec_csc against closed_form_trig, relative to max(1, |trig|).
VerificationReport verify_sec_csc_form(std::span<const Exponent> n_grid,
                                           double tol = kSecCscTolerance);

/// Stability of (I(n) + 1) n^2 along an ascending list: deviation at each
/// point after the first is |ratio to the previous value - 1|, and infinite if
/// the residuals stop decreasing.
VerificationReport verify_limit(std::span<const Exponent> n_list, double tol = kLimitTolerance);

} // namespace logint

#endif // LOGINT_VERIFY_HPP
