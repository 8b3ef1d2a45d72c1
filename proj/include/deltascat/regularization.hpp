#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "deltascat/scattering.hpp"
#include "deltascat/special_functions.hpp"

// Total cross section from the cutoff-regularized Green-function bracket
//
//     sigma(eps) = (1 / 4k) |(1/2pi) K0(mu eps) - (i/4) H0(1)(k eps)|^-2
//
// and its eps -> 0 limit.

namespace deltascat {

enum class RegularizationMode {
    full,           ///< series K0 and H0(1)
    asymptotic,     ///< -ln(z/2) - gamma and 1 + (2i/pi)(ln(z/2) + gamma)
    truncated_log,  ///< only ln z kept: K0 ~ -ln(mu eps), H0(1) ~ (2i/pi) ln(k eps)
};

[[nodiscard]] std::string_view to_string(RegularizationMode mode) noexcept;
/// Accepts "full", "asymptotic", "truncated_log" and "truncated-log".
[[nodiscard]] std::optional<RegularizationMode> parse_mode(std::string_view name) noexcept;

/// eps_i = eps_start * factor^i for i in [0, count).
class EpsilonSchedule {
public:
    /// Throws ValidationError unless eps_start > 0, 0 < factor < 1, count >= 2.
    EpsilonSchedule(double eps_start, double factor, int count);

    /// 1e-2, x0.1, 5 points.
    [[nodiscard]] static EpsilonSchedule standard();
    /// The standard schedule, with eps_start lowered to 1/max(mu, k) when
    /// 1e-2 would put mu*eps or k*eps past the series domain.
    [[nodiscard]] static EpsilonSchedule standard_for(const ScatteringProblem& p);

    [[nodiscard]] double eps_start() const noexcept { return eps_start_; }
    [[nodiscard]] double factor() const noexcept { return factor_; }
    [[nodiscard]] int count() const noexcept { return count_; }
    [[nodiscard]] std::vector<double> values() const;

    /// True when every eps keeps mu*eps and k*eps within (0, 2].
    [[nodiscard]] bool fits_series_domain(const ScatteringProblem& p) const noexcept;

private:
    double eps_start_;
    double factor_;
    int count_;
};

struct LimitSample {
    double eps;
    double sigma;
};

struct LimitEstimate {
    double sigma_limit = 0.0;
    /// |sigma(eps_last) - sigma(eps_second_to_last)|
    double error_estimate = 0.0;
    std::vector<LimitSample> samples;
    /// Last two samples agree to relative 1e-8.
    bool converged = false;
    /// Empirical order p in |sigma_i - sigma_{i+1}| ~ eps_i^p from the last
    /// three samples; empty when a difference vanishes or count < 3.
    std::optional<double> observed_order;
};

/// Relative agreement of the last two samples required for convergence.
inline constexpr double kConvergenceTolerance = 1e-8;

/// The complex quantity whose inverse squared modulus gives sigma(eps).
[[nodiscard]] ComplexValue regularized_bracket(const ScatteringProblem& p, double eps,
                                               RegularizationMode mode);

/// Throws DomainError for eps <= 0, or for mu*eps > 2 or k*eps > 2 in the
/// full and asymptotic modes. Throws DegenerateBracketError when the bracket
/// modulus vanishes.
[[nodiscard]] double regularized_cross_section(const ScatteringProblem& p, double eps,
                                               RegularizationMode mode);

[[nodiscard]] LimitEstimate limit_extrapolate(const ScatteringProblem& p,
                                              const EpsilonSchedule& schedule,
                                              RegularizationMode mode);

/// pi^2 / (k (ln x)^2): the eps -> 0 limit when only the logarithms are kept.
/// Throws SingularInputError at ln x == 0.
[[nodiscard]] double mead_godines_wrong_limit(const ScatteringProblem& p);

/// (pi^2 + 4 (ln x)^2) / (4 (ln x)^2), the factor by which the log-only
/// limit overshoots the correct cross section.
[[nodiscard]] double wrong_limit_ratio(const ScatteringProblem& p);

}  // namespace deltascat
