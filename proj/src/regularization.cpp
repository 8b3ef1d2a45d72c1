#include "deltascat/regularization.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "deltascat/errors.hpp"

namespace deltascat {

std::string_view to_string(RegularizationMode mode) noexcept {
    switch (mode) {
        case RegularizationMode::full: return "full";
        case RegularizationMode::asymptotic: return "asymptotic";
        case RegularizationMode::truncated_log: return "truncated_log";
    }
    return "unknown";
}

std::optional<RegularizationMode> parse_mode(std::string_view name) noexcept {
    if (name == "full") return RegularizationMode::full;
    if (name == "asymptotic") return RegularizationMode::asymptotic;
    if (name == "truncated_log" || name == "truncated-log") return RegularizationMode::truncated_log;
    return std::nullopt;
}

EpsilonSchedule::EpsilonSchedule(double eps_start, double factor, int count)
    : eps_start_(eps_start), factor_(factor), count_(count) {
    if (!std::isfinite(eps_start) || !(eps_start > 0.0)) {
        throw ValidationError("eps_start must be finite and positive");
    }
    if (!(factor > 0.0 && factor < 1.0)) {
        throw ValidationError("eps_factor must lie strictly between 0 and 1");
    }
    if (count < 2) throw ValidationError("eps_count must be at least 2");
}

EpsilonSchedule EpsilonSchedule::standard() { return {1e-2, 1e-1, 5}; }

EpsilonSchedule EpsilonSchedule::standard_for(const ScatteringProblem& p) {
    EpsilonSchedule s = standard();
    if (s.fits_series_domain(p)) return s;
    return {1.0 / std::max(p.mu(), p.k()), s.factor_, s.count_};
}

std::vector<double> EpsilonSchedule::values() const {
    std::vector<double> eps(static_cast<std::size_t>(count_));
    double e = eps_start_;
    for (auto& v : eps) {
        v = e;
        e *= factor_;
    }
    return eps;
}

bool EpsilonSchedule::fits_series_domain(const ScatteringProblem& p) const noexcept {
    // The schedule is decreasing, so the first point is the binding one.
    return p.mu() * eps_start_ <= kSeriesDomainMax && p.k() * eps_start_ <= kSeriesDomainMax;
}

ComplexValue regularized_bracket(const ScatteringProblem& p, double eps, RegularizationMode mode) {
    if (!std::isfinite(eps) || !(eps > 0.0)) {
        throw DomainError("eps must be finite and positive, got " + std::to_string(eps));
    }
    const double mu_eps = p.mu() * eps;
    const double k_eps = p.k() * eps;
    if (mode != RegularizationMode::truncated_log &&
        (mu_eps > kSeriesDomainMax || k_eps > kSeriesDomainMax)) {
        throw DomainError("mu*eps = " + std::to_string(mu_eps) + ", k*eps = " +
                          std::to_string(k_eps) + " outside the series domain (0, 2]");
    }

    double k0 = 0.0;
    ComplexValue h0;
    switch (mode) {
        case RegularizationMode::full:
            k0 = bessel_k0(mu_eps);
            h0 = hankel1_0(k_eps);
            break;
        case RegularizationMode::asymptotic:
            k0 = k0_small_z(mu_eps);
            h0 = hankel1_0_small_z(k_eps);
            break;
        case RegularizationMode::truncated_log: {
            // The two logarithms cancel their eps dependence; long double keeps
            // the leftover ln(k/mu) exact to double precision for every eps.
            const long double eps_l = eps;
            const long double log_mu_eps = std::log(static_cast<long double>(p.mu()) * eps_l);
            const long double log_k_eps = std::log(static_cast<long double>(p.k()) * eps_l);
            const double re = static_cast<double>((log_k_eps - log_mu_eps) /
                                                  (2.0L * static_cast<long double>(kPi)));
            return {re, 0.0};
        }
    }
    const ComplexValue minus_i_quarter{0.0, -0.25};
    return ComplexValue{k0 / (2.0 * kPi), 0.0} + minus_i_quarter * h0;
}

double regularized_cross_section(const ScatteringProblem& p, double eps, RegularizationMode mode) {
    const double mod2 = regularized_bracket(p, eps, mode).modulus_squared();
    if (!(mod2 > 0.0)) {
        throw DegenerateBracketError("regularized bracket vanishes (mode " +
                                     std::string(to_string(mode)) + ", eps " +
                                     std::to_string(eps) + ")");
    }
    return 1.0 / (4.0 * p.k()) / mod2;
}

LimitEstimate limit_extrapolate(const ScatteringProblem& p, const EpsilonSchedule& schedule,
                                RegularizationMode mode) {
    LimitEstimate est;
    for (double eps : schedule.values()) {
        est.samples.push_back({eps, regularized_cross_section(p, eps, mode)});
    }
    const auto n = est.samples.size();
    const double last = est.samples[n - 1].sigma;
    const double prev = est.samples[n - 2].sigma;
    est.sigma_limit = last;
    est.error_estimate = std::abs(last - prev);
    est.converged = est.error_estimate <= kConvergenceTolerance * std::abs(last);

    if (n >= 3) {
        const double d_older = std::abs(prev - est.samples[n - 3].sigma);
        const double d_newer = est.error_estimate;
        if (d_older > 0.0 && d_newer > 0.0) {
            est.observed_order = std::log(d_older / d_newer) / std::log(1.0 / schedule.factor());
        }
    }
    return est;
}

double mead_godines_wrong_limit(const ScatteringProblem& p) {
    const double lx = log_x(p);
    if (lx == 0.0) {
        throw SingularInputError("log-only limit diverges at resonance (ln x = 0)");
    }
    return kPi * kPi / (p.k() * lx * lx);
}

double wrong_limit_ratio(const ScatteringProblem& p) {
    const double lx = log_x(p);
    if (lx == 0.0) {
        throw SingularInputError("log-only limit diverges at resonance (ln x = 0)");
    }
    return (kPi * kPi + 4.0 * lx * lx) / (4.0 * lx * lx);
}

}  // namespace deltascat
