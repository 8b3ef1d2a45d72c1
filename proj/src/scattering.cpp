#include "deltascat/scattering.hpp"

#include <cmath>
#include <string>

#include "deltascat/errors.hpp"
#include "deltascat/special_functions.hpp"

namespace deltascat {

ScatteringProblem::ScatteringProblem(double k, double e0) : k_(k), e0_(e0) {
    if (!std::isfinite(k) || !(k > 0.0)) {
        throw ValidationError("k must be finite and positive, got " + std::to_string(k));
    }
    if (!std::isfinite(e0) || !(e0 < 0.0)) {
        throw ValidationError("e0 must be finite and negative (a bound state), got " +
                              std::to_string(e0));
    }
}

double ScatteringProblem::mu() const noexcept { return std::sqrt(-e0_); }

double ScatteringProblem::x() const noexcept { return mu() / k_; }

double bound_state_scale(const ScatteringProblem& p) { return p.mu(); }

double log_x(const ScatteringProblem& p) { return std::log(p.x()); }

CrossSection cross_section_closed(const ScatteringProblem& p) {
    const double lx = log_x(p);
    const double pi2 = kPi * kPi;
    // Written as (4/k) * ratio with ratio <= 1 so that sigma*k never exceeds 4
    // by more than the final rounding.
    const double ratio = pi2 / (pi2 + 4.0 * lx * lx);
    return {4.0 / p.k() * ratio};
}

Tangent s_wave_tangent(const ScatteringProblem& p) {
    const double lx = log_x(p);
    if (lx == 0.0) return InfiniteTangent{};
    return -kPi / (2.0 * lx);
}

PhaseShift s_wave_phase_shift(const ScatteringProblem& p) {
    const Tangent t = s_wave_tangent(p);
    if (std::holds_alternative<InfiniteTangent>(t)) return {0.5 * kPi};
    double delta = std::atan(std::get<double>(t));
    if (delta < 0.0) delta += kPi;
    return {delta};
}

double sin_sq_from_tan(double t) noexcept {
    if (std::abs(t) > 1.0) {
        // Same identity in 1/t, which stays finite when t*t would overflow.
        const double inv = 1.0 / t;
        return 1.0 / (1.0 + inv * inv);
    }
    const double t2 = t * t;
    return t2 / (1.0 + t2);
}

double sin_sq_from_tan(InfiniteTangent) noexcept { return 1.0; }

double sin_sq_from_tan(const Tangent& t) noexcept {
    return std::visit([](auto v) { return sin_sq_from_tan(v); }, t);
}

CrossSection cross_section_partial_wave(const ScatteringProblem& p, int m_max) {
    if (m_max < 0) throw ValidationError("m_max must be non-negative");
    double channel_sum = 0.0;
    for (int m = -m_max; m <= m_max; ++m) {
        // delta_m = 0 for m != 0: tan = 0 contributes sin^2 = 0.
        channel_sum += (m == 0) ? sin_sq_from_tan(s_wave_tangent(p)) : sin_sq_from_tan(0.0);
    }
    return {4.0 / p.k() * channel_sum};
}

}  // namespace deltascat
