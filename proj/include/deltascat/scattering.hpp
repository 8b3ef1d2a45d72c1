#pragma once

#include <variant>

// Units throughout: hbar = 2m = 1, so energies are momenta squared and the
// two-dimensional cross section has dimensions of length (1/k).

namespace deltascat {

/// A particle of momentum k scattering off an attractive 2D delta potential
/// whose single bound state sits at energy e0 < 0.
class ScatteringProblem {
public:
    /// Throws ValidationError unless k > 0 and e0 < 0, both finite.
    ScatteringProblem(double k, double e0);

    [[nodiscard]] double k() const noexcept { return k_; }
    [[nodiscard]] double e0() const noexcept { return e0_; }
    /// mu = sqrt(-e0)
    [[nodiscard]] double mu() const noexcept;
    /// x = mu / k
    [[nodiscard]] double x() const noexcept;

private:
    double k_;
    double e0_;
};

struct CrossSection {
    double sigma;
};

/// s-wave phase shift in radians, normalized to (0, pi).
struct PhaseShift {
    double delta0;
};

/// Marker for tan(delta) = +-infinity, i.e. delta = pi/2.
struct InfiniteTangent {
    friend constexpr bool operator==(InfiniteTangent, InfiniteTangent) = default;
};
using Tangent = std::variant<double, InfiniteTangent>;

[[nodiscard]] double bound_state_scale(const ScatteringProblem& p);
[[nodiscard]] double log_x(const ScatteringProblem& p);

/// sigma = 4 pi^2 / (k [pi^2 + 4 (ln x)^2])
[[nodiscard]] CrossSection cross_section_closed(const ScatteringProblem& p);

/// tan(delta0) = -pi / (2 ln x); InfiniteTangent at ln x == 0.
[[nodiscard]] Tangent s_wave_tangent(const ScatteringProblem& p);

[[nodiscard]] PhaseShift s_wave_phase_shift(const ScatteringProblem& p);

/// sin^2 from tan via t^2 / (1 + t^2); exactly 1 for InfiniteTangent.
[[nodiscard]] double sin_sq_from_tan(double t) noexcept;
[[nodiscard]] double sin_sq_from_tan(InfiniteTangent) noexcept;
[[nodiscard]] double sin_sq_from_tan(const Tangent& t) noexcept;

/// (4/k) sum_{m=-m_max}^{m_max} sin^2(delta_m). Only m = 0 carries a
/// nonzero shift for a zero-range potential, so the result does not depend
/// on m_max.
[[nodiscard]] CrossSection cross_section_partial_wave(const ScatteringProblem& p, int m_max);

}  // namespace deltascat
