#pragma once

// Order-zero Bessel, Neumann, modified Bessel and Hankel functions on the
// small-argument domain 0 < z <= 2, evaluated by their ascending series,
// together with the two-term logarithmic forms valid as z -> 0.

namespace deltascat {

inline constexpr double kEulerGamma = 0.577215664901532860606512090082402431;
inline constexpr double kPi = 3.141592653589793238462643383279502884;

/// Largest argument accepted by the series evaluators.
inline constexpr double kSeriesDomainMax = 2.0;

struct ComplexValue {
    double re = 0.0;
    double im = 0.0;

    [[nodiscard]] constexpr double modulus_squared() const noexcept { return re * re + im * im; }

    friend constexpr ComplexValue operator+(ComplexValue a, ComplexValue b) noexcept {
        return {a.re + b.re, a.im + b.im};
    }
    friend constexpr ComplexValue operator-(ComplexValue a, ComplexValue b) noexcept {
        return {a.re - b.re, a.im - b.im};
    }
    friend constexpr ComplexValue operator*(ComplexValue a, ComplexValue b) noexcept {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend constexpr ComplexValue operator*(double s, ComplexValue a) noexcept {
        return {s * a.re, s * a.im};
    }
    friend constexpr bool operator==(ComplexValue, ComplexValue) = default;
};

/// J0(z). Throws DomainError unless 0 < z <= 2.
[[nodiscard]] double bessel_j0(double z);

/// Y0(z) = N0(z), diverging like (2/pi) ln z as z -> 0+. Same domain as bessel_j0.
[[nodiscard]] double bessel_y0(double z);

/// K0(z), positive and strictly decreasing. Same domain as bessel_j0.
[[nodiscard]] double bessel_k0(double z);

/// H0^(1)(z) = J0(z) + i Y0(z); components are exactly bessel_j0 and bessel_y0.
[[nodiscard]] ComplexValue hankel1_0(double z);

/// -ln(z/2) - gamma. Defined for every z > 0.
[[nodiscard]] double k0_small_z(double z);

/// 1 + (2i/pi)(ln(z/2) + gamma). Defined for every z > 0.
[[nodiscard]] ComplexValue hankel1_0_small_z(double z);

}  // namespace deltascat
