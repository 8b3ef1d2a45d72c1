#include "deltascat/special_functions.hpp"

#include <cmath>
#include <string>

#include "deltascat/errors.hpp"

namespace deltascat {
namespace {

constexpr int kMaxTerms = 60;
constexpr double kRelativeCutoff = 1e-16;

void require_series_domain(double z, const char* name) {
    if (!(z > 0.0 && z <= kSeriesDomainMax)) {
        throw DomainError(std::string(name) + ": argument " + std::to_string(z) +
                          " outside the series domain (0, 2]");
    }
}

void require_positive(double z, const char* name) {
    if (!(z > 0.0) || !std::isfinite(z)) {
        throw DomainError(std::string(name) + ": argument must be finite and positive, got " +
                          std::to_string(z));
    }
}

// sum_{m>=0} sign^m (z^2/4)^m / (m!)^2
double ascending_series(double z, double sign) {
    const double q = 0.25 * z * z;
    double term = 1.0;
    double sum = 1.0;
    for (int m = 1; m < kMaxTerms; ++m) {
        term *= sign * q / (static_cast<double>(m) * m);
        sum += term;
        if (std::abs(term) < kRelativeCutoff * std::abs(sum)) break;
    }
    return sum;
}

// sum_{m>=1} sign^(m+1) h_m (z^2/4)^m / (m!)^2, with h_m the m-th harmonic number.
double harmonic_series(double z, double sign) {
    const double q = 0.25 * z * z;
    double power = 1.0;
    double harmonic = 0.0;
    double sum = 0.0;
    for (int m = 1; m <= kMaxTerms; ++m) {
        power *= sign * q / (static_cast<double>(m) * m);
        harmonic += 1.0 / m;
        const double term = sign * harmonic * power;
        sum += term;
        if (std::abs(term) < kRelativeCutoff * std::abs(sum)) break;
    }
    return sum;
}

double log_half_plus_gamma(double z) { return std::log(0.5 * z) + kEulerGamma; }

}  // namespace

double bessel_j0(double z) {
    require_series_domain(z, "bessel_j0");
    return ascending_series(z, -1.0);
}

double bessel_y0(double z) {
    require_series_domain(z, "bessel_y0");
    const double j0 = ascending_series(z, -1.0);
    return (2.0 / kPi) * (log_half_plus_gamma(z) * j0 + harmonic_series(z, -1.0));
}

double bessel_k0(double z) {
    require_series_domain(z, "bessel_k0");
    return -log_half_plus_gamma(z) * ascending_series(z, 1.0) + harmonic_series(z, 1.0);
}

ComplexValue hankel1_0(double z) {
    require_series_domain(z, "hankel1_0");
    return {bessel_j0(z), bessel_y0(z)};
}

double k0_small_z(double z) {
    require_positive(z, "k0_small_z");
    return -std::log(0.5 * z) - kEulerGamma;
}

ComplexValue hankel1_0_small_z(double z) {
    require_positive(z, "hankel1_0_small_z");
    return {1.0, (2.0 / kPi) * log_half_plus_gamma(z)};
}

}  // namespace deltascat
