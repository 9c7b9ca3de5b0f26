#include "bogoamp/closed_forms.hpp"

#include <cmath>

namespace bogoamp::closed_forms {

double dpa_gain(double g0, double kappa, double omega) {
    const double d = dpa_bandwidth(g0, kappa);
    const double x = 2.0 * omega / d;
    return (x * x + g0) / (x * x + 1.0);
}

double dpa_gain_from_drive(double nu, double kappa, double omega) {
    const double up = 0.5 * kappa + nu;
    const double dn = 0.5 * kappa - nu;
    return (omega * omega + up * up) / (omega * omega + dn * dn);
}

double dpa_drive_for_gain(double g0, double kappa) {
    const double amp = std::sqrt(g0);
    return 0.5 * kappa * (amp - 1.0) / (amp + 1.0);
}

double dpa_bandwidth(double g0, double kappa) {
    return 2.0 * kappa / (std::sqrt(g0) + 1.0);
}

double bogoliubov_reflection_gain(double g0, double kappa, double omega) {
    const double x = 2.0 * omega / (std::sqrt(2.0) * kappa);
    const double x4 = x * x * x * x;
    return (x4 + g0) / (x4 + 1.0);
}

double bogoliubov_transmission_gain(double g0, double kappa, double omega) {
    const double x = 2.0 * omega / (std::sqrt(2.0) * kappa);
    const double x4 = x * x * x * x;
    return g0 / (1.0 + x4);
}

double squeezing_spectrum(double g0, double kappa, double omega,
                          double nbar1, double nbar2) {
    const double x = 2.0 * omega / (std::sqrt(2.0) * kappa);
    const double x4 = x * x * x * x;
    return (x4 * (1.0 + 2.0 * nbar1) + (1.0 + 2.0 * nbar2) / g0) / (x4 + 1.0);
}

double squeezing_bandwidth(double g0, double kappa) {
    return std::sqrt(2.0) * kappa * std::pow(g0 - 2.0, -0.25);
}

double qnd_gain(double g, double kappa, double omega) {
    const double amp = 8.0 * g / kappa;
    const double lorentz = 1.0 + 4.0 * omega * omega / (kappa * kappa);
    return amp * amp / (lorentz * lorentz);
}

double qnd_bandwidth(double kappa) {
    return std::sqrt(std::sqrt(2.0) - 1.0) * kappa;
}

double qnd_added_noise(double g, double kappa, double nbar) {
    const double gq = (8.0 * g / kappa) * (8.0 * g / kappa);
    return (0.5 + nbar) / gq;
}

namespace {

using C = std::complex<double>;

struct AsymParts {
    double c1, c2;
    C denom;
};

AsymParts asym_parts(double g1, double g2, double kappa1, double kappa2,
                     double omega) {
    const double c1 = 4.0 * g1 * g1 / (kappa1 * kappa2);
    const double c2 = 4.0 * g2 * g2 / (kappa1 * kappa2);
    const C d1(1.0, -2.0 * omega / kappa1);
    const C d2(1.0, -2.0 * omega / kappa2);
    return {c1, c2, c2 - c1 + d1 * d2};
}

} // namespace

C asym_reflection(double g1, double g2, double kappa1, double kappa2,
                  double omega, int sign) {
    const AsymParts p = asym_parts(g1, g2, kappa1, kappa2, omega);
    // upper sign: port-2 reflection; lower sign: port-1 reflection
    const C u1(1.0, (sign > 0 ? -2.0 : 2.0) * omega / kappa1);
    const C u2(1.0, (sign > 0 ? 2.0 : -2.0) * omega / kappa2);
    return -(p.c1 - p.c2 + u1 * u2) / p.denom;
}

C asym_transmission(double g1, double g2, double kappa1, double kappa2,
                    double omega, int sign) {
    const AsymParts p = asym_parts(g1, g2, kappa1, kappa2, omega);
    const double num = std::sqrt(p.c1) + (sign > 0 ? 1.0 : -1.0) * std::sqrt(p.c2);
    return 2.0 * num / p.denom;
}

double asym_reflection_on_resonance(double g1, double g2, double kappa1,
                                    double kappa2) {
    const double c1 = 4.0 * g1 * g1 / (kappa1 * kappa2);
    const double c2 = 4.0 * g2 * g2 / (kappa1 * kappa2);
    const double dc = c2 - c1 - 1.0;
    return std::abs(dc / (dc + 2.0));
}

} // namespace bogoamp::closed_forms
