#ifndef BOGOAMP_CLOSED_FORMS_HPP
#define BOGOAMP_CLOSED_FORMS_HPP

#include <complex>

namespace bogoamp::closed_forms {

// Analytic input-output results for the canonical amplifier configurations.
// These are an independent route to the same quantities the generic
// scattering path computes; `bogoamp verify` holds the two against each
// other.

/// Conventional amplifier gain curve,
/// G[w] = [(2w/D)^2 + G0] / [(2w/D)^2 + 1] with D = 2 kappa / (sqrt(G0)+1).
double dpa_gain(double g0, double kappa, double omega);

/// Amplified-quadrature amplitude gain sqrt(G0) = (kappa/2 + nu)/(kappa/2 - nu).
double dpa_gain_from_drive(double nu, double kappa, double omega);

/// Drive amplitude that produces a given zero-frequency power gain.
double dpa_drive_for_gain(double g0, double kappa);

/// Effective bandwidth D = 2 kappa / (sqrt(G0) + 1) of the conventional
/// amplifier (full width at half the peak excess gain).
double dpa_bandwidth(double g0, double kappa);

/// Matched detuned amplifier reflection-channel gain,
/// G[w] = [(2w/D')^4 + G0] / [(2w/D')^4 + 1], D' = sqrt(2) kappa.
double bogoliubov_reflection_gain(double g0, double kappa, double omega);

/// Matched two-mode amplifier transmission gain,
/// G[w] = G0 / [1 + (2w/D)^4], D = sqrt(2) kappa.
double bogoliubov_transmission_gain(double g0, double kappa, double omega);

/// Symmetrized output noise of the squeezed quadrature in shot-noise units,
/// with thermal occupation nbar2 on the far port:
/// S[w] = [(2w/D)^4 (1+2 nbar1) + (1+2 nbar2)/G0] / [(2w/D)^4 + 1].
double squeezing_spectrum(double g0, double kappa, double omega,
                          double nbar1 = 0.0, double nbar2 = 0.0);

/// Squeezing bandwidth of the matched two-mode amplifier,
/// D_sq = sqrt(2) kappa (G0 - 2)^{-1/4}.
double squeezing_bandwidth(double g0, double kappa);

/// Balanced-coupling (QND) transmission gain,
/// G[w] = GQ / (1 + 4 w^2/kappa^2)^2 with sqrt(GQ) = 8 g / kappa.
double qnd_gain(double g, double kappa, double omega);

/// QND amplification bandwidth sqrt(sqrt(2) - 1) kappa.
double qnd_bandwidth(double kappa);

/// Added noise referred to the input, (1/2 + nbar) / GQ.
double qnd_added_noise(double g, double kappa, double nbar);

// Reflection and transmission of the two-mode amplifier with asymmetric
// decay rates, in the quadrature basis. Cooperativities C_n = 4 g_n^2 /
// (kappa1 kappa2). The reflection vanishes on resonance when
// C2 - C1 - 1 = 0.
std::complex<double> asym_reflection(double g1, double g2, double kappa1,
                                     double kappa2, double omega, int sign);
std::complex<double> asym_transmission(double g1, double g2, double kappa1,
                                       double kappa2, double omega, int sign);

/// On-resonance reflection magnitude |dC / (dC + 2)|, dC = C2 - C1 - 1.
double asym_reflection_on_resonance(double g1, double g2, double kappa1,
                                    double kappa2);

} // namespace bogoamp::closed_forms

#endif
