#ifndef BOGOAMP_ANALYSIS_HPP
#define BOGOAMP_ANALYSIS_HPP

#include <functional>
#include <vector>

#include "bogoamp/quadratic_model.hpp"

namespace bogoamp {

/// Sampled power gain versus signal frequency for one scattering element.
/// Carries a continuous re-evaluator so bandwidth extraction can refine
/// between grid points instead of interpolating samples.
struct GainProfile {
    std::vector<double> omegas;
    std::vector<double> gains;
    Selector source;
    double kappa_ref = 1.0;
    std::function<double(double)> evaluate;  // gain at arbitrary omega
};

struct BandwidthReport {
    double g0 = 0.0;                 // zero-frequency power gain
    double fwhm = 0.0;               // full width at half maximum gain
    double flatness_exponent = 0.0;  // leading exponent of G0 - G[w] near w=0
};

struct AddedNoiseReport {
    double gain = 0.0;
    double added_photons = 0.0;  // input-referred quanta beyond the amplified input
    bool quantum_limited = false;
};

struct SqueezeSpectrum {
    std::vector<NoiseSpectrumPoint> points;
    PortQuadrature quadrature;
    double kappa_ref = 1.0;
    std::function<double(double)> evaluate;  // spectrum at arbitrary omega
};

std::vector<double> default_omega_grid(double kappa, int points = 2001,
                                       double span = 5.0);

/// G[w] = |selected quadrature-basis scattering element|^2 per grid point.
GainProfile gain_profile(const QuadraticModel& model, const Selector& selector,
                         const std::vector<double>& omega_grid);

/// Half maximum is measured above the far-detuned baseline of the profile,
/// located by bracketing on the grid and bisection on the continuous curve.
/// The flatness exponent is a log-log fit of G0 - G[w] over the decade
/// [1e-3, 1e-2] kappa.
BandwidthReport fwhm_bandwidth(const GainProfile& profile);

/// Output noise spectrum of the squeezed quadrature (X of the given port).
SqueezeSpectrum squeezing_spectrum(const QuadraticModel& model,
                                   const std::vector<double>& omega_grid,
                                   PortQuadrature quadrature = {0, 0.0});

/// Full width of the band where squeezing stays within 3 dB of the
/// on-resonance value. Throws NotSqueezedError when the spectrum never
/// drops below half the shot noise.
double squeezing_bandwidth(const SqueezeSpectrum& spectrum);

/// Input-referred added noise of the selected amplification channel at
/// zero frequency: output spectrum minus the amplified input-port
/// fluctuations, divided by the gain.
AddedNoiseReport added_noise(const QuadraticModel& model, const Selector& selector);

/// Effective thermal occupancy of the port-1 output when port 2 carries a
/// bath with occupation n2_thermal:
/// n_eff = sqrt(S_X1[0] S_P1[0]) - 1/2 in absolute units.
double purity_occupancy(const QuadraticModel& model, double n2_thermal);

/// |on-resonance reflection| of port 1 (X1 <- X1 element at w = 0).
double reflection_on_resonance(const QuadraticModel& model);

} // namespace bogoamp

#endif
