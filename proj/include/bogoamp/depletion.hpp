#ifndef BOGOAMP_DEPLETION_HPP
#define BOGOAMP_DEPLETION_HPP

#include <utility>

#include "bogoamp/errors.hpp"

namespace bogoamp {

/// Mean-field model of the two pump modes feeding the gain (g1) and
/// conversion (g2) processes. target_gain_db fixes the undepleted
/// cooperativities and the pump photon scale n_in.
struct PumpParams {
    double gamma1 = 12.0;  // pump-mode damping rates
    double gamma2 = 12.0;
    double g1 = 0.014;     // 3-wave coupling rates
    double g2 = 0.014;
    double kappa = 1.0;    // signal/idler decay
    double target_gain_db = 20.0;
};

enum class InputPort { cavity1, cavity2 };

/// Input quadrature amplitudes in square-root-flux units: x_in^2 and
/// p_in^2 are photon fluxes.
struct SignalInput {
    double x_in = 0.0;
    double p_in = 0.0;
    InputPort input_port = InputPort::cavity2;
};

/// Which parametric processes are driven. single_pump drops the
/// conversion tone (C2 = 0), the conventional amplifier limit.
enum class DriveScheme { two_pump, single_pump };

struct EffectiveRates {
    std::pair<double, double> gamma_eff;  // signal-induced pump damping
    std::pair<double, double> omega_eff;  // pump frequency shifts
    double gamma_vac = 0.0;               // vacuum-fluctuation damping of pump 1
};

struct DepletionSolution {
    std::pair<double, double> gamma_eff{0.0, 0.0};
    std::pair<double, double> omega_eff{0.0, 0.0};
    double gamma_vac = 0.0;
    std::pair<double, double> chi{1.0, 1.0};    // C_eff / C_undepleted
    std::pair<double, double> c_eff{0.0, 0.0};  // effective cooperativities
    std::pair<double, double> pump_photons{0.0, 0.0};  // n_in per pump
    double delta_c = 0.0;     // C2,eff - C1,eff - 1, deviation from matching
    double g_eff = 1.0;       // effective power gain (linear)
    double g_eff_db = 0.0;
    int iterations = 0;
    bool converged = false;
};

struct CompressionResult {
    double input_power_rel = 0.0;  // X_in^2 / n_in at the 1 dB point
    double input_power_abs = 0.0;  // X_in^2 in flux units
    double gain_db = 0.0;          // gain at the located point
    DepletionSolution solution;
};

/// Undepleted cooperativities and pump photon numbers implied by the
/// target gain: C2 = cosh^2 2r, C1 = sinh^2 2r for the two-pump scheme
/// (C2 = 0 and (1+C1)/(1-C1) = sqrt(G) for single pump), with
/// n_in = gamma_n G_n^2 / (4 g_n^2) the squared pump input amplitude that
/// sustains G_n = (kappa/2) sqrt(C_n).
struct DriveSetup {
    std::pair<double, double> c0{0.0, 0.0};
    std::pair<double, double> pump_photons{0.0, 0.0};
};
DriveSetup derive_drive(const PumpParams& p, DriveScheme scheme);

/// One evaluation of the pump backaction rates at given effective
/// cooperativities. Throws SolverError("unstable regime") when the
/// cooperativities describe an unstable configuration.
EffectiveRates effective_rates(const PumpParams& p, const SignalInput& s,
                               std::pair<double, double> c_eff,
                               DriveScheme scheme = DriveScheme::two_pump);

/// Damped fixed-point iteration on the effective cooperativities,
/// C_n,eff = C_n / (1 + gamma_n,eff/gamma_n)^2, relaxation factor 0.5,
/// converged when the relative update drops below 1e-12. A non-converged
/// solution (1e4 iterations) is returned with converged = false.
DepletionSolution solve_selfconsistent(const PumpParams& p, const SignalInput& s,
                                       DriveScheme scheme = DriveScheme::two_pump);

/// Conventional-amplifier gain reduction sqrt(G_eff/G) at cooperativity c
/// and normalized backaction rate gbar: (1/sqrt(G)) (1/chi + c)/(1/chi - c)
/// with chi = (1 + gbar)^-2. Throws SolverError past the instability.
double saturation_law_pa(double c, double gamma_bar_eff);

/// Matched two-mode amplifier gain reduction 2 sqrt(chi) / (chi + 1),
/// approximately 1 - gbar^2/2 for small rates; no gain-factor enhancement.
double saturation_law_oiba(double gamma_bar_eff);

/// Input power at which the effective gain has dropped 1 dB below target,
/// found by bisection over the self-consistent solver. Bracket expands
/// geometrically from [1e-6, 1e2] in units of n_in.
CompressionResult compression_point(const PumpParams& p, const SignalInput& direction,
                                    DriveScheme scheme = DriveScheme::two_pump);

} // namespace bogoamp

#endif
