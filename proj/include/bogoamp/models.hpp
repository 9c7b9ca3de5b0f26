#ifndef BOGOAMP_MODELS_HPP
#define BOGOAMP_MODELS_HPP

#include "bogoamp/quadratic_model.hpp"

namespace bogoamp {

/// Degenerate parametric amplifier, H = delta a^dag a + (nu/2)(a^dag a^dag + a a).
/// Construction never fails; instability is flagged at scattering time.
struct DpaParams {
    double delta = 0.0;  // pump detuning, >= 0
    double nu = 0.0;     // effective parametric drive amplitude, >= 0
    double kappa = 1.0;  // port coupling, > 0
};

/// Two-mode amplifier combining two-mode squeezing (g1) and conversion (g2),
/// H = G1 d1^dag d2^dag + G2 d1^dag d2 + h.c. with G_n = g_n e^{i phi_n}.
struct OibaParams {
    double g1 = 0.0;
    double g2 = 0.0;
    double kappa1 = 1.0;
    double kappa2 = 1.0;
    double pump_phase1 = 0.0;
    double pump_phase2 = 0.0;
};

/// How to place the Bogoliubov hopping rate when the two decay rates
/// differ. The conditions coincide only for symmetric decay.
enum class MatchCondition {
    impedance,  // Gtilde = sqrt(kappa1 kappa2)/2, zero on-resonance reflection
    imbalance,  // Gtilde = sqrt(kappa+^2 + kappa-^2)/2, matched mode splitting
};

struct DpaMatchingSolution {
    DpaParams params;
    double squeeze_r = 0.0;
    double target_gain_db = 0.0;
};

struct OibaMatchingSolution {
    OibaParams params;
    double squeeze_r = 0.0;
    double target_gain_db = 0.0;
    MatchCondition condition = MatchCondition::impedance;
};

QuadraticModel make_dpa(const DpaParams& p);
QuadraticModel make_oiba(const OibaParams& p);

/// Detuned two-mode squeezing, H = delta (n1 + n2) + g (a1^dag a2^dag + a1 a2).
QuadraticModel make_detuned_two_mode(double delta, double g, double kappa);

/// Balanced gain/conversion point G1 = G2 = g, equivalent to H = 2g X1 X2.
/// Both X-quadratures commute with H; amplitude gain sqrt(GQ) = 8g/kappa.
QuadraticModel make_qnd(double g, double kappa);

/// Optimally detuned single-mode amplifier for a requested power gain:
/// r = ln(G0)/4, delta = (kappa/2) cosh 2r, nu = (kappa/2) sinh 2r, so the
/// Bogoliubov mode energy sqrt(delta^2 - nu^2) equals kappa/2 exactly.
DpaMatchingSolution make_odba_for_gain(double kappa, double target_gain_db);

/// Imbalanced two-mode amplifier for a requested power gain. For symmetric
/// decay both conditions give G2 = (kappa/2) cosh 2r, G1 = (kappa/2) sinh 2r.
OibaMatchingSolution make_oiba_for_gain(
    double kappa1, double kappa2, double target_gain_db,
    MatchCondition condition = MatchCondition::impedance);

// Residual of the matching condition the solution claims to satisfy.
double matching_residual(const DpaMatchingSolution& sol);
double matching_residual(const OibaMatchingSolution& sol);

// Dimensionless drive strengths 4 g_n^2 / (kappa1 kappa2).
std::pair<double, double> cooperativities(const OibaParams& p);

} // namespace bogoamp

#endif
