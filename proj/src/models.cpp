#include "bogoamp/models.hpp"

#include <cmath>

namespace bogoamp {

namespace {

void require_positive(double value, const char* name) {
    if (!(value > 0.0)) {
        throw StructuralError(std::string(name) + " must be positive");
    }
}

} // namespace

QuadraticModel make_dpa(const DpaParams& p) {
    require_positive(p.kappa, "kappa");
    if (p.delta < 0.0 || p.nu < 0.0) {
        throw StructuralError("dpa parameters must be non-negative");
    }
    Matrix m(2, 2);
    m << p.delta, p.nu, p.nu, p.delta;
    return QuadraticModel(m, {p.kappa});
}

QuadraticModel make_oiba(const OibaParams& p) {
    require_positive(p.kappa1, "kappa1");
    require_positive(p.kappa2, "kappa2");
    if (p.g1 < 0.0 || p.g2 < 0.0) {
        throw StructuralError("coupling rates must be non-negative");
    }
    const Complex g1 = p.g1 * std::exp(Complex(0.0, p.pump_phase1));
    const Complex g2 = p.g2 * std::exp(Complex(0.0, p.pump_phase2));
    Matrix m = Matrix::Zero(4, 4);
    // beam-splitter block (adjoint pair) and squeezing block (symmetric pair)
    m(0, 1) = g2;
    m(1, 0) = std::conj(g2);
    m(2, 3) = std::conj(g2);
    m(3, 2) = g2;
    m(0, 3) = g1;
    m(1, 2) = g1;
    m(2, 1) = std::conj(g1);
    m(3, 0) = std::conj(g1);
    return QuadraticModel(m, {p.kappa1, p.kappa2});
}

QuadraticModel make_detuned_two_mode(double delta, double g, double kappa) {
    require_positive(kappa, "kappa");
    if (delta < 0.0 || g < 0.0) {
        throw StructuralError("parameters must be non-negative");
    }
    Matrix m = Matrix::Zero(4, 4);
    m(0, 0) = m(1, 1) = m(2, 2) = m(3, 3) = delta;
    m(0, 3) = m(1, 2) = m(2, 1) = m(3, 0) = g;
    return QuadraticModel(m, {kappa, kappa});
}

QuadraticModel make_qnd(double g, double kappa) {
    return make_oiba({g, g, kappa, kappa});
}

namespace {

double squeeze_for_gain_db(double target_gain_db) {
    if (!(target_gain_db >= 0.0)) {
        throw StructuralError("target gain must be non-negative (in dB)");
    }
    const double g0 = std::pow(10.0, target_gain_db / 10.0);
    return std::log(g0) / 4.0;
}

} // namespace

DpaMatchingSolution make_odba_for_gain(double kappa, double target_gain_db) {
    require_positive(kappa, "kappa");
    const double r = squeeze_for_gain_db(target_gain_db);
    DpaMatchingSolution sol;
    sol.squeeze_r = r;
    sol.target_gain_db = target_gain_db;
    sol.params.kappa = kappa;
    sol.params.delta = 0.5 * kappa * std::cosh(2.0 * r);
    sol.params.nu = 0.5 * kappa * std::sinh(2.0 * r);
    return sol;
}

OibaMatchingSolution make_oiba_for_gain(double kappa1, double kappa2,
                                        double target_gain_db,
                                        MatchCondition condition) {
    require_positive(kappa1, "kappa1");
    require_positive(kappa2, "kappa2");
    const double r = squeeze_for_gain_db(target_gain_db);
    const double kp = 0.5 * (kappa1 + kappa2);
    const double km = 0.5 * (kappa1 - kappa2);
    const double g_tilde = (condition == MatchCondition::impedance)
                               ? 0.5 * std::sqrt(kappa1 * kappa2)
                               : 0.5 * std::sqrt(kp * kp + km * km);
    OibaMatchingSolution sol;
    sol.squeeze_r = r;
    sol.target_gain_db = target_gain_db;
    sol.condition = condition;
    sol.params.kappa1 = kappa1;
    sol.params.kappa2 = kappa2;
    sol.params.g2 = g_tilde * std::cosh(2.0 * r);
    sol.params.g1 = g_tilde * std::sinh(2.0 * r);
    return sol;
}

double matching_residual(const DpaMatchingSolution& sol) {
    const double d = sol.params.delta, v = sol.params.nu, k = sol.params.kappa;
    return d * d - v * v - 0.25 * k * k;
}

double matching_residual(const OibaMatchingSolution& sol) {
    const double g1 = sol.params.g1, g2 = sol.params.g2;
    const double k1 = sol.params.kappa1, k2 = sol.params.kappa2;
    const double kp = 0.5 * (k1 + k2), km = 0.5 * (k1 - k2);
    const double target = (sol.condition == MatchCondition::impedance)
                              ? 0.25 * k1 * k2
                              : 0.25 * (kp * kp + km * km);
    return g2 * g2 - g1 * g1 - target;
}

std::pair<double, double> cooperativities(const OibaParams& p) {
    const double denom = p.kappa1 * p.kappa2;
    return {4.0 * p.g1 * p.g1 / denom, 4.0 * p.g2 * p.g2 / denom};
}

} // namespace bogoamp
