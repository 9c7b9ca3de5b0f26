#include "bogoamp/depletion.hpp"

#include <algorithm>
#include <cmath>

#include "bogoamp/models.hpp"

namespace bogoamp {

namespace {

constexpr int kMaxIterations = 10000;
constexpr double kRelTol = 1e-12;
constexpr double kRelaxation = 0.5;  // plain iteration oscillates near compression

void validate(const PumpParams& p) {
    if (!(p.gamma1 > 0.0) || !(p.gamma2 > 0.0) || !(p.g1 > 0.0) ||
        !(p.g2 > 0.0) || !(p.kappa > 0.0)) {
        throw StructuralError("pump parameters must be positive");
    }
}

double power_gain_db(double g_linear) { return 10.0 * std::log10(g_linear); }

// Effective power gain of the depleted model, read off the scattering of
// a model built from the effective couplings: transmission channel for
// the two-pump scheme, reflection channel for the single-pump amplifier.
double effective_gain(const PumpParams& p, std::pair<double, double> c_eff,
                      DriveScheme scheme) {
    const double g1 = 0.5 * p.kappa * std::sqrt(std::max(0.0, c_eff.first));
    const double g2 = 0.5 * p.kappa * std::sqrt(std::max(0.0, c_eff.second));
    const QuadraticModel model = make_oiba({g1, g2, p.kappa, p.kappa});
    if (scheme == DriveScheme::two_pump) {
        return std::norm(transfer_element(model, {{1, 0.0}, {0, M_PI / 2.0}}, 0.0));
    }
    return std::norm(transfer_element(model, {{0, 0.0}, {0, 0.0}}, 0.0));
}

} // namespace

DriveSetup derive_drive(const PumpParams& p, DriveScheme scheme) {
    validate(p);
    const double g0 = std::pow(10.0, p.target_gain_db / 10.0);
    DriveSetup setup;
    if (scheme == DriveScheme::two_pump) {
        const double r = std::log(g0) / 4.0;
        const double sh = std::sinh(2.0 * r), ch = std::cosh(2.0 * r);
        setup.c0 = {sh * sh, ch * ch};
    } else {
        // reflection gain sqrt(G0) = (1 + C)/(1 - C)
        const double amp = std::sqrt(g0);
        setup.c0 = {(amp - 1.0) / (amp + 1.0), 0.0};
    }
    const double cap1 = 0.5 * p.kappa * std::sqrt(setup.c0.first);
    const double cap2 = 0.5 * p.kappa * std::sqrt(setup.c0.second);
    // pump input photon flux |a_in|^2 sustaining G_n = g_n <a_n>,
    // <a_n> = -sqrt(gamma) a_in / (gamma/2) in steady state
    setup.pump_photons = {p.gamma1 * cap1 * cap1 / (4.0 * p.g1 * p.g1),
                          p.gamma2 * cap2 * cap2 / (4.0 * p.g2 * p.g2)};
    return setup;
}

EffectiveRates effective_rates(const PumpParams& p, const SignalInput& s,
                               std::pair<double, double> c_eff,
                               DriveScheme scheme) {
    validate(p);
    const double c1 = c_eff.first, c2 = c_eff.second;
    if (c1 < 0.0 || c2 < 0.0) throw SolverError("cooperativities must be non-negative");
    if (c2 > 0.0 && c1 > c2) {
        throw SolverError("unstable regime: squeezing cooperativity exceeds conversion");
    }
    if (c2 == 0.0 && c1 >= 1.0) {
        throw SolverError("unstable regime: single-pump drive at or past threshold");
    }
    const DriveSetup setup = derive_drive(p, scheme);
    const double n1 = setup.pump_photons.first;
    const double n2 = setup.pump_photons.second;

    const double cp = std::sqrt(c2) + std::sqrt(c1);
    const double cm = std::sqrt(c2) - std::sqrt(c1);
    const double hold = 1.0 + cp * cm;
    const double den = hold * hold;
    const double x2 = s.x_in * s.x_in;
    const double p2 = s.p_in * s.p_in;

    EffectiveRates rates;
    rates.gamma_vac = (2.0 * p.g1 * p.g1 / p.kappa) / hold;
    rates.gamma_eff.first =
        0.5 * p.gamma1 * std::sqrt(c1) / den * (x2 / n1 * cp - p2 / n1 * cm) +
        rates.gamma_vac;
    if (n2 > 0.0) {
        // minus sign for an input in cavity 1, plus for cavity 2
        const double sign = (s.input_port == InputPort::cavity1) ? -1.0 : 1.0;
        rates.gamma_eff.second =
            sign * 0.5 * p.gamma2 * std::sqrt(c2) / den * (x2 / n2 * cp + p2 / n2 * cm);
    } else {
        rates.gamma_eff.second = 0.0;
    }
    // frequency shifts need signal in both quadratures at once
    const double cross = std::sqrt(c1 * c2) / den * s.x_in * s.p_in;
    rates.omega_eff.first = 0.5 * p.gamma1 * cross / n1;
    rates.omega_eff.second = (n2 > 0.0) ? -0.5 * p.gamma2 * cross / n2 : 0.0;
    return rates;
}

DepletionSolution solve_selfconsistent(const PumpParams& p, const SignalInput& s,
                                       DriveScheme scheme) {
    const DriveSetup setup = derive_drive(p, scheme);
    DepletionSolution sol;
    sol.pump_photons = setup.pump_photons;
    std::pair<double, double> c_eff = setup.c0;
    EffectiveRates rates;
    for (int it = 1; it <= kMaxIterations; ++it) {
        sol.iterations = it;
        rates = effective_rates(p, s, c_eff, scheme);
        const double gbar1 = rates.gamma_eff.first / p.gamma1;
        const double gbar2 = rates.gamma_eff.second / p.gamma2;
        const double prop1 = setup.c0.first / ((1.0 + gbar1) * (1.0 + gbar1));
        const double prop2 = setup.c0.second / ((1.0 + gbar2) * (1.0 + gbar2));
        // convergence measured on the undamped fixed-point residual
        const double rel1 = std::abs(prop1 - c_eff.first) / std::max(c_eff.first, 1e-300);
        const double rel2 = (setup.c0.second > 0.0)
                ? std::abs(prop2 - c_eff.second) / std::max(c_eff.second, 1e-300)
                : 0.0;
        c_eff = {kRelaxation * prop1 + (1.0 - kRelaxation) * c_eff.first,
                 kRelaxation * prop2 + (1.0 - kRelaxation) * c_eff.second};
        if (std::max(rel1, rel2) < kRelTol) {
            sol.converged = true;
            break;
        }
    }
    sol.gamma_eff = rates.gamma_eff;
    sol.omega_eff = rates.omega_eff;
    sol.gamma_vac = rates.gamma_vac;
    sol.c_eff = c_eff;
    sol.chi = {setup.c0.first > 0.0 ? c_eff.first / setup.c0.first : 1.0,
               setup.c0.second > 0.0 ? c_eff.second / setup.c0.second : 1.0};
    sol.delta_c = c_eff.second - c_eff.first - 1.0;
    sol.g_eff = effective_gain(p, c_eff, scheme);
    sol.g_eff_db = power_gain_db(sol.g_eff);
    return sol;
}

double saturation_law_pa(double c, double gamma_bar_eff) {
    if (c < 0.0) throw StructuralError("cooperativity must be non-negative");
    const double chi_inv = (1.0 + gamma_bar_eff) * (1.0 + gamma_bar_eff);
    if (c * (1.0 / chi_inv) >= 1.0) {
        throw SolverError("depleted past instability: chi * C >= 1");
    }
    const double sqrt_gain = (1.0 + c) / (1.0 - c);
    return (1.0 / sqrt_gain) * (chi_inv + c) / (chi_inv - c);
}

double saturation_law_oiba(double gamma_bar_eff) {
    if (gamma_bar_eff < 0.0) throw StructuralError("rate must be non-negative");
    const double chi = 1.0 / ((1.0 + gamma_bar_eff) * (1.0 + gamma_bar_eff));
    return 2.0 * std::sqrt(chi) / (chi + 1.0);
}

CompressionResult compression_point(const PumpParams& p, const SignalInput& direction,
                                    DriveScheme scheme) {
    validate(p);
    if (!(p.target_gain_db > 1.0)) {
        throw NoAmplificationError("no compression measurable: target gain at or below 1 dB");
    }
    const DriveSetup setup = derive_drive(p, scheme);
    const double n_ref = setup.pump_photons.first;  // gain-pump photon scale
    const double norm = std::hypot(direction.x_in, direction.p_in);
    const double ux = (norm > 0.0) ? direction.x_in / norm : 1.0;
    const double up = (norm > 0.0) ? direction.p_in / norm : 0.0;

    auto gain_at = [&](double x_rel) {
        const double amplitude = std::sqrt(x_rel * n_ref);
        SignalInput s{ux * amplitude, up * amplitude, direction.input_port};
        DepletionSolution sol = solve_selfconsistent(p, s, scheme);
        if (!sol.converged) {
            throw SolverError("depletion solver did not converge inside the bracket");
        }
        return std::pair<double, DepletionSolution>(sol.g_eff_db, sol);
    };

    const double target = p.target_gain_db - 1.0;
    double lo = 1e-6, hi = 1e2;
    int guard = 0;
    while (gain_at(lo).first < target) {
        lo *= 0.1;
        if (++guard > 60) throw SolverError("compression bracket lower end not found");
    }
    guard = 0;
    while (gain_at(hi).first > target) {
        hi *= 10.0;
        if (++guard > 60) throw SolverError("compression bracket upper end not found");
    }
    for (int i = 0; i < 200 && hi / lo > 1.0 + 1e-12; ++i) {
        const double mid = std::sqrt(lo * hi);
        (gain_at(mid).first > target ? lo : hi) = mid;
    }
    CompressionResult result;
    result.input_power_rel = std::sqrt(lo * hi);
    result.input_power_abs = result.input_power_rel * n_ref;
    auto [gdb, sol] = gain_at(result.input_power_rel);
    result.gain_db = gdb;
    result.solution = sol;
    return result;
}

} // namespace bogoamp
