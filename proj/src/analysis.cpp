#include "bogoamp/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "bogoamp/sweep.hpp"

namespace bogoamp {

std::vector<double> default_omega_grid(double kappa, int points, double span) {
    if (points < 2) throw StructuralError("omega grid needs at least two points");
    std::vector<double> grid(points);
    const double lo = -span * kappa, hi = span * kappa;
    for (int i = 0; i < points; ++i) {
        grid[i] = lo + (hi - lo) * static_cast<double>(i) / (points - 1);
    }
    return grid;
}

GainProfile gain_profile(const QuadraticModel& model, const Selector& selector,
                         const std::vector<double>& omega_grid) {
    for (int mode : {selector.input.mode, selector.output.mode}) {
        if (mode < 0 || mode >= model.n_modes()) {
            throw StructuralError("selector mode index out of range");
        }
    }
    GainProfile profile;
    profile.omegas = omega_grid;
    profile.source = selector;
    profile.kappa_ref = model.kappas()[0];
    profile.evaluate = [model, selector](double w) {
        return std::norm(transfer_element(model, selector, w));
    };
    profile.gains = parallel_map<double>(omega_grid, profile.evaluate);
    return profile;
}

namespace {

// Refines a level crossing bracketed by a and b (either orientation).
double bisect_crossing(const std::function<double(double)>& f, double a,
                       double b, double level, double scale) {
    double lo = std::min(a, b), hi = std::max(a, b);
    const bool lo_above = f(lo) > level;
    for (int i = 0; i < 200 && (hi - lo) > 1e-12 * scale; ++i) {
        const double mid = 0.5 * (lo + hi);
        if ((f(mid) > level) == lo_above) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double fit_loglog_slope(const std::function<double(double)>& f, double g0,
                        double kappa) {
    // log-log regression of g0 - G[w] over one decade; small enough to sit
    // in the leading-order regime, large enough to dodge cancellation.
    const int n = 13;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int used = 0;
    for (int i = 0; i < n; ++i) {
        const double w = kappa * std::pow(10.0, -3.0 + static_cast<double>(i) / (n - 1));
        const double drop = g0 - f(w);
        if (drop <= 0.0) continue;
        const double x = std::log(w), y = std::log(drop);
        sx += x; sy += y; sxx += x * x; sxy += x * y;
        ++used;
    }
    if (used < 3) throw GridError("gain profile too flat to fit a flatness exponent");
    return (used * sxy - sx * sy) / (used * sxx - sx * sx);
}

} // namespace

BandwidthReport fwhm_bandwidth(const GainProfile& profile) {
    if (!profile.evaluate) throw StructuralError("profile carries no evaluator");
    BandwidthReport report;
    report.g0 = profile.evaluate(0.0);
    if (report.g0 <= 1.0) {
        throw NoAmplificationError("no amplification: zero-frequency gain <= 1");
    }
    // Far-detuned baseline: 1 for reflection-type channels, 0 for
    // transmission-type ones. Probed instead of assumed so one extractor
    // serves every model.
    const double w_far = 1e7 * std::max(profile.kappa_ref,
                                        std::abs(profile.omegas.back()));
    const double floor = profile.evaluate(w_far);
    const double level = floor + 0.5 * (report.g0 - floor);

    const auto& ws = profile.omegas;
    const auto& gs = profile.gains;
    const std::size_t n = ws.size();
    std::size_t peak = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(ws[i]) < std::abs(ws[peak])) peak = i;
    }
    // bracketing grid points on each side of the peak
    std::size_t right = peak;
    while (right + 1 < n && gs[right + 1] > level) ++right;
    std::size_t left = peak;
    while (left > 0 && gs[left - 1] > level) --left;
    if (right + 1 >= n || left == 0) {
        throw GridError("grid too narrow: half maximum not bracketed on both sides");
    }
    const double scale = std::max(profile.kappa_ref, 1e-300);
    const double w_hi =
        bisect_crossing(profile.evaluate, ws[right], ws[right + 1], level, scale);
    const double w_lo =
        bisect_crossing(profile.evaluate, ws[left], ws[left - 1], level, scale);
    report.fwhm = w_hi - w_lo;
    report.flatness_exponent =
        fit_loglog_slope(profile.evaluate, report.g0, profile.kappa_ref);
    return report;
}

SqueezeSpectrum squeezing_spectrum(const QuadraticModel& model,
                                   const std::vector<double>& omega_grid,
                                   PortQuadrature quadrature) {
    SqueezeSpectrum spectrum;
    spectrum.quadrature = quadrature;
    spectrum.kappa_ref = model.kappas()[0];
    spectrum.evaluate = [model, quadrature](double w) {
        return output_spectrum(model, quadrature, w).value;
    };
    const std::vector<double> values =
        parallel_map<double>(omega_grid, spectrum.evaluate);
    spectrum.points.resize(omega_grid.size());
    for (std::size_t i = 0; i < omega_grid.size(); ++i) {
        spectrum.points[i] = NoiseSpectrumPoint{omega_grid[i], values[i]};
    }
    return spectrum;
}

double squeezing_bandwidth(const SqueezeSpectrum& spectrum) {
    if (!spectrum.evaluate) throw StructuralError("spectrum carries no evaluator");
    const double s0 = spectrum.evaluate(0.0);
    if (s0 >= 0.5) {
        throw NotSqueezedError("not squeezed: on-resonance noise is above half shot noise");
    }
    // 3 dB degradation of the on-resonance squeezing
    const double level = 2.0 * s0;
    double hi = spectrum.kappa_ref;
    double lo = 0.0;
    int guard = 0;
    while (spectrum.evaluate(hi) < level) {
        lo = hi;
        hi *= 2.0;
        if (++guard > 200) throw GridError("squeezing never degrades by 3 dB");
    }
    const double w_edge = [&] {
        double a = lo, b = hi;
        for (int i = 0; i < 200 && (b - a) > 1e-12 * spectrum.kappa_ref; ++i) {
            const double mid = 0.5 * (a + b);
            (spectrum.evaluate(mid) < level ? a : b) = mid;
        }
        return 0.5 * (a + b);
    }();
    return 2.0 * w_edge;  // full width, both sides of resonance
}

AddedNoiseReport added_noise(const QuadraticModel& model, const Selector& selector) {
    AddedNoiseReport report;
    report.gain = std::norm(transfer_element(model, selector, 0.0));
    if (report.gain <= 1.0) {
        throw NoAmplificationError("no amplification on the selected channel");
    }
    // Absolute units: vacuum is 1/2 per port quadrature.
    const double s_out =
        0.5 * output_spectrum(model, selector.output, 0.0).value;
    const double n_in = model.thermal_occupations()[selector.input.mode];
    report.added_photons = s_out / report.gain - (n_in + 0.5);
    // Phase-sensitive channels reach zero; phase-preserving ones are
    // limited by the half-quantum of the vacuum entering elsewhere.
    report.quantum_limited =
        report.added_photons <= 0.5 / report.gain * (1.0 + 1e-9) + 1e-12;
    return report;
}

double purity_occupancy(const QuadraticModel& model, double n2_thermal) {
    if (model.n_modes() != 2) {
        throw StructuralError("output purity is defined for two-mode models");
    }
    std::vector<double> nbar = model.thermal_occupations();
    nbar[1] = n2_thermal;
    const QuadraticModel thermal = model.with_thermal_occupations(nbar);
    const double sx = 0.5 * output_spectrum(thermal, {0, 0.0}, 0.0).value;
    const double sp = 0.5 * output_spectrum(thermal, {0, M_PI / 2.0}, 0.0).value;
    return std::sqrt(sx * sp) - 0.5;
}

double reflection_on_resonance(const QuadraticModel& model) {
    return std::abs(transfer_element(model, {{0, 0.0}, {0, 0.0}}, 0.0));
}

} // namespace bogoamp
