#include "bogoamp/verification.hpp"

#include <cmath>
#include <complex>
#include <ostream>
#include <random>
#include <sstream>
#include <vector>

#include "bogoamp/analysis.hpp"
#include "bogoamp/closed_forms.hpp"
#include "bogoamp/models.hpp"
#include "bogoamp/quadratic_model.hpp"

namespace bogoamp::verification {

namespace {

namespace cf = bogoamp::closed_forms;

constexpr double kKappa = 1.0;

// Canonical amplified channels used throughout the suite.
const Selector kDpaChannel{{0, -M_PI / 4.0}, {0, -M_PI / 4.0}};
const Selector kOdbaChannel{{0, 0.0}, {0, M_PI / 2.0}};
const Selector kOibaChannel{{1, 0.0}, {0, M_PI / 2.0}};
const Selector kQndChannel{{0, 0.0}, {1, M_PI / 2.0}};

struct Tally {
    bool ok = true;
    double worst = 0.0;
    void track(double err, double tol) {
        worst = std::max(worst, err);
        ok = ok && err < tol;
    }
};

std::string detail(const Tally& t, const char* label) {
    std::ostringstream os;
    os << label << " worst " << t.worst;
    return os.str();
}

double rel_err(double a, double b) {
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

} // namespace

CheckResult check_dpa_gain_law(const Options& opt) {
    // Negative-control hook: shift the analytic reference by 1 ppm.
    const double fudge = opt.perturb_convention ? 1.0 + 1e-6 : 1.0;
    Tally curve;
    for (double nu : {0.1, 0.3, 0.45}) {
        const QuadraticModel model = make_dpa({0.0, nu, kKappa});
        const GainProfile profile =
            gain_profile(model, kDpaChannel, default_omega_grid(kKappa, 201));
        for (std::size_t i = 0; i < profile.omegas.size(); ++i) {
            const double ref =
                fudge * cf::dpa_gain_from_drive(nu, kKappa, profile.omegas[i]);
            curve.track(rel_err(profile.gains[i], ref), 1e-9);
        }
    }
    // gain-bandwidth product at G0 = 1e4
    const double g0 = 1e4;
    const QuadraticModel model =
        make_dpa({0.0, cf::dpa_drive_for_gain(g0, kKappa), kKappa});
    const BandwidthReport bw = fwhm_bandwidth(
        gain_profile(model, kDpaChannel, default_omega_grid(kKappa)));
    const double product = bw.fwhm * std::sqrt(bw.g0);
    const bool product_ok = product >= 1.9 * kKappa && product <= 2.0 * kKappa;

    CheckResult result;
    result.name = "dpa-gain-law";
    result.passed = curve.ok && product_ok;
    std::ostringstream os;
    os << detail(curve, "curve rel err") << "; D*sqrt(G0) = " << product;
    result.detail = os.str();
    return result;
}

CheckResult check_odba(const Options& opt) {
    const double fudge = opt.perturb_convention ? 1.0 + 1e-6 : 1.0;
    Tally gain, width, flat, residual;
    for (double db : {10.0, 20.0, 30.0}) {
        const DpaMatchingSolution sol = make_odba_for_gain(kKappa, db);
        const double g0_target = std::pow(10.0, db / 10.0);
        const QuadraticModel model = make_dpa(sol.params);
        const BandwidthReport bw = fwhm_bandwidth(
            gain_profile(model, kOdbaChannel, default_omega_grid(kKappa)));
        gain.track(rel_err(bw.g0, fudge * g0_target), 1e-9);
        width.track(std::abs(bw.fwhm - std::sqrt(2.0) * kKappa) / (std::sqrt(2.0) * kKappa),
                    0.01);
        flat.track(std::abs(bw.flatness_exponent - 4.0), 0.1);
        residual.track(std::abs(matching_residual(sol)), 1e-12);

        // conventional amplifier at the same gain stays quadratic
        const QuadraticModel dpa =
            make_dpa({0.0, cf::dpa_drive_for_gain(g0_target, kKappa), kKappa});
        const BandwidthReport dpa_bw = fwhm_bandwidth(
            gain_profile(dpa, kDpaChannel, default_omega_grid(kKappa)));
        flat.track(std::abs(dpa_bw.flatness_exponent - 2.0), 0.1);
    }
    CheckResult result;
    result.name = "odba";
    result.passed = gain.ok && width.ok && flat.ok && residual.ok;
    std::ostringstream os;
    os << "gain rel " << gain.worst << ", fwhm rel " << width.worst
       << ", flatness dev " << flat.worst << ", residual " << residual.worst;
    result.detail = os.str();
    return result;
}

CheckResult check_oiba(const Options& opt) {
    const double fudge = opt.perturb_convention ? 1.0 + 1e-6 : 1.0;
    Tally reflection, gain, width, structure;
    for (double db : {10.0, 20.0, 30.0}) {
        const OibaMatchingSolution sol = make_oiba_for_gain(kKappa, kKappa, db);
        const QuadraticModel model = make_oiba(sol.params);
        reflection.track(reflection_on_resonance(model), 1e-10);
        const double g0_target = fudge * std::exp(4.0 * sol.squeeze_r);
        const BandwidthReport bw = fwhm_bandwidth(
            gain_profile(model, kOibaChannel, default_omega_grid(kKappa)));
        gain.track(rel_err(bw.g0, g0_target), 1e-9);
        width.track(std::abs(bw.fwhm - std::sqrt(2.0) * kKappa) / (std::sqrt(2.0) * kKappa),
                    0.01);

        // on-resonance scattering: zero diagonal, +-exp(-+2r) cross pattern
        const Matrix sq = scattering_matrix(model, 0.0).quadrature();
        Matrix expect = Matrix::Zero(4, 4);
        const double e2r = std::exp(2.0 * sol.squeeze_r);
        expect(0, 3) = -1.0 / e2r;
        expect(1, 2) = e2r;
        expect(2, 1) = -1.0 / e2r;
        expect(3, 0) = e2r;
        structure.track((sq - expect).cwiseAbs().maxCoeff(), 1e-9);
    }
    CheckResult result;
    result.name = "oiba";
    result.passed = reflection.ok && gain.ok && width.ok && structure.ok;
    std::ostringstream os;
    os << "refl " << reflection.worst << ", gain rel " << gain.worst
       << ", fwhm rel " << width.worst << ", s(0) dev " << structure.worst;
    result.detail = os.str();
    return result;
}

CheckResult check_symplectic_suite(const Options& opt) {
    std::mt19937 rng(0x5eed);
    auto uniform = [&](double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(rng);
    };
    const double tol = opt.perturb_convention ? 1e-16 : 1e-10;
    Tally sympl, ph;
    const std::vector<double> grid = default_omega_grid(kKappa, 11, 4.0);

    auto exercise = [&](const QuadraticModel& model) {
        const int n = model.n_modes();
        const Matrix t3 = tau3(n), t1 = tau1(n);
        for (double w : grid) {
            const Matrix s = scattering_matrix(model, w).s;
            sympl.track((s * t3 * s.adjoint() - t3).cwiseAbs().maxCoeff(), tol);
            const Matrix s_neg = scattering_matrix(model, -w).s;
            ph.track((s - t1 * s_neg.conjugate() * t1).cwiseAbs().maxCoeff(), tol);
        }
    };

    for (int family = 0; family < 5; ++family) {
        int accepted = 0;
        int guard = 0;
        while (accepted < 25 && ++guard < 4000) {
            QuadraticModel model = [&]() -> QuadraticModel {
                switch (family) {
                    case 0:
                        return make_dpa({uniform(0.0, 3.0), uniform(0.0, 3.0),
                                         uniform(0.5, 2.0)});
                    case 1: {
                        const double db = uniform(1.0, 25.0);
                        return make_dpa(make_odba_for_gain(uniform(0.5, 2.0), db).params);
                    }
                    case 2:
                        return make_oiba({uniform(0.0, 2.0), uniform(0.0, 2.0),
                                          uniform(0.5, 2.0), uniform(0.5, 2.0),
                                          uniform(0.0, 2.0 * M_PI),
                                          uniform(0.0, 2.0 * M_PI)});
                    case 3:
                        return make_qnd(uniform(0.05, 1.5), uniform(0.5, 2.0));
                    default:
                        return make_detuned_two_mode(uniform(0.0, 3.0),
                                                     uniform(0.0, 3.0),
                                                     uniform(0.5, 2.0));
                }
            }();
            if (!stability(model).stable) continue;
            exercise(model);
            ++accepted;
        }
    }
    CheckResult result;
    result.name = "symplectic-suite";
    result.passed = sympl.ok && ph.ok;
    std::ostringstream os;
    os << "symplectic worst " << sympl.worst << ", particle-hole worst " << ph.worst;
    result.detail = os.str();
    return result;
}

CheckResult check_squeezing(const Options& opt) {
    const double fudge = opt.perturb_convention ? 1.0 + 1e-6 : 1.0;
    Tally curve, band, purity;
    for (double g0 : {100.0, 1000.0}) {
        const double db = 10.0 * std::log10(g0);
        const QuadraticModel model =
            make_oiba(make_oiba_for_gain(kKappa, kKappa, db).params);
        const SqueezeSpectrum spectrum =
            squeezing_spectrum(model, default_omega_grid(kKappa));
        for (const NoiseSpectrumPoint& pt : spectrum.points) {
            const double ref = fudge * cf::squeezing_spectrum(g0, kKappa, pt.omega);
            curve.track(rel_err(pt.value, ref), 1e-9);
        }
        const double d_sq = squeezing_bandwidth(spectrum);
        const double asym = std::sqrt(2.0) * kKappa * std::pow(g0, -0.25);
        band.track(std::abs(d_sq - asym) / asym, 0.05);
    }
    const QuadraticModel matched =
        make_oiba(make_oiba_for_gain(kKappa, kKappa, 20.0).params);
    for (double nbar : {0.0, 2.0}) {
        purity.track(std::abs(purity_occupancy(matched, nbar) - nbar), 1e-9);
    }
    CheckResult result;
    result.name = "squeezing";
    result.passed = curve.ok && band.ok && purity.ok;
    std::ostringstream os;
    os << "spectrum rel " << curve.worst << ", bandwidth rel " << band.worst
       << ", purity dev " << purity.worst;
    result.detail = os.str();
    return result;
}

CheckResult check_qnd(const Options& opt) {
    const double fudge = opt.perturb_convention ? 1.0 + 1e-6 : 1.0;
    const double g = 0.8;
    const QuadraticModel model = make_qnd(g, kKappa);
    const double gq = std::pow(8.0 * g / kKappa, 2.0);

    Tally gain, width, noise;
    const BandwidthReport bw =
        fwhm_bandwidth(gain_profile(model, kQndChannel, default_omega_grid(kKappa)));
    gain.track(rel_err(bw.g0, fudge * gq), 1e-9);
    width.track(rel_err(bw.fwhm, cf::qnd_bandwidth(kKappa)), 1e-6);
    for (double nbar : {0.0, 3.0}) {
        const QuadraticModel thermal = model.with_thermal_occupations({0.0, nbar});
        const AddedNoiseReport report = added_noise(thermal, kQndChannel);
        noise.track(rel_err(report.added_photons, cf::qnd_added_noise(g, kKappa, nbar)),
                    1e-9);
    }
    CheckResult result;
    result.name = "qnd";
    result.passed = gain.ok && width.ok && noise.ok;
    std::ostringstream os;
    os << "gain rel " << gain.worst << ", fwhm rel " << width.worst
       << ", added-noise rel " << noise.worst;
    result.detail = os.str();
    return result;
}

CheckResult check_asymmetric_decay(const Options& opt) {
    const double fudge = opt.perturb_convention ? 1.0 + 1e-6 : 1.0;
    Tally forms, reflection;
    bool coincide_ok = true;
    for (double ratio : {1.0, 0.8, 0.5}) {
        const double k1 = kKappa, k2 = ratio * kKappa;
        const OibaMatchingSolution sol =
            make_oiba_for_gain(k1, k2, 20.0, MatchCondition::impedance);
        const QuadraticModel model = make_oiba(sol.params);
        const double g1 = sol.params.g1, g2 = sol.params.g2;
        for (double w : default_omega_grid(kKappa, 41, 3.0)) {
            const Matrix sq = scattering_matrix(model, w).quadrature();
            const Complex r_lo = fudge * cf::asym_reflection(g1, g2, k1, k2, w, -1);
            const Complex r_hi = cf::asym_reflection(g1, g2, k1, k2, w, +1);
            const Complex t_lo = cf::asym_transmission(g1, g2, k1, k2, w, -1);
            const Complex t_hi = cf::asym_transmission(g1, g2, k1, k2, w, +1);
            double err = 0.0;
            err = std::max(err, std::abs(sq(0, 0) - r_lo));
            err = std::max(err, std::abs(sq(1, 1) - r_lo));
            err = std::max(err, std::abs(sq(2, 2) - r_hi));
            err = std::max(err, std::abs(sq(3, 3) - r_hi));
            err = std::max(err, std::abs(sq(0, 3) - t_lo));
            err = std::max(err, std::abs(sq(2, 1) - t_lo));
            err = std::max(err, std::abs(sq(1, 2) - t_hi));
            err = std::max(err, std::abs(sq(3, 0) - t_hi));
            forms.track(err, 1e-9);
        }
        reflection.track(reflection_on_resonance(model), 1e-10);

        const OibaMatchingSolution imb =
            make_oiba_for_gain(k1, k2, 20.0, MatchCondition::imbalance);
        const double residual = std::abs(
            std::hypot(imb.params.g1 - sol.params.g1, imb.params.g2 - sol.params.g2));
        if (ratio == 1.0) {
            coincide_ok = coincide_ok && residual < 1e-12;
        } else {
            coincide_ok = coincide_ok && residual > 1e-3;
        }
    }
    CheckResult result;
    result.name = "asymmetric-decay";
    result.passed = forms.ok && reflection.ok && coincide_ok;
    std::ostringstream os;
    os << "closed-form dev " << forms.worst << ", matched refl " << reflection.worst
       << ", condition split " << (coincide_ok ? "ok" : "violated");
    result.detail = os.str();
    return result;
}

std::vector<CheckResult> run_all(const Options& opt) {
    return {
        check_dpa_gain_law(opt),  check_odba(opt),      check_oiba(opt),
        check_symplectic_suite(opt), check_squeezing(opt), check_qnd(opt),
        check_asymmetric_decay(opt),
    };
}

bool report(const std::vector<CheckResult>& results, std::ostream& os) {
    bool all = true;
    for (const CheckResult& r : results) {
        os << (r.passed ? "PASS" : "FAIL") << "  " << r.name << "  (" << r.detail
           << ")\n";
        all = all && r.passed;
    }
    return all;
}

} // namespace bogoamp::verification
