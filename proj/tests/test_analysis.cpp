#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "bogoamp/analysis.hpp"
#include "bogoamp/closed_forms.hpp"
#include "bogoamp/models.hpp"

using namespace bogoamp;
namespace cf = bogoamp::closed_forms;

namespace {

const double kRoot2 = std::sqrt(2.0);
const Selector kDpaChannel{{0, -M_PI / 4.0}, {0, -M_PI / 4.0}};
const Selector kOdbaChannel{{0, 0.0}, {0, M_PI / 2.0}};
const Selector kOibaChannel{{1, 0.0}, {0, M_PI / 2.0}};
const Selector kQndChannel{{0, 0.0}, {1, M_PI / 2.0}};

QuadraticModel matched_oiba(double gain_db) {
    return make_oiba(make_oiba_for_gain(1.0, 1.0, gain_db).params);
}

} // namespace

TEST_CASE("gain profiles match the analytic curves") {
    const auto grid = default_omega_grid(1.0, 201);

    SUBCASE("resonant single-mode amplifier") {
        for (double nu : {0.1, 0.3, 0.45}) {
            const auto profile =
                gain_profile(make_dpa({0.0, nu, 1.0}), kDpaChannel, grid);
            for (std::size_t i = 0; i < grid.size(); ++i) {
                const double ref = cf::dpa_gain_from_drive(nu, 1.0, grid[i]);
                CHECK(profile.gains[i] == doctest::Approx(ref).epsilon(1e-9));
            }
        }
    }
    SUBCASE("matched two-mode transmission") {
        const auto profile = gain_profile(matched_oiba(20.0), kOibaChannel, grid);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double ref = cf::bogoliubov_transmission_gain(100.0, 1.0, grid[i]);
            CHECK(profile.gains[i] == doctest::Approx(ref).epsilon(1e-9));
        }
    }
    SUBCASE("matched detuned reflection, both quadrature channels combined") {
        const QuadraticModel m = make_dpa(make_odba_for_gain(1.0, 20.0).params);
        for (double w : {-2.0, -0.5, 0.0, 0.7, 3.0}) {
            const Matrix sq = scattering_matrix(m, w).quadrature();
            const double row_sum = std::norm(sq(1, 0)) + std::norm(sq(1, 1));
            CHECK(row_sum ==
                  doctest::Approx(cf::bogoliubov_reflection_gain(100.0, 1.0, w))
                      .epsilon(1e-9));
        }
    }
    SUBCASE("balanced-coupling transmission") {
        const auto profile = gain_profile(make_qnd(0.8, 1.0), kQndChannel, grid);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            CHECK(profile.gains[i] ==
                  doctest::Approx(cf::qnd_gain(0.8, 1.0, grid[i])).epsilon(1e-9));
        }
    }
    SUBCASE("selector out of range") {
        CHECK_THROWS_AS(gain_profile(matched_oiba(10.0), {{3, 0.0}, {0, 0.0}}, grid),
                        StructuralError);
    }
}

TEST_CASE("bandwidth extraction") {
    const auto grid = default_omega_grid(1.0);

    SUBCASE("conventional amplifier: full width 2 kappa / (sqrt(G0)+1)") {
        const QuadraticModel m = make_dpa({0.0, cf::dpa_drive_for_gain(100.0, 1.0), 1.0});
        const auto bw = fwhm_bandwidth(gain_profile(m, kDpaChannel, grid));
        CHECK(bw.g0 == doctest::Approx(100.0).epsilon(1e-9));
        CHECK(bw.fwhm == doctest::Approx(2.0 / 11.0).epsilon(1e-7));
        CHECK(bw.flatness_exponent == doctest::Approx(2.0).epsilon(0.05));
    }
    SUBCASE("gain-bandwidth product approaches 2 kappa from below") {
        double previous = 0.0;
        for (double g0 : {100.0, 1000.0, 10000.0}) {
            const QuadraticModel m =
                make_dpa({0.0, cf::dpa_drive_for_gain(g0, 1.0), 1.0});
            const auto bw = fwhm_bandwidth(gain_profile(m, kDpaChannel, grid));
            const double product = bw.fwhm * std::sqrt(bw.g0);
            CHECK(product > 1.8);
            CHECK(product < 2.0);
            CHECK(product > previous);
            previous = product;
        }
    }
    SUBCASE("matched amplifiers keep sqrt(2) kappa at every gain") {
        double mean = 0.0;
        std::vector<double> widths;
        for (double db : {10.0, 20.0, 30.0}) {
            const auto bw = fwhm_bandwidth(
                gain_profile(matched_oiba(db), kOibaChannel, grid));
            CHECK(bw.fwhm == doctest::Approx(kRoot2).epsilon(1e-6));
            CHECK(bw.flatness_exponent == doctest::Approx(4.0).epsilon(0.025));
            widths.push_back(bw.fwhm);
            mean += bw.fwhm / 3.0;
        }
        double var = 0.0;
        for (double w : widths) var += (w - mean) * (w - mean) / widths.size();
        CHECK(std::sqrt(var) < 0.01 * mean);
    }
    SUBCASE("detuned two-mode bandwidth is gain independent") {
        std::vector<double> widths;
        for (double g0 : {10.0, 100.0, 1000.0}) {
            const double r = std::acosh(std::sqrt(g0)) / 2.0;
            const QuadraticModel m = make_detuned_two_mode(
                0.5 * std::cosh(2 * r), 0.5 * std::sinh(2 * r), 1.0);
            widths.push_back(fwhm_bandwidth(gain_profile(m, kOdbaChannel, grid)).fwhm);
        }
        for (double w : widths) {
            CHECK(w == doctest::Approx(widths.front()).epsilon(0.01));
        }
    }
    SUBCASE("balanced-coupling bandwidth") {
        const auto bw =
            fwhm_bandwidth(gain_profile(make_qnd(0.8, 1.0), kQndChannel, grid));
        CHECK(bw.fwhm == doctest::Approx(cf::qnd_bandwidth(1.0)).epsilon(1e-7));
    }
    SUBCASE("narrow grid cannot bracket the half maximum") {
        const auto narrow = default_omega_grid(1.0, 21, 0.05);
        const auto profile = gain_profile(matched_oiba(20.0), kOibaChannel, narrow);
        CHECK_THROWS_AS(fwhm_bandwidth(profile), GridError);
    }
    SUBCASE("no amplification, no bandwidth") {
        const auto profile =
            gain_profile(make_dpa({0.0, 0.0, 1.0}), kDpaChannel, grid);
        CHECK_THROWS_AS(fwhm_bandwidth(profile), NoAmplificationError);
    }
}

TEST_CASE("squeezing spectrum and bandwidth") {
    const auto grid = default_omega_grid(1.0);

    SUBCASE("spectrum matches the closed form") {
        const auto spectrum = squeezing_spectrum(matched_oiba(20.0), grid);
        for (const auto& pt : spectrum.points) {
            CHECK(pt.value ==
                  doctest::Approx(cf::squeezing_spectrum(100.0, 1.0, pt.omega))
                      .epsilon(1e-9));
        }
        CHECK(spectrum.evaluate(0.0) == doctest::Approx(0.01).epsilon(1e-10));
        // shot noise far off resonance
        CHECK(spectrum.evaluate(50.0) == doctest::Approx(1.0).epsilon(1e-3));
    }
    SUBCASE("thermal occupation scales the squeezed contribution") {
        const QuadraticModel m =
            matched_oiba(20.0).with_thermal_occupations({0.0, 1.7});
        const auto spectrum = squeezing_spectrum(m, grid);
        for (double w : {0.0, 0.4, 1.3}) {
            CHECK(spectrum.evaluate(w) ==
                  doctest::Approx(cf::squeezing_spectrum(100.0, 1.0, w, 0.0, 1.7))
                      .epsilon(1e-9));
        }
    }
    SUBCASE("bandwidth follows sqrt(2) kappa (G0-2)^{-1/4}") {
        for (double g0 : {100.0, 1000.0}) {
            const double db = 10.0 * std::log10(g0);
            const auto spectrum = squeezing_spectrum(matched_oiba(db), grid);
            const double d_sq = squeezing_bandwidth(spectrum);
            CHECK(d_sq == doctest::Approx(cf::squeezing_bandwidth(g0, 1.0)).epsilon(1e-9));
            const double asym = kRoot2 * std::pow(g0, -0.25);
            CHECK(std::abs(d_sq - asym) / asym < 0.05);
        }
    }
    SUBCASE("squeezing bandwidth beats the single-mode reference") {
        // D_sq / D ~ G^{1/4}/sqrt(2) at equal gain
        const auto spectrum = squeezing_spectrum(matched_oiba(20.0), grid);
        const double d_sq = squeezing_bandwidth(spectrum);
        const QuadraticModel dpa =
            make_dpa({0.0, cf::dpa_drive_for_gain(100.0, 1.0), 1.0});
        const double d = fwhm_bandwidth(gain_profile(dpa, kDpaChannel, grid)).fwhm;
        CHECK(d_sq / d == doctest::Approx(std::pow(100.0, 0.25) / kRoot2).epsilon(0.15));
    }
    SUBCASE("unit gain means nothing to squeeze") {
        const auto spectrum = squeezing_spectrum(matched_oiba(0.0), grid);
        CHECK_THROWS_AS(squeezing_bandwidth(spectrum), NotSqueezedError);
    }
}

TEST_CASE("added noise") {
    SUBCASE("balanced amplifier reaches the quantum limit at large gain") {
        const double gq = std::pow(8.0 * 0.8, 2.0);
        const auto vacuum = added_noise(make_qnd(0.8, 1.0), kQndChannel);
        CHECK(vacuum.added_photons == doctest::Approx(0.5 / gq).epsilon(1e-9));
        CHECK(vacuum.quantum_limited);

        const auto thermal = added_noise(
            make_qnd(0.8, 1.0).with_thermal_occupations({0.0, 3.0}), kQndChannel);
        CHECK(thermal.added_photons == doctest::Approx(3.5 / gq).epsilon(1e-9));
        CHECK_FALSE(thermal.quantum_limited);
    }
    SUBCASE("phase-sensitive channel adds nothing") {
        const auto report = added_noise(matched_oiba(20.0), kOibaChannel);
        CHECK(report.gain == doctest::Approx(100.0).epsilon(1e-9));
        CHECK(std::abs(report.added_photons) < 1e-10);
        CHECK(report.quantum_limited);
    }
    SUBCASE("no amplification is an error") {
        CHECK_THROWS_AS(added_noise(make_oiba({0.0, 0.3, 1.0, 1.0}), kOibaChannel),
                        NoAmplificationError);
    }
    SUBCASE("added noise never goes negative") {
        std::mt19937 rng(99);
        auto uni = [&](double lo, double hi) {
            return std::uniform_real_distribution<double>(lo, hi)(rng);
        };
        int tested = 0;
        while (tested < 20) {
            const double db = uni(3.0, 25.0);
            const QuadraticModel m =
                make_oiba(make_oiba_for_gain(uni(0.5, 2.0), uni(0.5, 2.0), db).params)
                    .with_thermal_occupations({uni(0.0, 2.0), uni(0.0, 2.0)});
            const auto report = added_noise(m, kOibaChannel);
            CHECK(report.added_photons >= -1e-12);
            ++tested;
        }
    }
}

TEST_CASE("output purity") {
    const QuadraticModel m = matched_oiba(20.0);
    SUBCASE("vacuum input leaves the squeezed output pure") {
        CHECK(std::abs(purity_occupancy(m, 0.0)) < 1e-9);
    }
    SUBCASE("thermal input makes it exactly as impure") {
        CHECK(purity_occupancy(m, 2.0) == doctest::Approx(2.0).epsilon(1e-9));
    }
    SUBCASE("no drive reflects the far bath") {
        const QuadraticModel undriven = matched_oiba(0.0);
        CHECK(purity_occupancy(undriven, 1.3) == doctest::Approx(1.3).epsilon(1e-9));
    }
    SUBCASE("defined for two-mode models only") {
        CHECK_THROWS_AS(purity_occupancy(make_dpa({0.0, 0.1, 1.0}), 0.0),
                        StructuralError);
    }
}

TEST_CASE("on-resonance reflection") {
    SUBCASE("matched amplifier is reflectionless") {
        CHECK(reflection_on_resonance(matched_oiba(20.0)) < 1e-12);
    }
    SUBCASE("bare cavity reflects everything") {
        CHECK(reflection_on_resonance(make_oiba({0.0, 0.0, 1.0, 1.0})) ==
              doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("slight over-coupling reflects dC/(dC+2)") {
        // C2 - C1 = 1.1 with symmetric kappa = 1
        const double c1 = 24.0, c2 = 25.1;
        const QuadraticModel m =
            make_oiba({0.5 * std::sqrt(c1), 0.5 * std::sqrt(c2), 1.0, 1.0});
        CHECK(reflection_on_resonance(m) ==
              doctest::Approx(0.047619047619).epsilon(1e-9));
    }
}
