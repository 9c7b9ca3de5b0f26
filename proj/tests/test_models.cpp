#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <Eigen/SVD>
#include <cmath>

#include "bogoamp/closed_forms.hpp"
#include "bogoamp/models.hpp"

using namespace bogoamp;
namespace cf = bogoamp::closed_forms;

namespace {

const Selector kDpaChannel{{0, -M_PI / 4.0}, {0, -M_PI / 4.0}};
const Selector kOdbaChannel{{0, 0.0}, {0, M_PI / 2.0}};
const Selector kOibaChannel{{1, 0.0}, {0, M_PI / 2.0}};

double channel_gain(const QuadraticModel& m, const Selector& sel, double w = 0.0) {
    return std::norm(transfer_element(m, sel, w));
}

} // namespace

TEST_CASE("resonant single-mode amplifier") {
    SUBCASE("nu = 0.3, kappa = 1 gives power gain 16") {
        CHECK(channel_gain(make_dpa({0.0, 0.3, 1.0}), kDpaChannel) ==
              doctest::Approx(16.0).epsilon(1e-12));
    }
    SUBCASE("gain diverges as nu approaches kappa/2") {
        const double g_near = channel_gain(make_dpa({0.0, 0.4999, 1.0}), kDpaChannel);
        CHECK(g_near > 1e6);
    }
    SUBCASE("no drive, unit gain at every frequency") {
        const QuadraticModel m = make_dpa({0.0, 0.0, 1.0});
        for (double w : {0.0, 0.5, 2.0, 4.5}) {
            CHECK(channel_gain(m, kDpaChannel, w) == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("detuned amplifier design") {
    SUBCASE("20 dB parameters") {
        const auto sol = make_odba_for_gain(1.0, 20.0);
        CHECK(sol.squeeze_r == doctest::Approx(1.151292546497).epsilon(1e-12));
        CHECK(sol.params.delta == doctest::Approx(2.525).epsilon(1e-12));
        CHECK(sol.params.nu == doctest::Approx(2.475).epsilon(1e-12));
    }
    SUBCASE("0 dB is the undriven matched cavity") {
        const auto sol = make_odba_for_gain(1.0, 0.0);
        CHECK(sol.squeeze_r == 0.0);
        CHECK(sol.params.delta == doctest::Approx(0.5));
        CHECK(sol.params.nu == 0.0);
    }
    SUBCASE("matching residual stays at rounding level") {
        for (double db : {3.0, 10.0, 20.0, 30.0}) {
            CHECK(std::abs(matching_residual(make_odba_for_gain(1.0, db))) < 1e-12);
        }
    }
    SUBCASE("scattering reproduces the gain target") {
        for (double db : {10.0, 20.0, 30.0}) {
            const auto sol = make_odba_for_gain(1.0, db);
            const double g0 = channel_gain(make_dpa(sol.params), kOdbaChannel);
            CHECK(g0 == doctest::Approx(std::pow(10.0, db / 10.0)).epsilon(1e-9));
        }
    }
}

TEST_CASE("imbalanced two-mode amplifier design") {
    SUBCASE("20 dB parameters, symmetric decay") {
        const auto sol = make_oiba_for_gain(1.0, 1.0, 20.0);
        CHECK(sol.params.g2 == doctest::Approx(2.525).epsilon(1e-12));
        CHECK(sol.params.g1 == doctest::Approx(2.475).epsilon(1e-12));
        CHECK(channel_gain(make_oiba(sol.params), kOibaChannel) ==
              doctest::Approx(100.0).epsilon(1e-9));
    }
    SUBCASE("both matching conditions coincide for symmetric decay") {
        const auto a = make_oiba_for_gain(1.0, 1.0, 20.0, MatchCondition::impedance);
        const auto b = make_oiba_for_gain(1.0, 1.0, 20.0, MatchCondition::imbalance);
        CHECK(std::abs(a.params.g1 - b.params.g1) < 1e-12);
        CHECK(std::abs(a.params.g2 - b.params.g2) < 1e-12);
    }
    SUBCASE("impedance branch kills the on-resonance reflection") {
        for (double k2 : {1.0, 0.7, 0.5}) {
            const auto sol =
                make_oiba_for_gain(1.0, k2, 18.0, MatchCondition::impedance);
            const QuadraticModel m = make_oiba(sol.params);
            CHECK(std::abs(transfer_element(m, {{0, 0.0}, {0, 0.0}}, 0.0)) < 1e-12);
            CHECK(std::abs(matching_residual(sol)) < 1e-12);
        }
    }
    SUBCASE("imbalance branch keeps the matched mode splitting") {
        const auto sol = make_oiba_for_gain(1.0, 0.5, 18.0, MatchCondition::imbalance);
        CHECK(std::abs(matching_residual(sol)) < 1e-12);
        // splitting equals kappa+/2 at this point
        const auto report = stability(make_oiba(sol.params));
        const double kp = 0.75;
        bool found = false;
        for (const Complex& ev : report.eigenvalues) {
            found = found || std::abs(ev - Complex(-kp / 2, kp / 2)) < 1e-10;
        }
        CHECK(found);
    }
    SUBCASE("pure conversion never amplifies") {
        const QuadraticModel m = make_oiba({0.0, 0.45, 1.0, 1.0});
        for (double w : {0.0, 0.3, 1.2}) {
            Eigen::JacobiSVD<Matrix> svd(scattering_matrix(m, w).s);
            CHECK(svd.singularValues()(0) <= 1.0 + 1e-12);
        }
    }
    SUBCASE("pump phases rotate quadratures but not singular values") {
        const auto base = make_oiba_for_gain(1.0, 1.0, 14.0).params;
        OibaParams rotated = base;
        rotated.pump_phase1 = 0.7;
        for (double w : {0.0, 0.9}) {
            Eigen::JacobiSVD<Matrix> s0(scattering_matrix(make_oiba(base), w).s);
            Eigen::JacobiSVD<Matrix> s1(scattering_matrix(make_oiba(rotated), w).s);
            CHECK((s0.singularValues() - s1.singularValues()).cwiseAbs().maxCoeff() <
                  1e-9);
        }
    }
}

TEST_CASE("detuned two-mode amplifier") {
    SUBCASE("matched design is stable and phase-insensitive") {
        const double g0 = 100.0;
        const double r = std::acosh(std::sqrt(g0)) / 2.0;
        const QuadraticModel m = make_detuned_two_mode(0.5 * std::cosh(2 * r),
                                                       0.5 * std::sinh(2 * r), 1.0);
        CHECK(stability(m).stable);
        // reflection channel carries the gain in both quadrature directions
        CHECK(channel_gain(m, kOdbaChannel) == doctest::Approx(g0).epsilon(1e-9));
        CHECK(channel_gain(m, {{0, M_PI / 2}, {0, 0.0}}) ==
              doctest::Approx(g0).epsilon(1e-9));
    }
    SUBCASE("no coupling, no gain") {
        const QuadraticModel m = make_detuned_two_mode(0.8, 0.0, 1.0);
        CHECK(channel_gain(m, kOdbaChannel) <= 1.0 + 1e-12);
    }
    SUBCASE("equal detuning and coupling is flagged") {
        CHECK_THROWS_AS(bogoliubov_diagonalize(make_detuned_two_mode(0.9, 0.9, 1.0)),
                        UnstableHamiltonianError);
    }
}

TEST_CASE("balanced-coupling amplifier") {
    SUBCASE("same Hamiltonian as the imbalanced constructor at G1 = G2") {
        const Matrix a = make_qnd(0.6, 1.0).h_matrix();
        const Matrix b = make_oiba({0.6, 0.6, 1.0, 1.0}).h_matrix();
        CHECK((a - b).cwiseAbs().maxCoeff() == 0.0);
    }
    SUBCASE("transmission gain (8g/kappa)^2, unity at g = kappa/8") {
        const Selector channel{{0, 0.0}, {1, M_PI / 2.0}};
        CHECK(channel_gain(make_qnd(0.8, 1.0), channel) ==
              doctest::Approx(std::pow(8.0 * 0.8, 2.0)).epsilon(1e-10));
        CHECK(channel_gain(make_qnd(0.125, 1.0), channel) ==
              doctest::Approx(1.0).epsilon(1e-10));
    }
    SUBCASE("X quadratures are reflected, never amplified") {
        const Matrix sq = scattering_matrix(make_qnd(0.9, 1.0), 0.0).quadrature();
        CHECK(std::abs(sq(0, 0)) == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(std::abs(sq(2, 2)) == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(std::abs(sq(0, 1)) < 1e-12);
        CHECK(std::abs(sq(0, 2)) < 1e-12);
        CHECK(std::abs(sq(0, 3)) < 1e-12);
        CHECK(std::abs(sq(2, 0)) < 1e-12);
        CHECK(std::abs(sq(2, 1)) < 1e-12);
        CHECK(std::abs(sq(2, 3)) < 1e-12);
    }
}

TEST_CASE("asymmetric closed forms match the generic scattering") {
    for (double k2 : {1.0, 0.8, 0.5}) {
        const auto sol = make_oiba_for_gain(1.0, k2, 20.0, MatchCondition::impedance);
        const QuadraticModel m = make_oiba(sol.params);
        const double g1 = sol.params.g1, g2 = sol.params.g2;
        for (double w : {-2.1, -0.6, 0.0, 0.4, 1.9}) {
            const Matrix sq = scattering_matrix(m, w).quadrature();
            CHECK(std::abs(sq(0, 0) - cf::asym_reflection(g1, g2, 1.0, k2, w, -1)) <
                  1e-10);
            CHECK(std::abs(sq(2, 2) - cf::asym_reflection(g1, g2, 1.0, k2, w, +1)) <
                  1e-10);
            CHECK(std::abs(sq(1, 2) - cf::asym_transmission(g1, g2, 1.0, k2, w, +1)) <
                  1e-10);
            CHECK(std::abs(sq(0, 3) - cf::asym_transmission(g1, g2, 1.0, k2, w, -1)) <
                  1e-10);
        }
    }
}
