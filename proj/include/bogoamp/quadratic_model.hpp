#ifndef BOGOAMP_QUADRATIC_MODEL_HPP
#define BOGOAMP_QUADRATIC_MODEL_HPP

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "bogoamp/errors.hpp"

namespace bogoamp {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Particle-hole swap, tau1 = [[0,I],[I,0]] on the (a, a^dag) blocks.
Matrix tau1(int n_modes);
// Symplectic metric, tau3 = diag(+1...+1, -1...-1).
Matrix tau3(int n_modes);

/// N-mode quadratic bosonic Hamiltonian with port couplings,
/// H = 1/2 v^dag M v in the doubled basis v = (a_1..a_N, a_1^dag..a_N^dag).
/// M is Hermitian and obeys tau1 M tau1 = M^*. All rates are in units of
/// the first port coupling unless the caller says otherwise.
class QuadraticModel {
public:
    QuadraticModel(Matrix h_matrix, std::vector<double> kappas,
                   std::vector<double> thermal_occupations = {});

    int n_modes() const { return n_modes_; }
    const Matrix& h_matrix() const { return h_matrix_; }
    const std::vector<double>& kappas() const { return kappas_; }
    const std::vector<double>& thermal_occupations() const { return nbar_; }

    // Copy with different bath occupations (models are immutable values).
    QuadraticModel with_thermal_occupations(std::vector<double> nbar) const;

private:
    int n_modes_;
    Matrix h_matrix_;
    std::vector<double> kappas_;
    std::vector<double> nbar_;
};

/// Generator of the first-moment dynamics, d<v>/dt = A <v>,
/// A = -i tau3 M - diag(kappa_n/2) duplicated over both blocks.
struct DynamicalMatrix {
    Matrix a_matrix;
};

struct StabilityReport {
    std::vector<Complex> eigenvalues;  // of the dynamical matrix
    double max_real_part = 0.0;
    bool stable = false;                  // all real parts < -1e-12
    bool hamiltonian_diagonalizable = false;  // dissipation-free criterion
};

enum class BogoliubovKind {
    single_mode_detuned,  // detuned single-mode squeezing
    two_mode_detuned,     // detuned two-mode squeezing
    imbalanced_hopping,   // squeezing + conversion, G2 > G1
};

/// Result of bringing a recognized Hamiltonian to Bogoliubov normal form.
/// mode_energy is the conserved-mode energy (detuned classes) or the
/// hopping rate between local Bogoliubov modes (imbalanced class).
struct BogoliubovForm {
    double squeeze_r = 0.0;
    double mode_energy = 0.0;
    BogoliubovKind kind = BogoliubovKind::single_mode_detuned;
};

/// Frequency-domain map from input to output fields in the doubled basis,
/// v_out[w] = s[w] v_in[w]. Satisfies s tau3 s^dag = tau3 (commutator
/// preservation) and s[w] = tau1 s^*[-w] tau1 when every decay channel is
/// a port.
struct ScatteringMatrix {
    double omega = 0.0;
    Matrix s;

    // Same map in the quadrature basis (X_1, P_1, X_2, P_2, ...),
    // X = (a + a^dag)/sqrt(2), P = -i(a - a^dag)/sqrt(2).
    Matrix quadrature() const;
};

/// One quadrature of one port: cos(angle) X_n + sin(angle) P_n.
/// angle = 0 selects X, angle = pi/2 selects P.
struct PortQuadrature {
    int mode = 0;
    double angle = 0.0;
};

/// Names one element of the quadrature-basis scattering matrix.
struct Selector {
    PortQuadrature input;
    PortQuadrature output;
};

/// Symmetrized output spectral density in units of the shot noise 1/2.
struct NoiseSpectrumPoint {
    double omega = 0.0;
    double value = 0.0;
};

// Exception carrying the diagnostics of a refused scattering computation.
class UnstableDynamicsError : public Error {
public:
    UnstableDynamicsError(const std::string& what, StabilityReport report)
        : Error(what), report(std::move(report)) {}
    StabilityReport report;
};

DynamicalMatrix build_dynamical_matrix(const QuadraticModel& model);

StabilityReport stability(const QuadraticModel& model);

/// Throws UnstableHamiltonianError when the Hamiltonian cannot be
/// diagonalized and UnsupportedFormError when it is not one of the
/// recognized one- or two-mode forms.
BogoliubovForm bogoliubov_diagonalize(const QuadraticModel& model);

/// Rebuild the Hamiltonian matrix of a normal form (inverse of
/// bogoliubov_diagonalize for the canonical real-coupling models).
Matrix h_matrix_from_form(const BogoliubovForm& form);

/// Scattering of an unstable model is refused: frequency-domain inversion
/// is meaningless there. Throws UnstableDynamicsError with the report.
ScatteringMatrix scattering_matrix(const QuadraticModel& model, double omega);

// Quadrature-basis transfer amplitude for one selector.
Complex transfer_element(const ScatteringMatrix& sm, const Selector& sel);
Complex transfer_element(const QuadraticModel& model, const Selector& sel,
                         double omega);

/// Symmetrized output noise spectrum of one port quadrature, with every
/// port driven by vacuum plus its thermal occupation. Reported in units
/// of the shot-noise value 1/2.
NoiseSpectrumPoint output_spectrum(const QuadraticModel& model,
                                   const PortQuadrature& quadrature,
                                   double omega);

} // namespace bogoamp

#endif
