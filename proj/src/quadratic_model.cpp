#include "bogoamp/quadratic_model.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <sstream>

namespace bogoamp {

namespace {

constexpr double kStructureTol = 1e-12;
constexpr double kStabilityTol = 1e-12;

// Largest |entry| of a matrix difference.
double max_abs(const Matrix& m) {
    return m.cwiseAbs().maxCoeff();
}

} // namespace

Matrix tau1(int n_modes) {
    Matrix t = Matrix::Zero(2 * n_modes, 2 * n_modes);
    for (int i = 0; i < n_modes; ++i) {
        t(i, n_modes + i) = 1.0;
        t(n_modes + i, i) = 1.0;
    }
    return t;
}

Matrix tau3(int n_modes) {
    Matrix t = Matrix::Zero(2 * n_modes, 2 * n_modes);
    for (int i = 0; i < n_modes; ++i) {
        t(i, i) = 1.0;
        t(n_modes + i, n_modes + i) = -1.0;
    }
    return t;
}

QuadraticModel::QuadraticModel(Matrix h_matrix, std::vector<double> kappas,
                               std::vector<double> thermal_occupations)
    : h_matrix_(std::move(h_matrix)),
      kappas_(std::move(kappas)),
      nbar_(std::move(thermal_occupations)) {
    n_modes_ = static_cast<int>(kappas_.size());
    if (n_modes_ < 1) throw StructuralError("model needs at least one mode");
    if (h_matrix_.rows() != 2 * n_modes_ || h_matrix_.cols() != 2 * n_modes_) {
        std::ostringstream msg;
        msg << "h_matrix is " << h_matrix_.rows() << "x" << h_matrix_.cols()
            << " but " << n_modes_ << " port couplings were given";
        throw StructuralError(msg.str());
    }
    if (nbar_.empty()) nbar_.assign(n_modes_, 0.0);
    if (static_cast<int>(nbar_.size()) != n_modes_) {
        throw StructuralError("thermal_occupations length does not match mode count");
    }
    for (double k : kappas_) {
        if (!(k >= 0.0)) throw StructuralError("port couplings must be non-negative");
    }
    for (double n : nbar_) {
        if (!(n >= 0.0)) throw StructuralError("thermal occupations must be non-negative");
    }
    if (max_abs(h_matrix_ - h_matrix_.adjoint()) > kStructureTol) {
        throw StructuralError("h_matrix is not Hermitian");
    }
    const Matrix t1 = tau1(n_modes_);
    if (max_abs(t1 * h_matrix_ * t1 - h_matrix_.conjugate()) > kStructureTol) {
        throw StructuralError("h_matrix breaks particle-hole structure");
    }
}

QuadraticModel QuadraticModel::with_thermal_occupations(std::vector<double> nbar) const {
    return QuadraticModel(h_matrix_, kappas_, std::move(nbar));
}

DynamicalMatrix build_dynamical_matrix(const QuadraticModel& model) {
    const int n = model.n_modes();
    Matrix a = Complex(0.0, -1.0) * tau3(n) * model.h_matrix();
    for (int i = 0; i < n; ++i) {
        a(i, i) -= model.kappas()[i] / 2.0;
        a(n + i, n + i) -= model.kappas()[i] / 2.0;
    }
    return DynamicalMatrix{std::move(a)};
}

namespace {

// Diagonalizability of the dissipation-free dynamics: tau3 M must have a
// real spectrum and a well-conditioned eigenbasis. On the cusp (e.g.
// equal squeezing and hopping rates) tau3 M is a Jordan block and the
// numerical eigenvectors collapse onto each other.
bool hamiltonian_diagonalizable(const Matrix& h) {
    const int dim = static_cast<int>(h.rows());
    const Matrix b = tau3(dim / 2) * h;
    const double scale = std::max(1.0, b.cwiseAbs().maxCoeff());
    Eigen::ComplexEigenSolver<Matrix> solver(b, /*computeEigenvectors=*/true);
    for (int i = 0; i < dim; ++i) {
        if (std::abs(solver.eigenvalues()[i].imag()) > 1e-10 * scale) return false;
    }
    Eigen::JacobiSVD<Matrix> svd(solver.eigenvectors());
    const double smin = svd.singularValues()(dim - 1);
    const double smax = svd.singularValues()(0);
    return smin > 1e-8 * smax;
}

} // namespace

StabilityReport stability(const QuadraticModel& model) {
    StabilityReport report;
    const DynamicalMatrix dyn = build_dynamical_matrix(model);
    Eigen::ComplexEigenSolver<Matrix> solver(dyn.a_matrix, /*computeEigenvectors=*/false);
    report.eigenvalues.assign(solver.eigenvalues().data(),
                              solver.eigenvalues().data() + solver.eigenvalues().size());
    report.max_real_part = -std::numeric_limits<double>::infinity();
    for (const Complex& ev : report.eigenvalues) {
        report.max_real_part = std::max(report.max_real_part, ev.real());
    }
    report.stable = report.max_real_part < -kStabilityTol;
    report.hamiltonian_diagonalizable = hamiltonian_diagonalizable(model.h_matrix());
    return report;
}

namespace {

struct RecognizedForm {
    BogoliubovKind kind;
    double diag;  // detuning (detuned classes), hopping G2 (imbalanced)
    double offd;  // drive nu, squeezing G, or G1
};

// Matches the Hamiltonian against the canonical one- and two-mode layouts
// (couplings taken by magnitude, so pump phases are accepted).
RecognizedForm recognize(const QuadraticModel& model) {
    const Matrix& m = model.h_matrix();
    const int n = model.n_modes();
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    const double tol = 1e-12 * scale;
    auto is_zero = [&](Complex v) { return std::abs(v) <= tol; };

    if (n == 1) {
        // [[delta, nu], [nu*, delta]]
        const double delta = m(0, 0).real();
        const double nu = std::abs(m(0, 1));
        if (is_zero(m(0, 0) - Complex(delta)) && delta >= -tol) {
            return {BogoliubovKind::single_mode_detuned, delta, nu};
        }
        throw UnsupportedFormError("one-mode Hamiltonian is not in detuned-drive form");
    }
    if (n == 2) {
        const Complex w11 = m(0, 0), w22 = m(1, 1), w12 = m(0, 1);
        const Complex v11 = m(0, 2), v22 = m(1, 3), v12 = m(0, 3);
        const bool no_self_squeeze = is_zero(v11) && is_zero(v22);
        if (no_self_squeeze && is_zero(w11) && is_zero(w22)) {
            // hopping w12, cross squeezing v12: imbalanced class
            return {BogoliubovKind::imbalanced_hopping, std::abs(w12), std::abs(v12)};
        }
        if (no_self_squeeze && is_zero(w12) && is_zero(w11 - w22) &&
            std::abs(w11.imag()) <= tol && w11.real() >= -tol) {
            // equal detunings, cross squeezing: detuned two-mode class
            return {BogoliubovKind::two_mode_detuned, w11.real(), std::abs(v12)};
        }
        throw UnsupportedFormError("two-mode Hamiltonian is not in a recognized normal form");
    }
    throw UnsupportedFormError("only one- and two-mode normal forms are recognized");
}

} // namespace

BogoliubovForm bogoliubov_diagonalize(const QuadraticModel& model) {
    const RecognizedForm f = recognize(model);
    // tanh 2r = offd/diag; real r needs diag > offd (or no drive at all).
    if (f.offd > 0.0 && f.diag <= f.offd) {
        throw UnstableHamiltonianError(
            "unstable Hamiltonian: drive is not dominated, no Bogoliubov normal form");
    }
    BogoliubovForm form;
    form.kind = f.kind;
    form.squeeze_r = (f.offd > 0.0) ? 0.5 * std::atanh(f.offd / f.diag) : 0.0;
    form.mode_energy = std::sqrt(std::max(0.0, f.diag * f.diag - f.offd * f.offd));
    return form;
}

Matrix h_matrix_from_form(const BogoliubovForm& form) {
    const double diag = form.mode_energy * std::cosh(2.0 * form.squeeze_r);
    const double offd = form.mode_energy * std::sinh(2.0 * form.squeeze_r);
    switch (form.kind) {
        case BogoliubovKind::single_mode_detuned: {
            Matrix m(2, 2);
            m << diag, offd, offd, diag;
            return m;
        }
        case BogoliubovKind::two_mode_detuned: {
            Matrix m = Matrix::Zero(4, 4);
            m(0, 0) = m(1, 1) = m(2, 2) = m(3, 3) = diag;
            m(0, 3) = m(1, 2) = m(2, 1) = m(3, 0) = offd;
            return m;
        }
        case BogoliubovKind::imbalanced_hopping: {
            Matrix m = Matrix::Zero(4, 4);
            m(0, 1) = m(1, 0) = m(2, 3) = m(3, 2) = diag;  // hopping G2
            m(0, 3) = m(1, 2) = m(2, 1) = m(3, 0) = offd;  // squeezing G1
            return m;
        }
    }
    throw UnsupportedFormError("unknown normal-form kind");
}

namespace {

// Quadrature transform U with (X1,P1,...,XN,PN) = U v.
Matrix quadrature_transform(int n) {
    const double s = 1.0 / std::sqrt(2.0);
    Matrix u = Matrix::Zero(2 * n, 2 * n);
    for (int k = 0; k < n; ++k) {
        u(2 * k, k) = s;
        u(2 * k, n + k) = s;
        u(2 * k + 1, k) = Complex(0.0, -s);
        u(2 * k + 1, n + k) = Complex(0.0, s);
    }
    return u;
}

Eigen::VectorXd quadrature_vector(int n_modes, const PortQuadrature& q) {
    if (q.mode < 0 || q.mode >= n_modes) {
        throw StructuralError("quadrature selector mode index out of range");
    }
    Eigen::VectorXd w = Eigen::VectorXd::Zero(2 * n_modes);
    w(2 * q.mode) = std::cos(q.angle);
    w(2 * q.mode + 1) = std::sin(q.angle);
    return w;
}

} // namespace

Matrix ScatteringMatrix::quadrature() const {
    const int n = static_cast<int>(s.rows()) / 2;
    const Matrix u = quadrature_transform(n);
    return u * s * u.adjoint();
}

ScatteringMatrix scattering_matrix(const QuadraticModel& model, double omega) {
    StabilityReport report = stability(model);
    if (!report.stable) {
        throw UnstableDynamicsError(
            "unstable dynamics: frequency-domain scattering is undefined",
            std::move(report));
    }
    const int n = model.n_modes();
    const DynamicalMatrix dyn = build_dynamical_matrix(model);
    Eigen::VectorXd sqrt_kappa(2 * n);
    for (int i = 0; i < n; ++i) {
        sqrt_kappa(i) = std::sqrt(model.kappas()[i]);
        sqrt_kappa(n + i) = sqrt_kappa(i);
    }
    // v_out = v_in + K v with (A + i w) v = K v_in, drive term -K v_in.
    Matrix lhs = dyn.a_matrix;
    lhs.diagonal().array() += Complex(0.0, omega);
    const Matrix rhs = sqrt_kappa.asDiagonal() * Matrix::Identity(2 * n, 2 * n);
    Matrix s = sqrt_kappa.asDiagonal() * lhs.partialPivLu().solve(rhs);
    s += Matrix::Identity(2 * n, 2 * n);
    return ScatteringMatrix{omega, std::move(s)};
}

Complex transfer_element(const ScatteringMatrix& sm, const Selector& sel) {
    const int n = static_cast<int>(sm.s.rows()) / 2;
    const Eigen::VectorXd w_out = quadrature_vector(n, sel.output);
    const Eigen::VectorXd w_in = quadrature_vector(n, sel.input);
    return w_out.cast<Complex>().dot(sm.quadrature() * w_in.cast<Complex>());
}

Complex transfer_element(const QuadraticModel& model, const Selector& sel,
                         double omega) {
    return transfer_element(scattering_matrix(model, omega), sel);
}

NoiseSpectrumPoint output_spectrum(const QuadraticModel& model,
                                   const PortQuadrature& quadrature,
                                   double omega) {
    const int n = model.n_modes();
    const ScatteringMatrix sm = scattering_matrix(model, omega);
    const Eigen::VectorXd w = quadrature_vector(n, quadrature);
    const Eigen::RowVectorXcd row = w.cast<Complex>().transpose() * sm.quadrature();
    // Each port drives both its quadratures with nbar + 1/2; in shot-noise
    // units that is 2 nbar + 1 per input channel.
    double value = 0.0;
    for (int k = 0; k < 2 * n; ++k) {
        const double occ = model.thermal_occupations()[k / 2];
        value += std::norm(row(k)) * (2.0 * occ + 1.0);
    }
    return NoiseSpectrumPoint{omega, value};
}

} // namespace bogoamp
