#include "unruh_otto/detector.hpp"

#include "unruh_otto/errors.hpp"

#include <cmath>
#include <string>

namespace unruh_otto::detector {

namespace {

void require_degeneracy(int n, const char* where) {
    if (n < 1) throw DomainError(std::string(where) + ": degeneracy n must be >= 1");
}

} // namespace

void DetectorSpec::validate() const {
    require_degeneracy(n, "DetectorSpec");
    if (!(omega1 > 0.0 && omega2 > omega1) || !std::isfinite(omega2)) {
        throw DomainError("DetectorSpec: requires 0 < omega1 < omega2");
    }
    if (!(g > 0.0) || !std::isfinite(g)) throw DomainError("DetectorSpec: coupling g must be > 0");
}

PopulationState::PopulationState(double p) : p_(p) {
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("PopulationState: p must lie in [0, 1]");
}

Operator hamiltonian(int n, double omega) {
    require_degeneracy(n, "hamiltonian");
    if (!(omega > 0.0)) throw DomainError("hamiltonian: omega must be > 0");
    Operator h = Operator::Zero(n + 1, n + 1);
    h.diagonal().head(n).setConstant(omega);
    return h;
}

Operator monopole(int n) {
    require_degeneracy(n, "monopole");
    const double amp = 1.0 / std::sqrt(static_cast<double>(n));
    Operator m = Operator::Zero(n + 1, n + 1);
    m.col(n).head(n).setConstant(amp);
    m.row(n).head(n).setConstant(amp);
    return m;
}

Operator initial_state(int n, PopulationState p) {
    require_degeneracy(n, "initial_state");
    Operator rho = Operator::Zero(n + 1, n + 1);
    rho.diagonal().head(n).setConstant(p.value() / n);
    rho(n, n) = 1.0 - p.value();
    return rho;
}

Operator shift_matrix(int n, double delta_p) {
    require_degeneracy(n, "shift_matrix");
    Operator d = Operator::Zero(n + 1, n + 1);
    d.topLeftCorner(n, n).setConstant(delta_p / n);
    d(n, n) = -delta_p;
    return d;
}

double energy(const Operator& rho, const Operator& hamiltonian) {
    if (rho.rows() != hamiltonian.rows() || rho.cols() != hamiltonian.cols() ||
        rho.rows() != rho.cols()) {
        throw DimensionMismatch("energy: operator shapes differ");
    }
    return (rho * hamiltonian).trace();
}

bool is_valid_state(const Operator& rho, double tol) {
    if (rho.rows() != rho.cols() || rho.rows() == 0) return false;
    if (std::abs(rho.trace() - 1.0) > tol) return false;
    if ((rho - rho.transpose()).cwiseAbs().maxCoeff() > tol) return false;
    Eigen::SelfAdjointEigenSolver<Operator> eig(rho, Eigen::EigenvaluesOnly);
    return eig.eigenvalues().minCoeff() >= -tol;
}

} // namespace unruh_otto::detector
