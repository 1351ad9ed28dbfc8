#pragma once

#include <Eigen/Dense>

// Basis ordering throughout: |e_1>, ..., |e_n>, |g>, i.e. ground state last.

namespace unruh_otto::detector {

/// Real symmetric (n+1) x (n+1) operator on the detector Hilbert space.
using Operator = Eigen::MatrixXd;

/// Working substance: ground state plus an n-fold degenerate excited level.
struct DetectorSpec {
    int n = 1;
    double omega1 = 1.0;
    double omega2 = 2.0;
    double g = 1.0;

    void validate() const;
};

/// Total population of the excited manifold, in [0, 1].
class PopulationState {
public:
    explicit PopulationState(double p);
    double value() const { return p_; }

private:
    double p_;
};

Operator hamiltonian(int n, double omega);
Operator monopole(int n);
Operator initial_state(int n, PopulationState p);
inline Operator initial_state(int n, double p) { return initial_state(n, PopulationState(p)); }

/// delta_p times the matrix with a uniform 1/n excited block and -1 in the ground corner.
Operator shift_matrix(int n, double delta_p);

/// Tr(rho H). Throws DimensionMismatch when the shapes differ.
double energy(const Operator& rho, const Operator& hamiltonian);

/// Unit trace, symmetric, and no eigenvalue below -tol.
bool is_valid_state(const Operator& rho, double tol = 1e-12);

} // namespace unruh_otto::detector
