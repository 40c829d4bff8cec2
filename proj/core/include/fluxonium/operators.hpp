#ifndef FLUXONIUM_OPERATORS_HPP
#define FLUXONIUM_OPERATORS_HPP

#include <Eigen/Core>
#include <functional>
#include <memory>

#include "fluxonium/params.hpp"
#include "fluxonium/tridiag.hpp"

namespace fluxonium {

enum class BasisKind { harmonic_oscillator, grid };

struct Basis {
  BasisKind kind = BasisKind::harmonic_oscillator;
  int dimension = 0;     // HO: truncation size; grid: interior point count
  double phi_max = 0.0;  // grid only; wavefunction support is [-phi_max, phi_max]
};

/// Truncated matrix representations of phi, n, cos(phi - theta) and H in a
/// declared basis. n is imaginary antisymmetric and stored through its real
/// factor: n = i * n_im. The Hamiltonian is assembled from the stored
/// truncated matrices themselves,
///     H = -e_c (n_im n_im) + e_l (phi phi) - e_j cos_op,
/// so the assembly identity can be re-checked exactly. In the grid basis the
/// kinetic term uses the compact second difference instead (see build_grid).
struct OperatorSet {
  Basis basis;
  CircuitParams params;
  Eigen::MatrixXd phi;
  Eigen::MatrixXd n_im;
  Eigen::MatrixXd cos_op;
  Eigen::MatrixXd hamiltonian;

  /// Zero-point phase spread (E_C / 4 E_L)^(1/4) of the underlying oscillator.
  double phi_zpf() const;
};

/// Lowest-k eigenpairs of a real symmetric operator set.
/// values ascending; vectors orthonormal with the largest-magnitude
/// component of each column made positive; residual_norm is
/// max_j ||H v_j - lambda_j v_j||_2 / ||H||_F.
struct EigenSolution {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;
  double residual_norm = 0.0;
  int basis_dimension = 0;
};

/// Harmonic-oscillator basis with phi = phi_zpf (a + a^dag),
/// n = i (a^dag - a) / (2 phi_zpf); cos(phi - theta) is built as a spectral
/// function of the truncated phi matrix. Requires dimension >= 4.
OperatorSet build_ho(const CircuitParams& p, int dimension);

/// Real-space grid with Dirichlet boundaries; central second-difference
/// kinetic term, diagonal potential. Used as an independent cross-check of
/// the HO construction. Requires points >= 64 and
/// phi_max >= 6 sqrt(2) (E_C / 4 E_L)^(1/4).
OperatorSet build_grid(const CircuitParams& p, int points, double phi_max);

/// Deterministic symmetric eigensolve of ops.hamiltonian for the k lowest
/// states (k <= dimension/2). Dense tridiagonalisation + implicit QL for the
/// HO basis; Sturm bisection + inverse iteration for the (tridiagonal) grid
/// basis, which keeps the two routes algorithmically independent.
EigenSolution eigensolve(const OperatorSet& ops, int k);

/// Basis-doubling convergence ladder: solves at N0, 2 N0, ... and stops when
/// every retained eigenvalue is stable to the requested relative tolerance,
/// with N0 = max(32, ceil(8 sqrt(E_C/E_L))). Throws ConvergenceError when the
/// dimension cap 2^15 is reached first.
EigenSolution converge(const CircuitParams& p, int k, double tol);

namespace detail {

inline constexpr int kDimensionCap = 32768;  // 2^15

int default_start_dimension(const CircuitParams& p);

/// Ladder with an explicit start dimension; the converged spectrum must not
/// depend on this choice (tested).
EigenSolution converge_from(const CircuitParams& p, int k, double tol, int start_dimension);

/// Convergence that also hands back the operator set at the final dimension,
/// so callers computing matrix elements do not rebuild it.
struct ConvergedOperators {
  OperatorSet ops;
  EigenSolution sol;
};
ConvergedOperators converge_with_ops(const CircuitParams& p, int k, double tol);
ConvergedOperators converge_with_ops_from(const CircuitParams& p, int k, double tol,
                                          int start_dimension);

/// Eigendecomposition of the dimensionless HO phi matrix (zero diagonal,
/// off-diagonal sqrt(k+1)). Parameter independent, so cached per dimension.
struct PhiDiagonalisation {
  Eigen::VectorXd nodes;
  Eigen::MatrixXd vecs;
};
std::shared_ptr<const PhiDiagonalisation> phi_nodes(int dimension);

/// <v| f(phi) |v> evaluated through the spectral decomposition of phi.
double phi_function_expectation(const OperatorSet& ops, const Eigen::VectorXd& v,
                                const std::function<double(double)>& f);

/// Grid Hamiltonian in tridiagonal form (no dense storage); shared by
/// build_grid and the fast flux scans.
struct GridHamiltonian {
  tridiag::SymTridiag h;
  Eigen::VectorXd x;
  double dphi = 0.0;
};
GridHamiltonian grid_hamiltonian(const CircuitParams& p, int points, double phi_max);

/// Spec minimum window plus margin for the flux-tilted displacement.
double default_grid_phi_max(const CircuitParams& p);

/// Smallest admissible grid window (the build_grid precondition).
double min_grid_phi_max(const CircuitParams& p);

}  // namespace detail

}  // namespace fluxonium

#endif
