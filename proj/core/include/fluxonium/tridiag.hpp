#ifndef FLUXONIUM_TRIDIAG_HPP
#define FLUXONIUM_TRIDIAG_HPP

#include <Eigen/Core>

namespace fluxonium::tridiag {

/// Symmetric tridiagonal matrix: diag has n entries, off has n-1.
struct SymTridiag {
  Eigen::VectorXd diag;
  Eigen::VectorXd off;

  int size() const { return static_cast<int>(diag.size()); }
  double norm_inf() const;

  /// y = T x
  Eigen::VectorXd apply(const Eigen::VectorXd& x) const;
};

/// Number of eigenvalues strictly below x (Sturm sequence count).
int sturm_count_below(const SymTridiag& t, double x);

/// The k smallest eigenvalues, ascending, each bisected to machine precision.
/// Deterministic: no randomised pivoting, no tolerance races.
Eigen::VectorXd lowest_values(const SymTridiag& t, int k);

/// Eigenvectors for precomputed eigenvalues via inverse iteration with a
/// deterministic start vector; vectors in near-degenerate clusters are
/// orthogonalised against each other. Columns are normalised; the sign is
/// NOT fixed here (callers apply their own convention).
Eigen::MatrixXd inverse_iteration(const SymTridiag& t, const Eigen::VectorXd& values);

}  // namespace fluxonium::tridiag

#endif
