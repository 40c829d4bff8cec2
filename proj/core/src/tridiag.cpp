#include "fluxonium/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "fluxonium/errors.hpp"

namespace fluxonium::tridiag {

namespace {

constexpr double kTiny = 1e-300;

// LU factorisation of (T - shift I) with partial pivoting. U has two
// superdiagonals because of pivot fill-in.
struct TriLU {
  Eigen::VectorXd u0, u1, u2, l;
  std::vector<char> piv;

  void factor(const SymTridiag& t, double shift) {
    const int n = t.size();
    u0.resize(n);
    u1.resize(std::max(n - 1, 0));
    u2.resize(std::max(n - 2, 0));
    l.resize(std::max(n - 1, 0));
    piv.assign(std::max(n - 1, 0), 0);

    // Running entries of row i in columns (i, i+1, i+2).
    double bi = t.diag(0) - shift;
    double ci = n > 1 ? t.off(0) : 0.0;
    double di = 0.0;
    for (int i = 0; i < n - 1; ++i) {
      const double sub = t.off(i);
      const double bnext = t.diag(i + 1) - shift;
      const double cnext = (i + 2 < n) ? t.off(i + 1) : 0.0;
      if (std::abs(bi) >= std::abs(sub)) {
        double safe = bi == 0.0 ? kTiny : bi;
        const double m = sub / safe;
        u0(i) = safe;
        u1(i) = ci;
        if (i + 2 < n) u2(i) = di;
        l(i) = m;
        piv[i] = 0;
        bi = bnext - m * ci;
        ci = cnext - m * di;
      } else {
        const double m = bi / sub;
        u0(i) = sub;
        u1(i) = bnext;
        if (i + 2 < n) u2(i) = cnext;
        l(i) = m;
        piv[i] = 1;
        bi = ci - m * bnext;
        ci = di - m * cnext;
      }
      di = 0.0;
    }
    u0(n - 1) = bi == 0.0 ? kTiny : bi;
  }

  Eigen::VectorXd solve(Eigen::VectorXd y) const {
    const int n = static_cast<int>(u0.size());
    for (int i = 0; i < n - 1; ++i) {
      if (piv[i]) std::swap(y(i), y(i + 1));
      y(i + 1) -= l(i) * y(i);
    }
    for (int i = n - 1; i >= 0; --i) {
      double v = y(i);
      if (i + 1 < n) v -= u1(i) * y(i + 1);
      if (i + 2 < n) v -= u2(i) * y(i + 2);
      y(i) = v / u0(i);
    }
    return y;
  }
};

// Deterministic fill for inverse-iteration start vectors.
Eigen::VectorXd lcg_vector(int n, std::uint64_t seed) {
  Eigen::VectorXd v(n);
  std::uint64_t s = seed * 6364136223846793005ULL + 1442695040888963407ULL;
  for (int i = 0; i < n; ++i) {
    s = s * 6364136223846793005ULL + 1442695040888963407ULL;
    v(i) = static_cast<double>(s >> 11) / 9007199254740992.0 - 0.5;
  }
  return v;
}

}  // namespace

double SymTridiag::norm_inf() const {
  const int n = size();
  double m = 0.0;
  for (int i = 0; i < n; ++i) {
    double row = std::abs(diag(i));
    if (i > 0) row += std::abs(off(i - 1));
    if (i + 1 < n) row += std::abs(off(i));
    m = std::max(m, row);
  }
  return m;
}

Eigen::VectorXd SymTridiag::apply(const Eigen::VectorXd& x) const {
  const int n = size();
  Eigen::VectorXd y(n);
  for (int i = 0; i < n; ++i) {
    double v = diag(i) * x(i);
    if (i > 0) v += off(i - 1) * x(i - 1);
    if (i + 1 < n) v += off(i) * x(i + 1);
    y(i) = v;
  }
  return y;
}

int sturm_count_below(const SymTridiag& t, double x) {
  const int n = t.size();
  int count = 0;
  double q = t.diag(0) - x;
  if (q < 0.0) ++count;
  for (int i = 1; i < n; ++i) {
    double safe = q == 0.0 ? -kTiny : q;
    q = t.diag(i) - x - t.off(i - 1) * t.off(i - 1) / safe;
    if (q < 0.0) ++count;
  }
  return count;
}

Eigen::VectorXd lowest_values(const SymTridiag& t, int k) {
  const int n = t.size();
  if (k < 1 || k > n) throw ValidationError("tridiag: requested eigenvalue count out of range");

  // Gershgorin bounds.
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (int i = 0; i < n; ++i) {
    double r = 0.0;
    if (i > 0) r += std::abs(t.off(i - 1));
    if (i + 1 < n) r += std::abs(t.off(i));
    lo = std::min(lo, t.diag(i) - r);
    hi = std::max(hi, t.diag(i) + r);
  }
  const double eps = std::numeric_limits<double>::epsilon();
  const double span = hi - lo;

  Eigen::VectorXd values(k);
  for (int j = 0; j < k; ++j) {
    double a = lo, b = hi;
    for (int iter = 0; iter < 200; ++iter) {
      const double mid = 0.5 * (a + b);
      if (mid <= a || mid >= b) break;
      if (sturm_count_below(t, mid) <= j) {
        a = mid;
      } else {
        b = mid;
      }
      const double width = b - a;
      if (width <= 2.0 * eps * std::max(std::abs(a), std::abs(b)) + kTiny * span) break;
    }
    values(j) = 0.5 * (a + b);
  }
  return values;
}

Eigen::MatrixXd inverse_iteration(const SymTridiag& t, const Eigen::VectorXd& values) {
  const int n = t.size();
  const int k = static_cast<int>(values.size());
  const double scale = std::max(t.norm_inf(), kTiny);
  const double eps = std::numeric_limits<double>::epsilon();

  Eigen::MatrixXd vecs(n, k);
  for (int j = 0; j < k; ++j) {
    TriLU lu;
    lu.factor(t, values(j));
    Eigen::VectorXd v = lcg_vector(n, 0x5eedULL + static_cast<std::uint64_t>(j));
    v.normalize();
    double resid = std::numeric_limits<double>::infinity();
    for (int iter = 0; iter < 10; ++iter) {
      Eigen::VectorXd w = lu.solve(v);
      // Orthogonalise against already-computed vectors; only matters inside
      // near-degenerate clusters, harmless elsewhere.
      for (int m = 0; m < j; ++m) w -= vecs.col(m).dot(w) * vecs.col(m);
      const double norm = w.norm();
      if (norm == 0.0 || !std::isfinite(norm)) {
        v = lcg_vector(n, 0xabcdULL * (iter + 1) + static_cast<std::uint64_t>(j));
        v.normalize();
        continue;
      }
      v = w / norm;
      if (iter >= 2) {
        resid = (t.apply(v) - values(j) * v).norm();
        if (resid <= 64.0 * eps * scale) break;
      }
    }
    vecs.col(j) = v;
  }
  return vecs;
}

}  // namespace fluxonium::tridiag
