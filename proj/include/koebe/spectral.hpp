#ifndef KOEBE_SPECTRAL_HPP
#define KOEBE_SPECTRAL_HPP

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include <lapacke.h>

#include "koebe/chebyshev.hpp"

namespace koebe {

/// Dense Phi_N = 4x^2(I-A) - (I-B): pentadiagonal with diagonal U_2,
/// first off-diagonal -x*U_1 and second off-diagonal 1/2.
inline std::vector<std::vector<double>> phi_dense(int n, double x) {
  std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
  const double d = 4.0 * x * x - 1.0;
  const double off1 = -2.0 * x * x;
  for (int i = 0; i < n; ++i) {
    m[i][i] = d;
    if (i + 1 < n) m[i][i + 1] = m[i + 1][i] = off1;
    if (i + 2 < n) m[i][i + 2] = m[i + 2][i] = 0.5;
  }
  return m;
}

/// Determinant by Laplace cofactor expansion along the first row.
/// Exponential cost; meant for the 1x1..5x5 seed matrices only.
inline double cofactor_det(const std::vector<std::vector<double>>& m) {
  const int n = static_cast<int>(m.size());
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  double det = 0.0;
  double sign = 1.0;
  for (int c = 0; c < n; ++c, sign = -sign) {
    if (m[0][c] == 0.0) continue;
    std::vector<std::vector<double>> minor(n - 1, std::vector<double>(n - 1));
    for (int r = 1; r < n; ++r) {
      int cc = 0;
      for (int k = 0; k < n; ++k) {
        if (k == c) continue;
        minor[r - 1][cc++] = m[r][k];
      }
    }
    det += sign * m[0][c] * cofactor_det(minor);
  }
  return det;
}

/// det Phi_N(x) via the fifth-order difference equation, seeded with the
/// directly expanded 1x1..5x5 determinants.
inline double phi_det_recurrence(int n, double x) {
  if (n < 1) throw std::invalid_argument("phi_det_recurrence: N must be >= 1");
  double z[5];
  for (int j = 1; j <= std::min(n, 5); ++j) z[j - 1] = cofactor_det(phi_dense(j, x));
  if (n <= 5) return z[n - 1];
  const double x2 = x * x;
  const double c1 = 4.0 * x2 - 1.5;
  const double c2 = -4.0 * x2 * x2 + 2.0 * x2 - 0.5;
  for (int k = 5; k < n; ++k) {
    // z holds Z_{k-4}..Z_k
    const double next = c1 * (z[4] - 0.125 * z[1]) + c2 * (z[3] - 0.5 * z[2]) + z[0] / 32.0;
    z[0] = z[1];
    z[1] = z[2];
    z[2] = z[3];
    z[3] = z[4];
    z[4] = next;
  }
  return z[4];
}

/// The running magnitude of the recurrence, used as the natural scale when
/// testing that the determinant vanishes at a root.
inline double phi_det_recurrence_scale(int n, double x) {
  double scale = 0.0;
  double z[5];
  for (int j = 1; j <= std::min(n, 5); ++j) {
    z[j - 1] = cofactor_det(phi_dense(j, x));
    scale = std::max(scale, std::abs(z[j - 1]));
  }
  if (n <= 5) return std::max(scale, 1.0);
  const double x2 = x * x;
  const double c1 = 4.0 * x2 - 1.5;
  const double c2 = -4.0 * x2 * x2 + 2.0 * x2 - 0.5;
  for (int k = 5; k < n; ++k) {
    const double next = c1 * (z[4] - 0.125 * z[1]) + c2 * (z[3] - 0.5 * z[2]) + z[0] / 32.0;
    z[0] = z[1];
    z[1] = z[2];
    z[2] = z[3];
    z[3] = z[4];
    z[4] = next;
    scale = std::max(scale, std::abs(next));
  }
  return std::max(scale, 1.0);
}

/// Closed form det Phi_N(x) = U_{N+1}(x) U'_{N+1}(x) / (2^{N+2} x).
/// The formula is kept literal: x = 0 is rejected rather than taking a limit.
inline double phi_det_closed(int n, double x) {
  if (n < 1) throw std::invalid_argument("phi_det_closed: N must be >= 1");
  if (x == 0.0) throw std::domain_error("phi_det_closed: x must be nonzero");
  return u_eval(n + 1, x) * u_deriv(n + 1, x) / (std::ldexp(1.0, n + 2) * x);
}

/// Positive roots mu_j = cos(j pi/(N+2)), j = 1..floor((N+1)/2).
inline std::vector<double> mu_roots(int n) {
  std::vector<double> mu;
  for (int j = 1; j <= (n + 1) / 2; ++j)
    mu.push_back(std::cos(j * std::numbers::pi / (n + 2)));
  return mu;
}

/// Positive zeros of U'_{N+1}, bracketed between consecutive zeros of U_{N+1}
/// (the two zero sets alternate) and refined by bisection.
inline std::vector<double> nu_roots(int n) {
  std::vector<double> nu;
  const double ang = std::numbers::pi / (n + 2);
  for (int k = 1; k <= n; ++k) {
    double hi = std::cos(k * ang);
    double lo = std::cos((k + 1) * ang);
    if (hi <= 0.0) break;
    double flo = u_deriv(n + 1, lo), fhi = u_deriv(n + 1, hi);
    if (flo * fhi > 0.0) continue;
    for (int it = 0; it < 120; ++it) {
      const double mid = 0.5 * (lo + hi);
      const double fm = u_deriv(n + 1, mid);
      if (flo * fm <= 0.0) {
        hi = mid;
        fhi = fm;
      } else {
        lo = mid;
        flo = fm;
      }
    }
    const double r = 0.5 * (lo + hi);
    if (r > 1e-12) nu.push_back(r);
  }
  return nu;
}

/// Generalized eigenvalues of (I-A) d = lambda (I-B) d together with the
/// closed-form reference roots of the determinant equation.
struct SpectralSystem {
  int n_order = 0;
  double lambda_min = 0.0;
  std::vector<double> eigenvalues;       // ascending
  std::vector<double> mu_roots;          // cos(j pi/(N+2)), descending in j
  std::vector<double> nu_roots;          // positive zeros of U'_{N+1}
  std::vector<double> lambda_min_vector; // eigenvector of lambda_min

  /// {1/(4 mu^2)} U {1/(4 nu^2)}, sorted ascending.
  std::vector<double> reference_eigenvalues() const {
    std::vector<double> ref;
    for (double m : mu_roots) ref.push_back(0.25 / (m * m));
    for (double v : nu_roots) ref.push_back(0.25 / (v * v));
    std::sort(ref.begin(), ref.end());
    return ref;
  }

  /// Corollary ordering: merged descending the roots alternate
  /// mu_1 > nu_1 > mu_2 > nu_2 > ... > 0.
  bool interlacing_ok() const {
    std::vector<double> merged;
    const std::size_t m = std::max(mu_roots.size(), nu_roots.size());
    for (std::size_t i = 0; i < m; ++i) {
      if (i < mu_roots.size()) merged.push_back(mu_roots[i]);
      if (i < nu_roots.size()) merged.push_back(nu_roots[i]);
    }
    for (std::size_t i = 0; i + 1 < merged.size(); ++i)
      if (!(merged[i] > merged[i + 1])) return false;
    return merged.empty() ? true : merged.back() > 0.0;
  }
};

/// Solves the banded symmetric-definite pencil (I-A, I-B) with dsbgv
/// (split Cholesky of I-B, bandwidths 1 and 2).
inline SpectralSystem generalized_eigs(int n, bool with_vector = true) {
  if (n < 1) throw std::invalid_argument("generalized_eigs: N must be >= 1");
  // dsbgv needs ka >= kb, so both operands use the joint bandwidth
  const lapack_int kband = std::min(2, n - 1);
  const lapack_int ka = kband, kb = kband;
  const lapack_int ldab = ka + 1, ldbb = kb + 1;
  std::vector<double> ab(static_cast<std::size_t>(ldab) * n, 0.0);
  std::vector<double> bb(static_cast<std::size_t>(ldbb) * n, 0.0);
  for (lapack_int j = 0; j < n; ++j) {
    ab[ka + j * ldab] = 1.0;                              // diag of I-A
    if (j >= 1) ab[ka - 1 + j * ldab] = -0.5;             // (j-1, j) of I-A
    bb[kb + j * ldbb] = 1.0;                              // diag of I-B
    if (kb >= 2 && j >= 2) bb[kb - 2 + j * ldbb] = -0.5;  // (j-2, j) of I-B
  }
  std::vector<double> w(n), zv;
  const char jobz = with_vector ? 'V' : 'N';
  if (with_vector) zv.resize(static_cast<std::size_t>(n) * n);
  const lapack_int info =
      LAPACKE_dsbgv(LAPACK_COL_MAJOR, jobz, 'U', n, ka, kb, ab.data(), ldab,
                    bb.data(), ldbb, w.data(), with_vector ? zv.data() : nullptr, n);
  if (info != 0)
    throw std::runtime_error("generalized_eigs: dsbgv failed, info = " + std::to_string(info));

  SpectralSystem sys;
  sys.n_order = n;
  sys.eigenvalues = std::move(w);  // dsbgv returns ascending order
  sys.lambda_min = sys.eigenvalues.front();
  sys.mu_roots = mu_roots(n);
  sys.nu_roots = nu_roots(n);
  if (with_vector) sys.lambda_min_vector.assign(zv.begin(), zv.begin() + n);
  return sys;
}

/// Lemma 5 eigenvector family at scale c = 1:
/// delta_j = U_{j-1}(x0) U_j(x0), j = 1..N.
inline std::vector<double> delta0(int n) {
  const ChebNode nd = node(n);
  std::vector<double> d(n);
  double um1 = 1.0, u = 2.0 * nd.x0;  // U_0, U_1
  for (int j = 1; j <= n; ++j) {
    d[j - 1] = um1 * u;
    const double un = 2.0 * nd.x0 * u - um1;
    um1 = u;
    u = un;
  }
  return d;
}

/// Residual infinity-norm of (I-A) d - lambda (I-B) d with banded products.
inline double pencil_residual(const std::vector<double>& d, double lambda) {
  const int n = static_cast<int>(d.size());
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    double ia = d[i];
    if (i > 0) ia -= 0.5 * d[i - 1];
    if (i + 1 < n) ia -= 0.5 * d[i + 1];
    double ib = d[i];
    if (i > 1) ib -= 0.5 * d[i - 2];
    if (i + 2 < n) ib -= 0.5 * d[i + 2];
    worst = std::max(worst, std::abs(ia - lambda * ib));
  }
  return worst;
}

/// d-vector with its autocorrelations beta_0..beta_{N+1}; the last two are
/// zero by construction.
struct AutocorrelationVector {
  std::vector<double> d;
  std::vector<double> beta;  // length N+2
};

inline AutocorrelationVector beta_from_d(const std::vector<double>& d) {
  if (d.empty()) throw std::invalid_argument("beta_from_d: d must be nonempty");
  const int n = static_cast<int>(d.size());
  AutocorrelationVector out;
  out.d = d;
  out.beta.resize(n + 2, 0.0);
  for (int k = 0; k < n; ++k) {
    double s = 0.0;
    for (int j = 0; j + k < n; ++j) s += d[j] * d[j + k];
    out.beta[k] = s;
  }
  return out;
}

}  // namespace koebe

#endif  // KOEBE_SPECTRAL_HPP
