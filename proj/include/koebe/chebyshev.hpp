#ifndef KOEBE_CHEBYSHEV_HPP
#define KOEBE_CHEBYSHEV_HPP

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace koebe {

/// Chebyshev polynomials of the second kind, U_j(cos t) = sin((j+1)t)/sin t,
/// evaluated by the degree-exact three-term recurrence.  The trigonometric
/// quotient is used only as a test oracle; the recurrence keeps u_eval a
/// total polynomial function of x.
inline double u_eval(int j, double x) {
  if (j < 0) return 0.0;  // U_{-1} == 0 convention
  double um1 = 0.0, u = 1.0;
  for (int k = 0; k < j; ++k) {
    const double un = 2.0 * x * u - um1;
    um1 = u;
    u = un;
  }
  return u;
}

/// U_{j-1}(x) and U_j(x) in one recurrence pass.
struct UPair {
  double prev;  // U_{j-1}
  double cur;   // U_j
};

inline UPair u_pair(int j, double x) {
  double um1 = 0.0, u = 1.0;
  for (int k = 0; k < j; ++k) {
    const double un = 2.0 * x * u - um1;
    um1 = u;
    u = un;
  }
  return {um1, u};
}

/// Derivative via the differentiated recurrence
/// U'_{k+1} = 2 U_k + 2x U'_k - U'_{k-1}.  Total function, no 1-x^2 division.
inline double u_deriv_recurrence(int j, double x) {
  if (j <= 0) return 0.0;
  double um1 = 0.0, u = 1.0, dm1 = 0.0, d = 0.0;
  for (int k = 0; k < j; ++k) {
    const double un = 2.0 * x * u - um1;
    const double dn = 2.0 * u + 2.0 * x * d - dm1;
    um1 = u;
    u = un;
    dm1 = d;
    d = dn;
  }
  return d;
}

/// U'_j(x).  Uses the closed form ((j+1)U_{j-1} - j x U_j)/(1-x^2) away from
/// the endpoints; within 1e-9 of |x| = 1 that form is singular and the
/// differentiated recurrence is used instead.
inline double u_deriv(int j, double x) {
  if (j <= 0) return 0.0;
  if (std::abs(x) >= 1.0 - 1e-9) return u_deriv_recurrence(j, x);
  const UPair p = u_pair(j, x);
  return ((j + 1) * p.prev - j * x * p.cur) / (1.0 - x * x);
}

/// The node x0 = cos(pi/(N+2)) of the extremal constructions, with its sine
/// computed directly from the angle rather than via 1-x0^2.
struct ChebNode {
  int n_order;
  double x0;
  double sin0;
};

inline ChebNode node(int n) {
  if (n < 1) throw std::invalid_argument("node: N must be >= 1");
  const double ang = std::numbers::pi / (n + 2);
  return {n, std::cos(ang), std::sin(ang)};
}

}  // namespace koebe

#endif  // KOEBE_CHEBYSHEV_HPP
