#ifndef KOEBE_EXTREMAL_HPP
#define KOEBE_EXTREMAL_HPP

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "koebe/chebyshev.hpp"
#include "koebe/spectral.hpp"

namespace koebe {

enum class Normalization { FirstCoeffOne, SumOne, ValueAtOne, Literal };

inline const char* normalization_name(Normalization n) {
  switch (n) {
    case Normalization::FirstCoeffOne: return "first-coeff-one";
    case Normalization::SumOne: return "sum-one";
    case Normalization::ValueAtOne: return "value-at-one";
    case Normalization::Literal: return "literal";
  }
  return "?";
}

/// Real coefficient vector a_1..a_N of F(z) = sum a_j z^j, tagged with its
/// declared normalization and the constructing family.
struct UnitPolynomial {
  std::vector<double> coeffs;
  Normalization normalization = Normalization::FirstCoeffOne;
  std::string family;

  int degree() const { return static_cast<int>(coeffs.size()); }
};

namespace detail {
/// Enforce a_1 = 1 exactly after confirming the constructing formula already
/// gives it to rounding accuracy.
inline void pin_first_coeff(std::vector<double>& a, const char* who) {
  if (std::abs(a[0] - 1.0) > 1e-12)
    throw std::logic_error(std::string(who) + ": first coefficient not 1");
  a[0] = 1.0;
}
}  // namespace detail

/// Coefficients of the degree-N optimum for the first-coefficient-normalized
/// problem: a_j = U'_{N-j+1}(x0) U_{j-1}(x0) / U'_N(x0), x0 = cos(pi/(N+2)).
inline UnitPolynomial koebe_coeffs(int n) {
  if (n < 1) throw std::invalid_argument("koebe_coeffs: N must be >= 1");
  const ChebNode nd = node(n);
  const double dn = u_deriv(n, nd.x0);
  std::vector<double> a(n);
  for (int j = 1; j <= n; ++j)
    a[j - 1] = u_deriv(n - j + 1, nd.x0) * u_eval(j - 1, nd.x0) / dn;
  detail::pin_first_coeff(a, "koebe_coeffs");
  return {std::move(a), Normalization::FirstCoeffOne, "koebe"};
}

/// The extremal value J_N = -1/4 sec^2(pi/(N+2)).
inline double koebe_value(int n) {
  const ChebNode nd = node(n);
  return -0.25 / (nd.x0 * nd.x0);
}

/// Sign-alternated optimum of the max-variant problem (reflection z -> -z).
inline UnitPolynomial alternating_coeffs(int n) {
  UnitPolynomial p = koebe_coeffs(n);
  for (int j = 2; j <= n; j += 2) p.coeffs[j - 1] = -p.coeffs[j - 1];
  p.family = "alternating";
  return p;
}

/// a_j = (beta_{j-1} - beta_{j+1}) / (beta_0 - beta_2) from an
/// autocorrelation vector; the proof pipeline's final step.
inline UnitPolynomial coeffs_from_beta(const AutocorrelationVector& ac) {
  const int n = static_cast<int>(ac.beta.size()) - 2;
  if (n < 1) throw std::invalid_argument("coeffs_from_beta: beta too short");
  const double den = ac.beta[0] - ac.beta[2];
  if (std::abs(den) < 1e-14)
    throw std::domain_error("coeffs_from_beta: degenerate beta_0 - beta_2");
  std::vector<double> a(n);
  for (int j = 1; j <= n; ++j) a[j - 1] = (ac.beta[j - 1] - ac.beta[j + 1]) / den;
  return {std::move(a), Normalization::FirstCoeffOne, "beta-pipeline"};
}

/// Cosine-problem optimum: a_j = U'_{N-j+1}(x0)/U'_N(x0).
inline UnitPolynomial fejer_cosine_coeffs(int n) {
  if (n < 1) throw std::invalid_argument("fejer_cosine_coeffs: N must be >= 1");
  const ChebNode nd = node(n);
  const double dn = u_deriv(n, nd.x0);
  std::vector<double> a(n);
  for (int j = 1; j <= n; ++j) a[j - 1] = u_deriv(n - j + 1, nd.x0) / dn;
  detail::pin_first_coeff(a, "fejer_cosine_coeffs");
  return {std::move(a), Normalization::FirstCoeffOne, "fejer-cosine"};
}

/// max_a min_t C(t) = -1/2 sec(pi/(N+2)) for the first-coefficient
/// normalization.
inline double fejer_cosine_value(int n) {
  const ChebNode nd = node(n);
  return -0.5 / nd.x0;
}

/// Classical Fejer polynomial under the sum-one normalization,
/// a_j = 2(N+1-j)/(N(N+1)); its minimum is -1/N.
inline UnitPolynomial fejer_classical_coeffs(int n) {
  if (n < 1) throw std::invalid_argument("fejer_classical_coeffs: N must be >= 1");
  std::vector<double> a(n);
  for (int j = 1; j <= n; ++j)
    a[j - 1] = 2.0 * (n + 1 - j) / (static_cast<double>(n) * (n + 1));
  return {std::move(a), Normalization::SumOne, "fejer-classical"};
}

inline double fejer_classical_value(int n) { return -1.0 / n; }

/// Suffridge polynomial: a_j = a1 (1-(j-1)/N) U_{j-1}(cos(pi/(N+1))) with
/// a1 = (2N/(N+1))(1 - cos(pi/(N+1))); normalized by F(1) = 1.
inline UnitPolynomial suffridge_coeffs(int n) {
  if (n < 1) throw std::invalid_argument("suffridge_coeffs: N must be >= 1");
  const double c = std::cos(std::numbers::pi / (n + 1));
  const double a1 = 2.0 * n / (n + 1.0) * (1.0 - c);
  std::vector<double> a(n);
  for (int j = 1; j <= n; ++j)
    a[j - 1] = a1 * (1.0 - (j - 1.0) / n) * u_eval(j - 1, c);
  return {std::move(a), Normalization::ValueAtOne, "suffridge"};
}

/// The value G_N = -tan^2(pi/(2(N+1))) attained by the Suffridge polynomial.
inline double suffridge_value(int n) {
  const double t = std::tan(std::numbers::pi / (2.0 * (n + 1)));
  return -t * t;
}

/// The q-indexed Suffridge variant S(q, z); coefficients are kept literal.
/// Only q = 1 carries the F(1) = 1 normalization.
inline UnitPolynomial suffridge_q_coeffs(int n, int q) {
  if (n < 1) throw std::invalid_argument("suffridge_q_coeffs: N must be >= 1");
  if (q < 1 || q > n) throw std::invalid_argument("suffridge_q_coeffs: q must be in 1..N");
  const double c = std::cos(std::numbers::pi / (n + 1));
  const double a1 = 2.0 * n / (n + 1.0) * (1.0 - c);
  std::vector<double> a(n);
  for (int j = 1; j <= n; ++j)
    a[j - 1] = a1 * (1.0 - (j - 1.0) / n) * u_eval(j * q - 1, c);
  return {std::move(a),
          q == 1 ? Normalization::ValueAtOne : Normalization::Literal,
          "suffridge-q(" + std::to_string(q) + ")"};
}

/// The conjectured q-indexed family
/// a_j = U'_{N-j+1}(x0) U_{jq-1}(x0) / (U_{q-1}(x0) U'_N(x0)).
inline UnitPolynomial koebe_q_coeffs(int n, int q) {
  if (n < 1) throw std::invalid_argument("koebe_q_coeffs: N must be >= 1");
  if (q < 1 || q > n) throw std::invalid_argument("koebe_q_coeffs: q must be in 1..N");
  const ChebNode nd = node(n);
  const double uq = u_eval(q - 1, nd.x0);
  if (std::abs(uq) < 1e-12)
    throw std::domain_error("koebe_q_coeffs: U_{q-1}(x0) vanishes");
  const double den = uq * u_deriv(n, nd.x0);
  std::vector<double> a(n);
  for (int j = 1; j <= n; ++j)
    a[j - 1] = u_deriv(n - j + 1, nd.x0) * u_eval(j * q - 1, nd.x0) / den;
  detail::pin_first_coeff(a, "koebe_q_coeffs");
  return {std::move(a), Normalization::FirstCoeffOne,
          "koebe-q(" + std::to_string(q) + ")"};
}

/// Odd-harmonic conjectured family: coefficients attach to harmonics 2j-1.
/// Both the compact vector and the expanded degree-(2N-1) polynomial are
/// exposed; evaluation layers consume the expanded form.
struct OddPolynomial {
  std::vector<double> harmonic_coeffs;  // a_j of cos/sin (2j-1)t
  UnitPolynomial expanded;              // degree 2N-1, even entries zero
};

inline OddPolynomial odd_coeffs(int n) {
  if (n < 1) throw std::invalid_argument("odd_coeffs: N must be >= 1");
  const double y0 = std::cos(std::numbers::pi / (2 * n + 2));
  const double dn = u_deriv(2 * n, y0);
  OddPolynomial out;
  out.harmonic_coeffs.resize(n);
  for (int j = 1; j <= n; ++j)
    out.harmonic_coeffs[j - 1] = u_deriv(2 * (n - j + 1), y0) / dn;
  detail::pin_first_coeff(out.harmonic_coeffs, "odd_coeffs");
  out.expanded.coeffs.assign(2 * n - 1, 0.0);
  for (int j = 1; j <= n; ++j) out.expanded.coeffs[2 * j - 2] = out.harmonic_coeffs[j - 1];
  out.expanded.normalization = Normalization::FirstCoeffOne;
  out.expanded.family = "odd";
  return out;
}

}  // namespace koebe

#endif  // KOEBE_EXTREMAL_HPP
