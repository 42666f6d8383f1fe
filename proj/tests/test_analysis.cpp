#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <lapacke.h>

#include "koebe/analysis.hpp"

using namespace koebe;
using Catch::Approx;

namespace {

UnitPolynomial poly(std::vector<double> a) {
  return {std::move(a), Normalization::FirstCoeffOne, "test"};
}

// independent zero oracle: S(t) = sin t * Q(cos t) with
// Q(c) = sum a_j U_{j-1}(c); roots of Q in (-1,1) via the companion matrix
std::vector<double> companion_interior_roots(const std::vector<double>& a) {
  const int n = static_cast<int>(a.size());
  // monomial coefficients of Q: build U_k iteratively
  std::vector<std::vector<double>> us = {{1.0}, {0.0, 2.0}};
  while (static_cast<int>(us.size()) < n) {
    const auto& u1 = us[us.size() - 1];
    const auto& u2 = us[us.size() - 2];
    std::vector<double> nx(u1.size() + 1, 0.0);
    for (std::size_t i = 0; i < u1.size(); ++i) nx[i + 1] = 2.0 * u1[i];
    for (std::size_t i = 0; i < u2.size(); ++i) nx[i] -= u2[i];
    us.push_back(nx);
  }
  std::vector<double> q(n, 0.0);
  for (int j = 0; j < n; ++j)
    for (std::size_t i = 0; i < us[j].size(); ++i) q[i] += a[j] * us[j][i];
  int deg = n - 1;
  while (deg > 0 && std::abs(q[deg]) < 1e-13) --deg;
  if (deg == 0) return {};
  // companion matrix (column-major), eigenvalues via dgeev
  std::vector<double> cm(static_cast<std::size_t>(deg) * deg, 0.0);
  for (int i = 1; i < deg; ++i) cm[i + (i - 1) * deg] = 1.0;
  for (int i = 0; i < deg; ++i) cm[i + (deg - 1) * deg] = -q[i] / q[deg];
  std::vector<double> wr(deg), wi(deg);
  const lapack_int info = LAPACKE_dgeev(LAPACK_COL_MAJOR, 'N', 'N', deg, cm.data(), deg,
                                        wr.data(), wi.data(), nullptr, 1, nullptr, 1);
  REQUIRE(info == 0);
  std::vector<double> roots;
  for (int i = 0; i < deg; ++i)
    if (std::abs(wi[i]) < 1e-9 && wr[i] > -1.0 + 1e-9 && wr[i] < 1.0 - 1e-9)
      roots.push_back(std::acos(wr[i]));
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace

TEST_CASE("boundary evaluation", "[analysis]") {
  auto [c1, s1] = eval_boundary(poly({1.0}), std::numbers::pi);
  CHECK(c1 == Approx(-1.0).margin(1e-15));
  CHECK(s1 == Approx(0.0).margin(1e-15));

  auto [c2, s2] = eval_boundary(koebe_coeffs(4), std::numbers::pi);
  CHECK(c2 == Approx(-1.0 / 3).margin(1e-13));
  CHECK(s2 == Approx(0.0).margin(1e-13));

  auto [c3, s3] = eval_boundary(poly({1.0, 1.0}), 2 * std::numbers::pi / 3);
  CHECK(c3 == Approx(-1.0).margin(1e-14));
  CHECK(s3 == Approx(0.0).margin(1e-14));
}

TEST_CASE("boundary curve conjugate symmetry", "[analysis]") {
  for (int n : {1, 3, 7, 12}) {
    const UnitPolynomial p = koebe_coeffs(n);
    for (int k = 1; k < 32; ++k) {
      const double t = two_pi * k / 32;
      auto [c, s] = eval_boundary(p, t);
      auto [cr, sr] = eval_boundary(p, two_pi - t);
      CHECK(cr == Approx(c).margin(1e-12));
      CHECK(sr == Approx(-s).margin(1e-12));
    }
  }
}

TEST_CASE("zero sets of simple cases", "[analysis]") {
  const ZeroSet z1 = zero_set(poly({1.0}));
  REQUIRE(z1.roots.size() == 2);
  CHECK(z1.kinds[0] == ZeroKind::Endpoint);
  CHECK(z1.kinds[1] == ZeroKind::Endpoint);

  // z + z^3: S = 4 sin t cos^2 t touches zero at pi/2
  const ZeroSet z3 = zero_set(poly({1.0, 0.0, 1.0}));
  REQUIRE(z3.roots.size() == 3);
  CHECK(z3.roots[1] == Approx(std::numbers::pi / 2).margin(1e-10));
  CHECK(z3.kinds[1] == ZeroKind::Tangential);

  CHECK_THROWS_AS(zero_set(poly({1.0}), 32), std::invalid_argument);
}

TEST_CASE("koebe zero sets have no interior sign change", "[analysis]") {
  for (int n = 2; n <= 30; ++n) {
    const ZeroSet zs = zero_set(koebe_coeffs(n));
    const double scale = coeff_scale(koebe_coeffs(n).coeffs);
    for (std::size_t i = 0; i < zs.roots.size(); ++i) {
      CHECK(zs.kinds[i] != ZeroKind::SignChange);
      auto [c, s] = eval_boundary(koebe_coeffs(n), zs.roots[i]);
      CHECK(std::abs(s) < 1e-11 * scale);
    }
  }
}

TEST_CASE("zero set against the companion-matrix oracle", "[analysis]") {
  std::mt19937_64 rng(314159);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    std::vector<double> a(n);
    a[0] = 1.0;
    for (int j = 1; j < n; ++j) a[j] = dist(rng);
    const std::vector<double> oracle = companion_interior_roots(a);
    const ZeroSet zs = zero_set(poly(a));
    std::vector<double> got(zs.roots.begin() + 1, zs.roots.end() - 1);
    // skip oracle roots resolution-close to the endpoints
    std::vector<double> want;
    for (double r : oracle)
      if (r > 1e-3 && r < std::numbers::pi - 1e-3) want.push_back(r);
    for (double r : want) {
      const bool found = std::any_of(got.begin(), got.end(),
                                     [r](double g) { return std::abs(g - r) < 1e-8; });
      CHECK(found);
    }
    for (double g : got) {
      const bool matched = std::any_of(oracle.begin(), oracle.end(),
                                       [g](double r) { return std::abs(g - r) < 1e-8; });
      CHECK(matched);
    }
  }
}

TEST_CASE("typically-real draws have empty interior sign-change sets", "[analysis]") {
  std::mt19937_64 rng(777);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    std::vector<double> d(n);
    for (double& v : d) v = dist(rng);
    UnitPolynomial p;
    try {
      p = coeffs_from_beta(beta_from_d(d));
    } catch (const std::domain_error&) {
      continue;  // degenerate draw
    }
    CHECK(is_typically_real(p, 1e-9));
    const ZeroSet zs = zero_set(p);
    for (ZeroKind k : zs.kinds) CHECK(k != ZeroKind::SignChange);
  }
}

TEST_CASE("objective values", "[analysis]") {
  CHECK(min_re_on_zero_set(poly({1.0})) == Approx(-1.0).margin(1e-14));
  for (int n = 2; n <= 40; ++n)
    CHECK(min_re_on_zero_set(koebe_coeffs(n)) == Approx(koebe_value(n)).margin(1e-9));
  for (int n = 1; n <= 30; ++n)
    CHECK(min_re_on_zero_set(suffridge_coeffs(n)) == Approx(suffridge_value(n)).margin(1e-9));
  // including the touch points exposes the lower-semicontinuity gap
  CHECK(objective_on_zero_set(koebe_coeffs(3), 4096, false, true) ==
        Approx(-1.0 / std::sqrt(5.0)).margin(1e-9));
}

TEST_CASE("value at z = -1 equals the optimum", "[analysis]") {
  for (int n = 1; n <= 60; ++n) {
    auto [c, s] = eval_boundary(koebe_coeffs(n), std::numbers::pi);
    CHECK(c == Approx(koebe_value(n)).margin(1e-12));
    CHECK(std::abs(s) < 1e-12);
  }
}

TEST_CASE("alternation duality", "[analysis]") {
  for (int n = 2; n <= 20; ++n) {
    const double lo = min_re_on_zero_set(koebe_coeffs(n));
    const double hi = max_re_on_zero_set(alternating_coeffs(n));
    CHECK(lo == Approx(-hi).margin(1e-10));
  }
}

TEST_CASE("typical realness", "[analysis]") {
  CHECK(is_typically_real(poly({1.0})));
  for (int n = 1; n <= 40; ++n) CHECK(is_typically_real(koebe_coeffs(n)));
  CHECK_FALSE(is_typically_real(poly({1.0, 0.0, -1.0})));  // S(pi/6) = -1/2
  CHECK_THROWS_AS(is_typically_real(poly({1.0}), 0.0), std::invalid_argument);
}

TEST_CASE("cosine minimum", "[analysis]") {
  CHECK(trig_poly_min(poly({1.0})) == Approx(-1.0).margin(1e-12));
  CHECK(trig_poly_min(fejer_cosine_coeffs(2)) == Approx(-std::sqrt(2.0) / 2).margin(1e-10));
  for (int n = 1; n <= 40; ++n) {
    CHECK(trig_poly_min(fejer_cosine_coeffs(n)) == Approx(fejer_cosine_value(n)).margin(1e-9));
    CHECK(trig_poly_min(fejer_classical_coeffs(n)) == Approx(-1.0 / n).margin(1e-9));
  }
}

TEST_CASE("boundary simplicity verdicts", "[analysis][simplicity]") {
  CHECK(is_boundary_simple(koebe_coeffs(3)).status == Simplicity::Simple);
  CHECK(is_boundary_simple(koebe_coeffs(4)).status == Simplicity::Simple);

  const SimplicityResult bad = is_boundary_simple(poly({1.0, 1.0}));
  REQUIRE(bad.status == Simplicity::Crossing);
  REQUIRE(bad.witness.has_value());
  CHECK(bad.witness->point.real() == Approx(-1.0).margin(1e-9));
  CHECK(bad.witness->point.imag() == Approx(0.0).margin(1e-9));
  CHECK(bad.witness->t == Approx(2 * std::numbers::pi / 3).margin(1e-8));
  CHECK(bad.witness->s == Approx(4 * std::numbers::pi / 3).margin(1e-8));

  CHECK_THROWS_AS(is_boundary_simple(poly({1.0}), 100), std::invalid_argument);
}

TEST_CASE("q-indexed suffridge member stays simple", "[analysis][simplicity]") {
  CHECK(is_boundary_simple(suffridge_q_coeffs(3, 2)).status == Simplicity::Simple);
}

TEST_CASE("extremal boundary touches itself at the tangential zeros", "[analysis][simplicity]") {
  const SimplicityResult r3 = is_boundary_simple(koebe_coeffs(3));
  REQUIRE(r3.contacts.size() >= 1);
  CHECK(r3.contacts[0].t == Approx(4 * std::numbers::pi / 5).margin(1e-8));
  CHECK(r3.contacts[0].point.real() == Approx(-1.0 / std::sqrt(5.0)).margin(1e-8));
}

TEST_CASE("winding numbers", "[analysis]") {
  CHECK(winding_number(poly({1.0}), Complex(0.0, 0.0)) == 1);
  CHECK(winding_number(poly({1.0}), Complex(2.0, 0.0)) == 0);
  CHECK(winding_number(koebe_coeffs(4), Complex(-1.0 / 3 + 1e-3, 0.0)) >= 1);
  CHECK_THROWS_AS(winding_number(poly({1.0}), Complex(1.0, 0.0)), std::domain_error);
}

TEST_CASE("covering reach", "[analysis]") {
  const CoveringInterval id = covering_check(poly({1.0}));
  CHECK(id.left == Approx(-1.0).margin(1e-6));
  CHECK(id.right == Approx(1.0).margin(1e-6));

  for (int n : {2, 5, 9, 14}) {
    const CoveringInterval ci = covering_check(koebe_coeffs(n));
    CHECK(ci.left <= koebe_value(n) + 1e-6);
    double f1 = 0.0;
    for (double c : koebe_coeffs(n).coeffs) f1 += c;
    CHECK(ci.right == Approx(f1).margin(1e-5 * f1));
  }
  for (int n : {1, 3, 8}) {
    const CoveringInterval ci = covering_check(suffridge_coeffs(n));
    CHECK(ci.left <= suffridge_value(n) + 1e-6);
    CHECK(ci.right >= 1.0 - 1e-6);
  }
  CHECK_THROWS_AS(covering_check(poly({1.0}), 512), std::invalid_argument);
}

TEST_CASE("radius estimates", "[analysis]") {
  CHECK(koebe_radius_estimate(poly({1.0})) == Approx(1.0).margin(1e-12));
  const double ref = 0.25 / std::pow(std::cos(std::numbers::pi / 5), 2);
  CHECK(koebe_radius_estimate(koebe_coeffs(3)) == Approx(ref).margin(1e-8));
  for (int n = 1; n <= 20; ++n)
    CHECK(koebe_radius_estimate(koebe_coeffs(n)) >= 1.0 / n - 1e-9);
}

TEST_CASE("radius is rotation invariant", "[analysis]") {
  const UnitPolynomial p = koebe_coeffs(7);
  const double base = koebe_radius_estimate(p, 8192, 0.0);
  for (double phase : {0.13, 0.37, 0.71}) {
    CHECK(koebe_radius_estimate(p, 8192, phase) == Approx(base).margin(1e-9));
  }
}

TEST_CASE("rogosinski angle", "[analysis]") {
  CHECK(rogosinski_psi(3) == Approx(std::numbers::pi / 6).margin(1e-15));
  const double psi2 = rogosinski_psi(2);
  CHECK(psi2 > std::numbers::pi / 5);
  CHECK(psi2 < std::numbers::pi / 4);
  const double g = 6 * std::sin(4 * psi2) + 4 * std::sin(6 * psi2);
  CHECK(std::abs(g) < 1e-12);
  for (int n = 1; n <= 40; ++n) {
    const double lower = 1.0 / (4 * std::pow(std::cos(std::numbers::pi / (n + 3)), 2));
    const double upper = -koebe_value(n);
    CHECK(lower < upper);
    if (n >= 2) {
      const double bound = 2 * std::cos(2 * rogosinski_psi(n));
      CHECK(koebe_coeffs(n).coeffs[1] <= bound + 1e-9);
    }
  }
}
