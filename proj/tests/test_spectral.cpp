#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "koebe/spectral.hpp"

using namespace koebe;
using Catch::Approx;

namespace {

// independent determinant oracle: plain Gaussian elimination with partial
// pivoting (the module computes its seeds by cofactor expansion instead)
double lu_det(std::vector<std::vector<double>> m) {
  const int n = static_cast<int>(m.size());
  double det = 1.0;
  for (int c = 0; c < n; ++c) {
    int piv = c;
    for (int r = c + 1; r < n; ++r)
      if (std::abs(m[r][c]) > std::abs(m[piv][c])) piv = r;
    if (m[piv][c] == 0.0) return 0.0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (int r = c + 1; r < n; ++r) {
      const double f = m[r][c] / m[c][c];
      for (int k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

}  // namespace

TEST_CASE("determinant seeds agree with closed form and LU", "[spectral]") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> dist(-0.9, 0.9);
  for (int trial = 0; trial < 20; ++trial) {
    double x = dist(rng);
    if (std::abs(x) < 1e-2) x = 0.42;
    for (int j = 1; j <= 5; ++j) {
      const double seed = phi_det_recurrence(j, x);
      const double closed = phi_det_closed(j, x);
      const double lu = lu_det(phi_dense(j, x));
      CHECK(seed == Approx(closed).margin(1e-11 * (1 + std::abs(closed))));
      CHECK(seed == Approx(lu).margin(1e-11 * (1 + std::abs(lu))));
    }
  }
}

TEST_CASE("determinant recurrence examples", "[spectral]") {
  CHECK(phi_det_recurrence(1, 0.3) == Approx(-0.64).margin(1e-15));
  CHECK(phi_det_closed(1, 0.3) == Approx(-0.64).margin(1e-12));
  CHECK(phi_det_recurrence(8, 0.37) ==
        Approx(phi_det_closed(8, 0.37)).epsilon(1e-9));
  CHECK_THROWS_AS(phi_det_closed(3, 0.0), std::domain_error);
  CHECK_THROWS_AS(phi_det_recurrence(0, 0.5), std::invalid_argument);
}

TEST_CASE("route equality at random points, N = 1..14", "[spectral]") {
  std::mt19937_64 rng(123);
  std::uniform_real_distribution<double> dist(-0.95, 0.95);
  for (int n = 1; n <= 14; ++n) {
    for (int trial = 0; trial < 100; ++trial) {
      double x = dist(rng);
      if (std::abs(x) < 1e-3) x = 0.5;
      const double r = phi_det_recurrence(n, x);
      const double c = phi_det_closed(n, x);
      CHECK(std::abs(r - c) / std::max({std::abs(r), std::abs(c), 1e-6}) < 1e-8);
    }
  }
}

TEST_CASE("determinant vanishes at the closed-form roots", "[spectral]") {
  for (int n = 6; n <= 14; ++n) {
    const ChebNode nd = node(n);
    const double scale = phi_det_recurrence_scale(n, nd.x0);
    CHECK(std::abs(phi_det_recurrence(n, nd.x0)) < 1e-9 * scale);
  }
  for (int n = 2; n <= 20; ++n) {
    const double mu1 = std::cos(std::numbers::pi / (n + 2));
    CHECK(std::abs(phi_det_closed(n, mu1)) < 1e-9 * phi_det_recurrence_scale(n, mu1));
  }
  // every positive zero of U'_4 is a root at N = 3
  for (double nu : nu_roots(3))
    CHECK(std::abs(phi_det_closed(3, nu)) < 1e-12);
}

TEST_CASE("generalized eigenvalues and Corollary roots", "[spectral]") {
  const SpectralSystem s2 = generalized_eigs(2);
  CHECK(s2.lambda_min == Approx(0.5).margin(1e-12));
  REQUIRE(s2.mu_roots.size() == 1);
  REQUIRE(s2.nu_roots.size() == 1);
  CHECK(s2.mu_roots[0] == Approx(std::sqrt(2.0) / 2).margin(1e-14));
  CHECK(s2.nu_roots[0] == Approx(1.0 / std::sqrt(6.0)).margin(1e-12));
  CHECK(s2.nu_roots[0] < s2.mu_roots[0]);  // even-N ordering 0 < nu_1 < mu_1

  CHECK(generalized_eigs(4).lambda_min == Approx(1.0 / 3).margin(1e-12));

  for (int n : {1, 2, 3, 5, 8, 13, 21, 30, 64, 100}) {
    const SpectralSystem sys = generalized_eigs(n);
    const auto ref = sys.reference_eigenvalues();
    REQUIRE(static_cast<int>(ref.size()) == n);
    for (int i = 0; i < n; ++i) CHECK(sys.eigenvalues[i] == Approx(ref[i]).margin(1e-9));
    CHECK(sys.interlacing_ok());
    CHECK(sys.eigenvalues.front() > 0.0);
    const ChebNode nd = node(n);
    CHECK(sys.lambda_min == Approx(0.25 / (nd.x0 * nd.x0)).margin(1e-10));
  }
}

TEST_CASE("all generalized eigenvalues stay positive", "[spectral]") {
  for (int n = 1; n <= 100; ++n)
    CHECK(generalized_eigs(n, /*with_vector=*/false).eigenvalues.front() > 0.0);
}

TEST_CASE("large-order eigensolve stays fast and sane", "[spectral]") {
  const SpectralSystem sys = generalized_eigs(2000, /*with_vector=*/false);
  const ChebNode nd = node(2000);
  CHECK(sys.lambda_min == Approx(0.25 / (nd.x0 * nd.x0)).margin(1e-9));
  CHECK(sys.eigenvalues.front() > 0.0);
}

TEST_CASE("delta0 family", "[spectral]") {
  const auto d2 = delta0(2);
  CHECK(d2[0] == Approx(std::sqrt(2.0)).margin(1e-14));
  CHECK(d2[1] == Approx(std::sqrt(2.0)).margin(1e-14));

  const auto d3 = delta0(3);
  CHECK(d3[0] == Approx(1.6180339887).margin(1e-9));
  CHECK(d3[1] == Approx(2.6180339887).margin(1e-9));
  CHECK(d3[0] == Approx(d3[2]).margin(1e-14));  // U_{N-j} symmetry

  for (int n = 2; n <= 50; ++n) {
    const ChebNode nd = node(n);
    CHECK(pencil_residual(delta0(n), 0.25 / (nd.x0 * nd.x0)) < 1e-10);
  }
}

TEST_CASE("numerical eigenvector spans the delta0 line", "[spectral]") {
  for (int n = 2; n <= 50; ++n) {
    const SpectralSystem sys = generalized_eigs(n);
    const auto d = delta0(n);
    REQUIRE(!sys.lambda_min_vector.empty());
    const double v0 = sys.lambda_min_vector[0];
    REQUIRE(std::abs(v0) > 1e-14);
    for (int i = 0; i < n; ++i)
      CHECK(sys.lambda_min_vector[i] / v0 == Approx(d[i] / d[0]).margin(1e-8));
  }
}

TEST_CASE("beta_from_d examples", "[spectral]") {
  const AutocorrelationVector b = beta_from_d({1 / std::sqrt(2.0), 1 / std::sqrt(2.0)});
  REQUIRE(b.beta.size() == 4);
  CHECK(b.beta[0] == Approx(1.0).margin(1e-15));
  CHECK(b.beta[1] == Approx(0.5).margin(1e-15));
  CHECK(b.beta[2] == 0.0);
  CHECK(b.beta[3] == 0.0);

  const AutocorrelationVector imp = beta_from_d({1.0, 0.0, 0.0});
  CHECK(imp.beta == std::vector<double>{1.0, 0.0, 0.0, 0.0, 0.0});

  CHECK_THROWS_AS(beta_from_d({}), std::invalid_argument);
}

TEST_CASE("beta closed forms at the node", "[spectral]") {
  for (int n = 2; n <= 40; ++n) {
    const ChebNode nd = node(n);
    const AutocorrelationVector ac = beta_from_d(delta0(n));
    const double ref02 = (n + 2) * nd.x0 * nd.x0 / (1 - nd.x0 * nd.x0);
    CHECK(ac.beta[0] - ac.beta[2] == Approx(ref02).epsilon(1e-9));
    for (int k = 1; k <= n; ++k) {
      const double ref = nd.x0 * u_eval(k - 1, nd.x0) * u_deriv(n - k + 1, nd.x0);
      CHECK(ac.beta[k - 1] - ac.beta[k + 1] == Approx(ref).epsilon(1e-9));
    }
  }
}

TEST_CASE("autocorrelation cosine polynomial is nonnegative", "[spectral]") {
  // beta_0 + 2 sum beta_k cos kt = |sum d_j e^{i(j-1)t}|^2 >= 0
  std::mt19937_64 rng(5150);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    std::vector<double> d(n);
    for (double& v : d) v = dist(rng);
    const AutocorrelationVector ac = beta_from_d(d);
    double sum_sq = 0.0;
    for (double v : d) sum_sq += v * v;
    CHECK(ac.beta[0] == Approx(sum_sq).margin(1e-13 * (1 + sum_sq)));
    for (int i = 0; i <= 512; ++i) {
      const double t = std::numbers::pi * i / 512;
      double c = ac.beta[0];
      for (int k = 1; k < n; ++k) c += 2 * ac.beta[k] * std::cos(k * t);
      CHECK(c >= -1e-11 * (1 + sum_sq));
    }
  }
}
