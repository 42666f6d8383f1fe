#ifndef KOEBE_ANALYSIS_HPP
#define KOEBE_ANALYSIS_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "koebe/extremal.hpp"

namespace koebe {

using Complex = std::complex<double>;

inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// F(e^{it}) by complex Horner over the harmonic series.
inline Complex boundary_point(const std::vector<double>& a, double t) {
  const Complex z(std::cos(t), std::sin(t));
  Complex w(0.0, 0.0);
  for (auto it = a.rbegin(); it != a.rend(); ++it) w = (w + *it) * z;
  return w;
}

/// d/dt F(e^{it}) = i sum j a_j e^{ijt}.
inline Complex boundary_derivative(const std::vector<double>& a, double t) {
  const Complex z(std::cos(t), std::sin(t));
  Complex w(0.0, 0.0);
  for (int j = static_cast<int>(a.size()); j >= 1; --j) w = (w + j * a[j - 1]) * z;
  return Complex(0.0, 1.0) * w;
}

/// The conjugate pair (C(t), S(t)) = (Re, Im) of F(e^{it}).
inline std::pair<double, double> eval_boundary(const UnitPolynomial& p, double t) {
  const Complex f = boundary_point(p.coeffs, t);
  return {f.real(), f.imag()};
}

inline double coeff_scale(const std::vector<double>& a) {
  double s = 1.0;
  for (double c : a) s += std::abs(c);
  return s;
}

/// Closed boundary curve samples over [0, 2pi).
struct BoundaryCurve {
  std::vector<double> t;
  std::vector<Complex> f;
  bool closed = true;
};

inline BoundaryCurve sample_boundary(const UnitPolynomial& p, int m, double phase = 0.0) {
  BoundaryCurve c;
  c.t.resize(m);
  c.f.resize(m);
  for (int k = 0; k < m; ++k) {
    c.t[k] = two_pi * (k + phase) / m;
    c.f[k] = boundary_point(p.coeffs, c.t[k]);
  }
  return c;
}

// ---------------------------------------------------------------------------
// Zero set of S(t) on [0, pi]
// ---------------------------------------------------------------------------

enum class ZeroKind { Endpoint, SignChange, Tangential };

inline const char* zero_kind_name(ZeroKind k) {
  switch (k) {
    case ZeroKind::Endpoint: return "endpoint";
    case ZeroKind::SignChange: return "sign-change";
    case ZeroKind::Tangential: return "tangential";
  }
  return "?";
}

struct ZeroSet {
  std::vector<double> roots;     // ascending, includes 0 and pi
  std::vector<ZeroKind> kinds;
  int resolution = 0;            // grid size used
  bool coarse_warning = false;   // two roots closer than 2pi/resolution
};

namespace detail {

inline double bisect(const std::function<double(double)>& f, double lo, double hi,
                     double width = 1e-14) {
  double flo = f(lo);
  for (int it = 0; it < 200 && hi - lo > width; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    const double fm = f(mid);
    if (flo * fm <= 0.0) {
      hi = mid;
    } else {
      lo = mid;
      flo = fm;
    }
  }
  return 0.5 * (lo + hi);
}

/// Minimize f on [lo, hi] by golden-section; f assumed unimodal there.
inline double golden_min(const std::function<double(double)>& f, double lo, double hi,
                         double width = 1e-14) {
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = hi - gr * (hi - lo), d = lo + gr * (hi - lo);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 200 && hi - lo > width; ++it) {
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - gr * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + gr * (hi - lo);
      fd = f(d);
    }
  }
  return 0.5 * (lo + hi);
}

/// Classify a refined interior root of S: expand a window until |S| rises
/// above the rounding floor on both sides, then compare signs.  Sign changes
/// that live entirely below the floor are tangential touches.
inline ZeroKind classify_root(const std::vector<double>& a, double t0, double grid_step,
                              double zero_eps) {
  double h = grid_step;
  for (int it = 0; it < 48; ++it) {
    const double tl = std::max(t0 - h, 1e-14);
    const double tr = std::min(t0 + h, std::numbers::pi - 1e-14);
    const double sl = boundary_point(a, tl).imag();
    const double sr = boundary_point(a, tr).imag();
    if (std::abs(sl) > 40.0 * zero_eps && std::abs(sr) > 40.0 * zero_eps)
      return sl * sr < 0.0 ? ZeroKind::SignChange : ZeroKind::Tangential;
    h *= 1.6;
    if (h > 0.5) break;
  }
  return ZeroKind::Tangential;
}

}  // namespace detail

/// Brackets sign changes of S on a uniform grid over (0, pi), refines each by
/// bisection, and picks up tangential zeros (|S| touching zero without a sign
/// change) from local minima of |S| refined on the analytic derivative.
/// Values of |S| at the rounding floor are treated as zero so that touch
/// points landing exactly on a grid node are not misread as sign changes.
inline ZeroSet zero_set(const UnitPolynomial& p, int m = 4096) {
  if (m < 64) throw std::invalid_argument("zero_set: grid size must be >= 64");
  const std::vector<double>& a = p.coeffs;
  const double scale = coeff_scale(a);
  const double zero_eps = 1e-12 * scale;
  const auto S = [&a](double t) { return boundary_point(a, t).imag(); };
  const auto Sp = [&a](double t) { return boundary_derivative(a, t).imag(); };

  ZeroSet out;
  for (int attempt = 0; attempt < 3; ++attempt) {
    out.roots.clear();
    out.kinds.clear();
    out.resolution = m;
    out.coarse_warning = false;
    const double step = std::numbers::pi / m;
    std::vector<double> sv(m + 1);
    for (int i = 0; i <= m; ++i) sv[i] = S(i * step);

    std::vector<std::pair<double, ZeroKind>> interior;
    auto push_root = [&](double t) {
      if (t <= 0.0 || t >= std::numbers::pi) return;
      for (const auto& r : interior)
        if (std::abs(r.first - t) < 1e-10) return;
      interior.emplace_back(t, detail::classify_root(a, t, step, zero_eps));
    };

    // roots hiding in the endpoint-adjacent intervals: there S(0) = S(pi) = 0
    // masks the sign bracket, so probe against the endpoint slope instead
    const double slope0 = boundary_derivative(a, 0.0).imag();
    const double slope_pi = boundary_derivative(a, std::numbers::pi).imag();
    if (std::abs(sv[1]) > zero_eps && std::abs(slope0) > zero_eps && slope0 * sv[1] < 0.0)
      push_root(detail::bisect(S, step * 1e-6, step, 1e-14));
    if (std::abs(sv[m - 1]) > zero_eps && std::abs(slope_pi) > zero_eps &&
        (-slope_pi) * sv[m - 1] < 0.0)
      push_root(detail::bisect(S, (m - 1) * step, std::numbers::pi - step * 1e-6, 1e-14));

    for (int i = 1; i < m; ++i) {
      const double ti = i * step;
      if (std::abs(sv[i]) <= zero_eps) {
        push_root(ti);
        continue;
      }
      if (std::abs(sv[i + 1]) > zero_eps && sv[i] * sv[i + 1] < 0.0 && ti + step < std::numbers::pi) {
        push_root(detail::bisect(S, ti, ti + step, 1e-14));
        continue;
      }
      // tangential candidate: grid-local minimum of |S| well below scale.
      // |S| at the neighbors of a touch is O(step^2), so the candidate gate
      // must be loose; acceptance happens on the refined minimum.
      if (std::abs(sv[i]) <= std::abs(sv[i - 1]) && std::abs(sv[i]) <= std::abs(sv[i + 1]) &&
          std::abs(sv[i]) < 1e-4 * scale) {
        const double t0 = detail::golden_min([&S](double t) { return std::abs(S(t)); },
                                             ti - step, ti + step);
        if (std::abs(S(t0)) < 1e-11 * scale) push_root(t0);
        // derivative-bracketed refinement as a fallback for flat touches
        else if (Sp(ti - step) * Sp(ti + step) < 0.0) {
          const double t1 = detail::bisect(Sp, ti - step, ti + step, 1e-14);
          if (std::abs(S(t1)) < 1e-11 * scale) push_root(t1);
        }
      }
    }

    std::sort(interior.begin(), interior.end());
    out.roots.push_back(0.0);
    out.kinds.push_back(ZeroKind::Endpoint);
    for (const auto& r : interior) {
      out.roots.push_back(r.first);
      out.kinds.push_back(r.second);
    }
    out.roots.push_back(std::numbers::pi);
    out.kinds.push_back(ZeroKind::Endpoint);

    for (std::size_t i = 0; i + 1 < out.roots.size(); ++i)
      if (out.roots[i + 1] - out.roots[i] < two_pi / m) out.coarse_warning = true;
    if (!out.coarse_warning || m >= 1 << 16) break;
    m *= 2;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Problem-1 objective
// ---------------------------------------------------------------------------

/// min (or max) of C over the zero set.  The objective set defaults to the
/// endpoints plus transversal sign changes of S -- the set the extremal
/// values of the theorems are attained on.  Tangential touch points can be
/// included on request; for the extremal families C dips below the theorem
/// value there, which is exactly the lower-semicontinuity gap of the problem.
inline double objective_on_zero_set(const UnitPolynomial& p, int m = 4096,
                                    bool maximize = false,
                                    bool include_tangential = false) {
  const ZeroSet zs = zero_set(p, m);
  double best = 0.0;
  bool any = false;
  for (std::size_t i = 0; i < zs.roots.size(); ++i) {
    if (!include_tangential && zs.kinds[i] == ZeroKind::Tangential) continue;
    const double c = boundary_point(p.coeffs, zs.roots[i]).real();
    if (!any || (maximize ? c > best : c < best)) {
      best = c;
      any = true;
    }
  }
  return best;
}

inline double min_re_on_zero_set(const UnitPolynomial& p, int m = 4096) {
  return objective_on_zero_set(p, m, /*maximize=*/false);
}

inline double max_re_on_zero_set(const UnitPolynomial& p, int m = 4096) {
  return objective_on_zero_set(p, m, /*maximize=*/true);
}

/// S >= -tol on a refined grid over (0, pi).  For real coefficients this is
/// the typically-real criterion.
inline bool is_typically_real(const UnitPolynomial& p, double tol = 1e-9, int m = 4096) {
  if (tol <= 0.0) throw std::invalid_argument("is_typically_real: tol must be > 0");
  const std::vector<double>& a = p.coeffs;
  const auto S = [&a](double t) { return boundary_point(a, t).imag(); };
  const double step = std::numbers::pi / m;
  double minv = S(step * 0.5);
  for (int i = 1; i < m; ++i) {
    const double s = S((i + 0.5) * step);
    minv = std::min(minv, s);
    if (minv < -tol) return false;
  }
  // refine interior minima of S via its analytic derivative
  const auto Sp = [&a](double t) { return boundary_derivative(a, t).imag(); };
  for (int i = 1; i < m; ++i) {
    const double t0 = i * step, t1 = (i + 1) * step;
    if (Sp(t0) < 0.0 && Sp(t1) > 0.0)
      minv = std::min(minv, S(detail::bisect(Sp, t0, t1, 1e-13)));
  }
  return minv >= -tol;
}

/// Global minimum of C(t) = sum a_j cos jt by grid plus derivative bisection.
inline double trig_poly_min(const UnitPolynomial& p, int m = 4096) {
  if (m < 64) throw std::invalid_argument("trig_poly_min: grid size must be >= 64");
  const std::vector<double>& a = p.coeffs;
  const auto C = [&a](double t) { return boundary_point(a, t).real(); };
  const auto Cp = [&a](double t) { return boundary_derivative(a, t).real(); };
  const double step = std::numbers::pi / m;
  double best = std::min(C(0.0), C(std::numbers::pi));
  for (int i = 0; i < m; ++i) {
    const double t0 = i * step, t1 = (i + 1) * step;
    best = std::min(best, C(t0));
    if (Cp(t0) * Cp(t1) < 0.0) best = std::min(best, C(detail::bisect(Cp, t0, t1, 1e-13)));
  }
  return best;
}

// ---------------------------------------------------------------------------
// Boundary simplicity
// ---------------------------------------------------------------------------

struct CurveWitness {
  double t = 0.0;
  double s = 0.0;
  Complex point;
};

enum class Simplicity { Simple, Crossing, Inconclusive };

inline const char* simplicity_name(Simplicity s) {
  switch (s) {
    case Simplicity::Simple: return "simple";
    case Simplicity::Crossing: return "crossing";
    case Simplicity::Inconclusive: return "inconclusive";
  }
  return "?";
}

struct SimplicityResult {
  Simplicity status = Simplicity::Simple;
  std::optional<CurveWitness> witness;   // present when status == Crossing
  std::vector<CurveWitness> contacts;    // tangential self-contacts (pinch points)
  double min_gap = 0.0;                  // smallest non-adjacent pair distance seen
  bool interior_critical_flag = false;   // |F'| small somewhere on an interior grid
  double interior_min_deriv = 0.0;
};

namespace detail {

inline double orient(const Complex& a, const Complex& b, const Complex& c) {
  return (b.real() - a.real()) * (c.imag() - a.imag()) -
         (b.imag() - a.imag()) * (c.real() - a.real());
}

inline bool proper_intersect(const Complex& p1, const Complex& p2, const Complex& p3,
                             const Complex& p4) {
  const double d1 = orient(p3, p4, p1), d2 = orient(p3, p4, p2);
  const double d3 = orient(p1, p2, p3), d4 = orient(p1, p2, p4);
  return d1 * d2 < 0.0 && d3 * d4 < 0.0;
}

inline double point_segment_dist(const Complex& p, const Complex& a, const Complex& b) {
  const Complex ab = b - a;
  const double den = std::norm(ab);
  double t = den > 0.0 ? ((p - a).real() * ab.real() + (p - a).imag() * ab.imag()) / den : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(p - (a + t * ab));
}

inline double segment_dist(const Complex& p1, const Complex& p2, const Complex& p3,
                           const Complex& p4) {
  if (proper_intersect(p1, p2, p3, p4)) return 0.0;
  return std::min(std::min(point_segment_dist(p1, p3, p4), point_segment_dist(p2, p3, p4)),
                  std::min(point_segment_dist(p3, p1, p2), point_segment_dist(p4, p1, p2)));
}

/// Local refinement of min |F(t) - F(s)| over a window pair.
struct NearMin {
  double t, s, dist;
};

inline NearMin refine_near_min(const std::vector<double>& a, double t0, double s0, double h) {
  double tlo = t0 - h, thi = t0 + h, slo = s0 - h, shi = s0 + h;
  double tb = t0, sb = s0, db = std::abs(boundary_point(a, t0) - boundary_point(a, s0));
  for (int it = 0; it < 64; ++it) {
    constexpr int K = 9;
    for (int i = 0; i < K; ++i) {
      const double t = tlo + (thi - tlo) * i / (K - 1);
      const Complex ft = boundary_point(a, t);
      for (int j = 0; j < K; ++j) {
        const double s = slo + (shi - slo) * j / (K - 1);
        const double d = std::abs(ft - boundary_point(a, s));
        if (d < db) {
          db = d;
          tb = t;
          sb = s;
        }
      }
    }
    const double wt = (thi - tlo) * 0.3, ws = (shi - slo) * 0.3;
    tlo = tb - wt;
    thi = tb + wt;
    slo = sb - ws;
    shi = sb + ws;
    if (thi - tlo < 1e-14 && shi - slo < 1e-14) break;
  }
  return {tb, sb, db};
}

enum class PairClass { Ignore, Contact, Crossing, Inconclusive };

/// Decide whether two nearly coincident arcs cross or merely touch.  The
/// second branch's signed offsets from the first branch's tangent line must
/// swap sign (crossing) or keep one sign (contact), judged against the first
/// branch's own curvature deviation over the same window.
inline PairClass classify_near_pair(const std::vector<double>& a, double scale,
                                    const NearMin& nm, double base_h, CurveWitness* w) {
  if (nm.dist > 1e-6 * scale) return PairClass::Ignore;
  Complex u = boundary_derivative(a, nm.t);
  const double un = std::abs(u);
  if (un < 1e-14 * scale) return PairClass::Inconclusive;  // cusp tip, no tangent
  u /= un;
  const Complex f0 = boundary_point(a, nm.t);
  double h = base_h;
  for (int attempt = 0; attempt < 10; ++attempt, h *= 2.0) {
    constexpr int K = 25;
    double curv = 0.0;
    for (int i = 0; i < K; ++i) {
      const double t = nm.t - h + 2.0 * h * i / (K - 1);
      curv = std::max(curv, std::abs(((boundary_point(a, t) - f0) / u).imag()));
    }
    const double noise = 1e-12 * scale;
    const double sl = ((boundary_point(a, nm.s - h) - f0) / u).imag();
    const double sr = ((boundary_point(a, nm.s + h) - f0) / u).imag();
    if (sl * sr < 0.0 && std::min(std::abs(sl), std::abs(sr)) > 3.0 * curv + 10.0 * noise) {
      if (w) *w = {nm.t, nm.s, 0.5 * (f0 + boundary_point(a, nm.s))};
      return PairClass::Crossing;
    }
    if (sl * sr > 0.0 && std::min(std::abs(sl), std::abs(sr)) > 10.0 * noise) {
      if (w) *w = {nm.t, nm.s, 0.5 * (f0 + boundary_point(a, nm.s))};
      return PairClass::Contact;
    }
  }
  return PairClass::Inconclusive;
}

}  // namespace detail

namespace detail {

/// A near pair whose windows are parameter-close is a fold of a single local
/// arc.  Folds happen exactly where the boundary has a cusp (|F'| vanishing
/// on the circle); there the two branches stay disjoint even though their
/// mutual distance decays like the cube of the parameter gap.  A tiny
/// genuine loop, by contrast, keeps |F'| of regular size throughout.
inline bool is_cusp_fold(const std::vector<double>& a, double t1, double t2) {
  double minv = 1e300, maxv = 0.0;
  constexpr int K = 129;
  for (int i = 0; i < K; ++i) {
    const double t = t1 + (t2 - t1) * i / (K - 1);
    const double v = std::abs(boundary_derivative(a, t));
    minv = std::min(minv, v);
    maxv = std::max(maxv, v);
  }
  return minv < 0.05 * maxv;
}

}  // namespace detail

/// Self-intersection scan of the closed curve F(e^{it}).
///
/// Real coefficients put every real-axis self-coincidence in bijection with
/// the interior zeros of S: a sign change of S means the curve passes
/// through the same real point transversally twice (t0 and 2pi - t0), a
/// tangential zero means the two passes merely touch.  The extremal families
/// touch themselves at every interior tangential zero, so a pure distance
/// threshold would misreport all of them; contacts keep the curve simple in
/// the open-disc sense.  Off-axis crossings are caught by a segment sweep
/// with near-coincidences classified by the side-swap test, and parameter-
/// local folds at boundary cusps (|F'| = 0 on the circle, e.g. at z = -1 for
/// every even-degree optimum) are recognized and skipped.
inline SimplicityResult is_boundary_simple(const UnitPolynomial& p, int m = 8192) {
  if (m < 512) throw std::invalid_argument("is_boundary_simple: M must be >= 512");
  const std::vector<double>& a = p.coeffs;
  const double scale = coeff_scale(a);
  SimplicityResult res;
  res.min_gap = scale;

  // interior zeros of S: transversal ones are crossings, touches are contacts
  const ZeroSet zs = zero_set(p, std::max(512, m / 2));
  for (std::size_t i = 0; i < zs.roots.size(); ++i) {
    const double t0 = zs.roots[i];
    if (zs.kinds[i] == ZeroKind::Endpoint) continue;
    const Complex pt0(boundary_point(a, t0).real(), 0.0);
    if (zs.kinds[i] == ZeroKind::SignChange) {
      res.status = Simplicity::Crossing;
      res.witness = CurveWitness{t0, two_pi - t0, pt0};
      return res;
    }
    res.contacts.push_back(CurveWitness{t0, two_pi - t0, pt0});
  }

  // half-offset sampling keeps grid nodes off the touch points
  std::vector<double> ts(m);
  std::vector<Complex> pt(m);
  for (int k = 0; k < m; ++k) {
    ts[k] = two_pi * (k + 0.5) / m;
    pt[k] = boundary_point(a, ts[k]);
  }

  double max_len = 0.0;
  for (int k = 0; k < m; ++k) max_len = std::max(max_len, std::abs(pt[(k + 1) % m] - pt[k]));
  const double band = 1e-6 * scale;
  const double cell = std::max(max_len + band, 1e-12);

  std::map<std::pair<std::int64_t, std::int64_t>, std::vector<int>> grid;
  for (int k = 0; k < m; ++k) {
    const Complex& p1 = pt[k];
    const Complex& p2 = pt[(k + 1) % m];
    const auto cx0 = static_cast<std::int64_t>(std::floor((std::min(p1.real(), p2.real()) - band) / cell));
    const auto cx1 = static_cast<std::int64_t>(std::floor((std::max(p1.real(), p2.real()) + band) / cell));
    const auto cy0 = static_cast<std::int64_t>(std::floor((std::min(p1.imag(), p2.imag()) - band) / cell));
    const auto cy1 = static_cast<std::int64_t>(std::floor((std::max(p1.imag(), p2.imag()) + band) / cell));
    for (auto cx = cx0; cx <= cx1; ++cx)
      for (auto cy = cy0; cy <= cy1; ++cy) grid[{cx, cy}].push_back(k);
  }

  const double base_h = 4.0 * two_pi / m;
  const int param_window = std::max(16, m / 48);
  bool inconclusive = false;
  std::vector<std::pair<int, int>> seen;
  auto already = [&seen](int k1, int k2) {
    return std::find(seen.begin(), seen.end(), std::make_pair(k1, k2)) != seen.end();
  };
  const std::vector<CurveWitness> axis_contacts = res.contacts;
  auto near_known_contact = [&](const Complex& q1, const Complex& q2) {
    for (const auto& c : axis_contacts)
      if (std::abs(q1 - c.point) < 16.0 * max_len && std::abs(q2 - c.point) < 16.0 * max_len)
        return true;
    return false;
  };

  for (const auto& [key, ks] : grid) {
    for (std::size_t i = 0; i < ks.size(); ++i) {
      for (std::size_t j = i + 1; j < ks.size(); ++j) {
        int k1 = std::min(ks[i], ks[j]), k2 = std::max(ks[i], ks[j]);
        const int gap = std::min(k2 - k1, m - (k2 - k1));
        if (gap <= 1) continue;
        if (already(k1, k2)) continue;
        const Complex &p1 = pt[k1], &p2 = pt[(k1 + 1) % m];
        const Complex &p3 = pt[k2], &p4 = pt[(k2 + 1) % m];
        const double dist = detail::segment_dist(p1, p2, p3, p4);
        if (dist >= band && dist > 0.0) continue;
        seen.emplace_back(k1, k2);
        res.min_gap = std::min(res.min_gap, dist);
        if (near_known_contact(p1, p3)) continue;  // accounted by a zero of S
        if (gap <= param_window) {
          // parameter-local: either a cusp fold (fine) or a micro-loop
          const double lo = std::min(ts[k1], ts[k2]) - base_h;
          const double hi = std::max(ts[k1], ts[k2]) + two_pi / m + base_h;
          if (detail::is_cusp_fold(a, lo, hi)) continue;
        }
        const detail::NearMin nm = detail::refine_near_min(
            a, ts[k1] + std::numbers::pi / m, ts[k2] + std::numbers::pi / m, base_h);
        CurveWitness w;
        switch (detail::classify_near_pair(a, scale, nm, base_h, &w)) {
          case detail::PairClass::Crossing:
            res.status = Simplicity::Crossing;
            res.witness = w;
            return res;
          case detail::PairClass::Contact: {
            bool dup = false;
            for (const auto& c : res.contacts)
              if (std::abs(c.point - w.point) < 1e-6 * scale) dup = true;
            if (!dup) res.contacts.push_back(w);
            break;
          }
          case detail::PairClass::Inconclusive:
            inconclusive = true;
            break;
          case detail::PairClass::Ignore:
            break;
        }
      }
    }
  }

  // supplementary diagnostic: |F'| on a coarse interior grid
  double mind = scale;
  for (double r = 0.15; r < 0.96; r += 0.1) {
    for (int k = 0; k < 64; ++k) {
      const double th = two_pi * k / 64;
      const Complex z = std::polar(r, th);
      Complex fp(0.0, 0.0);
      for (int j = static_cast<int>(a.size()); j >= 1; --j) fp = fp * z + j * a[j - 1];
      mind = std::min(mind, std::abs(fp));
    }
  }
  res.interior_min_deriv = mind;
  res.interior_critical_flag = mind < 1e-6;

  res.status = inconclusive ? Simplicity::Inconclusive : Simplicity::Simple;
  return res;
}

// ---------------------------------------------------------------------------
// Winding numbers and coverings
// ---------------------------------------------------------------------------

/// Cached boundary samples shared by repeated winding evaluations.
class WindingContext {
 public:
  WindingContext(const UnitPolynomial& p, int m = 4096)
      : a_(p.coeffs), scale_(coeff_scale(p.coeffs)), m_(m) {
    ts_.resize(m_ + 1);
    fs_.resize(m_ + 1);
    for (int k = 0; k <= m_; ++k) {
      ts_[k] = two_pi * k / m_;
      fs_[k] = boundary_point(a_, ts_[k]);
    }
  }

  /// Total argument change / 2pi, with per-interval increments kept below
  /// pi/2 by recursive subdivision.  Throws std::domain_error when w sits on
  /// (or within 1e-9 scale of) the sampled curve.
  int winding(const Complex& w) const {
    double total = 0.0;
    for (int k = 0; k < m_; ++k)
      total += arg_increment(ts_[k], ts_[k + 1], fs_[k] - w, fs_[k + 1] - w, w, 0);
    return static_cast<int>(std::lround(total / two_pi));
  }

  double scale() const { return scale_; }

 private:
  double arg_increment(double t1, double t2, const Complex& v1, const Complex& v2,
                       const Complex& w, int depth) const {
    if (std::abs(v1) < 1e-9 * scale_ || std::abs(v2) < 1e-9 * scale_)
      throw std::domain_error("winding_number: point on curve");
    const double cross = v1.real() * v2.imag() - v1.imag() * v2.real();
    const double dot = v1.real() * v2.real() + v1.imag() * v2.imag();
    const double d = std::atan2(cross, dot);
    if (std::abs(d) < std::numbers::pi / 2) return d;
    if (depth >= 48) throw std::domain_error("winding_number: cannot resolve near curve");
    const double tm = 0.5 * (t1 + t2);
    const Complex vm = boundary_point(a_, tm) - w;
    return arg_increment(t1, tm, v1, vm, w, depth + 1) +
           arg_increment(tm, t2, vm, v2, w, depth + 1);
  }

  const std::vector<double>& a_;
  double scale_;
  int m_;
  std::vector<double> ts_;
  std::vector<Complex> fs_;
};

inline int winding_number(const UnitPolynomial& p, const Complex& w, int m = 4096) {
  return WindingContext(p, m).winding(w);
}

/// Certified covered stretch of the real axis around 0: every probe strictly
/// between left and right had nonzero winding, to the reported resolution.
struct CoveringInterval {
  double left = 0.0;
  double right = 0.0;
  double step = 0.0;  // scan step used
};

inline CoveringInterval covering_check(const UnitPolynomial& p, int m = 1024) {
  if (m < 1024) throw std::invalid_argument("covering_check: M must be >= 1024");
  const WindingContext ctx(p, 4096);
  const double bound = ctx.scale();
  const auto covered = [&ctx](double w) {
    try {
      return ctx.winding(Complex(w, 0.0)) != 0;
    } catch (const std::domain_error&) {
      return false;  // on-curve probes stop the reach conservatively
    }
  };
  CoveringInterval out;
  out.step = bound / m;
  for (const double sgn : {-1.0, 1.0}) {
    double last = 0.0;
    double w = sgn * out.step;
    bool hit_end = true;
    while (std::abs(w) <= bound) {
      if (!covered(w)) {
        hit_end = false;
        break;
      }
      last = w;
      w += sgn * out.step;
    }
    double reach = last;
    if (!hit_end) {
      double lo = last, hi = w;
      while (std::abs(hi - lo) > 1e-9 * std::max(1.0, std::abs(lo))) {
        const double mid = 0.5 * (lo + hi);
        if (covered(mid)) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      reach = lo;
    }
    (sgn < 0 ? out.left : out.right) = reach;
  }
  return out;
}

/// min_t |F(e^{it})| -- the distance from the origin to the boundary curve --
/// with the location of the minimizer.
struct RadiusEstimate {
  double radius = 0.0;
  double t_min = 0.0;
};

inline RadiusEstimate radius_estimate_detail(const UnitPolynomial& p, int m = 8192,
                                             double phase = 0.0) {
  if (m < 1024) throw std::invalid_argument("koebe_radius_estimate: M must be >= 1024");
  const std::vector<double>& a = p.coeffs;
  // d/dt |F|^2 = 2 Re(conj(F) dF/dt)
  const auto g = [&a](double t) {
    return (std::conj(boundary_point(a, t)) * boundary_derivative(a, t)).real();
  };
  RadiusEstimate best{std::abs(boundary_point(a, two_pi * phase / m)), two_pi * phase / m};
  for (int k = 0; k < m; ++k) {
    const double t0 = two_pi * (k + phase) / m;
    const double t1 = two_pi * (k + 1 + phase) / m;
    const double f0 = std::abs(boundary_point(a, t0));
    if (f0 < best.radius) best = {f0, t0};
    if (g(t0) < 0.0 && g(t1) > 0.0) {
      const double tm = detail::bisect(g, t0, t1, 1e-13);
      const double fm = std::abs(boundary_point(a, tm));
      if (fm < best.radius) best = {fm, tm};
    }
  }
  return best;
}

inline double koebe_radius_estimate(const UnitPolynomial& p, int m = 8192,
                                    double phase = 0.0) {
  return radius_estimate_detail(p, m, phase).radius;
}

// ---------------------------------------------------------------------------
// Rogosinski-Szego angle
// ---------------------------------------------------------------------------

/// psi_N: for odd N exactly pi/(N+3); for even N the smallest positive root
/// of (N+4) sin((N+2)psi) + (N+2) sin((N+4)psi) = 0, bracketed in
/// (pi/(N+3), pi/(N+2)).
inline double rogosinski_psi(int n) {
  if (n < 1) throw std::invalid_argument("rogosinski_psi: N must be >= 1");
  if (n % 2 == 1) return std::numbers::pi / (n + 3);
  const auto g = [n](double psi) {
    return (n + 4) * std::sin((n + 2) * psi) + (n + 2) * std::sin((n + 4) * psi);
  };
  // run the bisection down to the last representable midpoint: the residual
  // of g scales with N^2, so stopping at a fixed width would leave an
  // N-dependent defect
  double lo = std::numbers::pi / (n + 3), hi = std::numbers::pi / (n + 2);
  double glo = g(lo);
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    const double gm = g(mid);
    if (glo * gm <= 0.0) {
      hi = mid;
    } else {
      lo = mid;
      glo = gm;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace koebe

#endif  // KOEBE_ANALYSIS_HPP
