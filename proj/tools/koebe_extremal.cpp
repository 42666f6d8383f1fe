// koebe-extremal: constructs the extremal polynomial families, verifies the
// closed-form theorems by independent numerical routes, scans the open
// conjectures for evidence, and emits figure data (CSV/JSON/SVG).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "koebe/analysis.hpp"
#include "koebe/extremal.hpp"
#include "koebe/io.hpp"
#include "koebe/spectral.hpp"
#include "koebe/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCounterexample = 3;
constexpr int kExitIo = 4;

struct OutputTarget {
  std::string path;  // empty -> stdout

  int write(const std::string& data) const {
    if (path.empty()) {
      std::fwrite(data.data(), 1, data.size(), stdout);
      return std::fflush(stdout) == 0 ? kExitOk : kExitIo;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) {
      std::cerr << "error: cannot open output file '" << path << "'\n";
      return kExitIo;
    }
    os.write(data.data(), static_cast<std::streamsize>(data.size()));
    os.flush();
    if (!os) {
      std::cerr << "error: write failed for '" << path << "'\n";
      return kExitIo;
    }
    return kExitOk;
  }
};

bool family_needs_q(const std::string& f) { return f == "koebe-q" || f == "suffridge-q"; }

koebe::UnitPolynomial make_family(const std::string& f, int n, std::optional<int> q) {
  using namespace koebe;
  if (f == "koebe") return koebe_coeffs(n);
  if (f == "alternating") return alternating_coeffs(n);
  if (f == "suffridge") return suffridge_coeffs(n);
  if (f == "fejer-cosine") return fejer_cosine_coeffs(n);
  if (f == "fejer-classical") return fejer_classical_coeffs(n);
  if (f == "odd") return odd_coeffs(n).expanded;
  if (f == "koebe-q") {
    if (!q) throw std::invalid_argument("family koebe-q requires --q");
    return koebe_q_coeffs(n, *q);
  }
  if (f == "suffridge-q") {
    if (!q) throw std::invalid_argument("family suffridge-q requires --q");
    return suffridge_q_coeffs(n, *q);
  }
  throw std::invalid_argument("unknown family '" + f + "'");
}

std::string csv_string(const std::vector<std::string>& header,
                       const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream os;
  koebe::write_csv(os, header, rows);
  return os.str();
}

int cmd_coeffs(const std::string& family, int n, std::optional<int> q,
               const std::string& format, const OutputTarget& out) {
  using namespace koebe;
  const UnitPolynomial p = make_family(family, n, q);
  if (format == "csv") {
    std::vector<std::vector<std::string>> rows;
    for (int j = 1; j <= p.degree(); ++j)
      rows.push_back({std::to_string(j), fmt17(p.coeffs[j - 1]), p.family,
                      normalization_name(p.normalization)});
    return out.write(csv_string({"j", "a_j", "family", "normalization"}, rows));
  }
  if (format == "json") {
    Json root = Json::object();
    root.set("family", p.family);
    root.set("normalization", normalization_name(p.normalization));
    root.set("n", n);
    if (q) root.set("q", *q);
    Json arr = Json::array();
    for (double c : p.coeffs) arr.push_back(c);
    root.set("coeffs", std::move(arr));
    return out.write(root.dump());
  }
  std::cerr << "error: coeffs supports --format csv|json\n";
  return kExitUsage;
}

int cmd_value(const std::string& family, int n, const std::string& format,
              const OutputTarget& out) {
  using namespace koebe;
  double value = 0.0;
  if (family == "koebe") value = koebe_value(n);
  else if (family == "alternating") value = -koebe_value(n);
  else if (family == "suffridge") value = suffridge_value(n);
  else if (family == "fejer-cosine") value = fejer_cosine_value(n);
  else if (family == "fejer-classical") value = fejer_classical_value(n);
  else {
    std::cerr << "error: no closed-form value for family '" << family << "'\n";
    return kExitUsage;
  }
  if (format == "csv")
    return out.write(csv_string({"family", "n", "value"},
                                {{family, std::to_string(n), fmt17(value)}}));
  Json root = Json::object();
  root.set("family", family);
  root.set("n", n);
  root.set("value", value);
  return out.write(root.dump());
}

int cmd_eigen(int n, const std::string& format, const OutputTarget& out) {
  using namespace koebe;
  const SpectralSystem sys = generalized_eigs(n);
  const std::vector<double> ref = sys.reference_eigenvalues();
  double worst = 0.0;
  for (std::size_t i = 0; i < ref.size(); ++i)
    worst = std::max(worst, std::abs(sys.eigenvalues[i] - ref[i]));
  if (format == "csv") {
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < sys.eigenvalues.size(); ++i)
      rows.push_back({std::to_string(i + 1), fmt17(sys.eigenvalues[i]), fmt17(ref[i])});
    return out.write(csv_string({"index", "lambda", "closed_form"}, rows));
  }
  Json root = Json::object();
  root.set("n", n);
  root.set("lambda_min", sys.lambda_min);
  Json ev = Json::array();
  for (double v : sys.eigenvalues) ev.push_back(v);
  root.set("eigenvalues", std::move(ev));
  Json mu = Json::array();
  for (double v : sys.mu_roots) mu.push_back(v);
  root.set("mu_roots", std::move(mu));
  Json nu = Json::array();
  for (double v : sys.nu_roots) nu.push_back(v);
  root.set("nu_roots", std::move(nu));
  root.set("closed_form_max_gap", worst);
  root.set("interlacing_ok", sys.interlacing_ok());
  return out.write(root.dump());
}

int cmd_verify(int n_min, int n_max, double tol, int jobs, bool timings,
               const OutputTarget& out) {
  using namespace koebe;
  log_info("verify N in [" + std::to_string(n_min) + ", " + std::to_string(n_max) + "]");
  const VerificationReport rep = run_verification(n_min, n_max, jobs, tol);
  const int rc = out.write(rep.to_json(timings).dump());
  if (rc != kExitOk) return rc;
  if (!rep.all_pass()) {
    for (const auto& e : rep.entries)
      if (!e.pass)
        std::cerr << "FAIL " << e.name << " N=" << e.n << " computed=" << fmt17(e.computed)
                  << " reference=" << fmt17(e.reference) << " residual=" << fmt17(e.residual)
                  << "\n";
    return kExitVerifyFailed;
  }
  return kExitOk;
}

void json_simplicity(koebe::Json& row, const koebe::SimplicityResult& sr) {
  using namespace koebe;
  row.set("boundary_simple", sr.status == Simplicity::Simple);
  row.set("status", simplicity_name(sr.status));
  row.set("contacts", static_cast<int>(sr.contacts.size()));
  row.set("interior_min_deriv", sr.interior_min_deriv);
  if (sr.witness) {
    Json w = Json::object();
    w.set("t", sr.witness->t);
    w.set("s", sr.witness->s);
    w.set("re", sr.witness->point.real());
    w.set("im", sr.witness->point.imag());
    row.set("witness", std::move(w));
  }
}

int cmd_scan(int id, int n_min, int n_max, int samples, double tol, const OutputTarget& out) {
  using namespace koebe;
  Json root = Json::object();
  root.set("conjecture", id);
  root.set("n_min", n_min);
  root.set("n_max", n_max);
  root.set("note", "numerical evidence only; nothing here is a proof");
  Json rows = Json::array();
  bool counterexample = false;

  const auto scan_simplicity = [&](const UnitPolynomial& p, int n, std::optional<int> q) {
    const SimplicityResult sr = is_boundary_simple(p, samples);
    Json row = Json::object();
    row.set("n", n);
    if (q) row.set("q", *q);
    row.set("family", p.family);
    json_simplicity(row, sr);
    rows.push_back(std::move(row));
    if (sr.status == Simplicity::Crossing) counterexample = true;
  };

  switch (id) {
    case 1:
      for (int n = n_min; n <= n_max; ++n) scan_simplicity(koebe_coeffs(n), n, std::nullopt);
      break;
    case 2: {
      const auto radius_row = [&](const UnitPolynomial& p, int n) {
        const SimplicityResult sr = is_boundary_simple(p, samples);
        const double ref = -koebe_value(n);
        Json row = Json::object();
        row.set("n", n);
        row.set("family", p.family);
        row.set("boundary_simple", sr.status == Simplicity::Simple);
        if (sr.status == Simplicity::Simple) {
          const double r = koebe_radius_estimate(p);
          row.set("radius", r);
          row.set("reference", ref);
          row.set("margin", r - ref);
          if (r < ref - tol) counterexample = true;
        }
        rows.push_back(std::move(row));
      };
      for (int n = n_min; n <= n_max; ++n) {
        radius_row(koebe_coeffs(n), n);
        // Suffridge polynomial rescaled to the a_1 = 1 normalization
        UnitPolynomial sf = suffridge_coeffs(n);
        const double a1 = sf.coeffs[0];
        for (double& c : sf.coeffs) c /= a1;
        sf.normalization = Normalization::FirstCoeffOne;
        sf.family = "suffridge-rescaled";
        radius_row(sf, n);
      }
      break;
    }
    case 4:
      for (int n = n_min; n <= n_max; ++n)
        for (int q = 1; q <= n; ++q) scan_simplicity(koebe_q_coeffs(n, q), n, q);
      break;
    case 5:
      for (int n = std::max(1, n_min); n <= n_max; ++n) {
        const OddPolynomial op = odd_coeffs(n);
        const ZeroSet zs = zero_set(op.expanded, samples);
        double cmin = 0.0, cmax = 0.0, cabs = 0.0;
        bool any = false;
        for (std::size_t i = 0; i < zs.roots.size(); ++i) {
          if (zs.kinds[i] == ZeroKind::Tangential) continue;
          const double c = boundary_point(op.expanded.coeffs, zs.roots[i]).real();
          if (!any) {
            cmin = cmax = c;
            cabs = std::abs(c);
            any = true;
          }
          cmin = std::min(cmin, c);
          cmax = std::max(cmax, c);
          cabs = std::max(cabs, std::abs(c));
        }
        const double y0 = std::cos(std::numbers::pi / (2 * n + 2));
        Json row = Json::object();
        row.set("n", n);
        row.set("min_c", cmin);
        row.set("max_c", cmax);
        row.set("max_abs_c", cabs);
        row.set("reference_half_sec2", 0.5 / (y0 * y0));
        rows.push_back(std::move(row));
      }
      break;
    case 6: {
      // |a_j| of univalent test families against the coefficient bound; a
      // simple member with |a_j| > j would contradict the bound for every N
      const auto bound_rows = [&](UnitPolynomial p, int n) {
        const SimplicityResult sr = is_boundary_simple(p, samples);
        const UnitPolynomial ref = koebe_coeffs(n);
        for (int j = 2; j <= std::min(n, 6); ++j) {
          Json row = Json::object();
          row.set("family", p.family);
          row.set("n", n);
          row.set("j", j);
          row.set("boundary_simple", sr.status == Simplicity::Simple);
          row.set("abs_a_j", std::abs(p.coeffs[j - 1]));
          row.set("bound_same_degree", ref.coeffs[j - 1]);
          row.set("bound_limit", static_cast<double>(j));
          row.set("margin_same_degree", ref.coeffs[j - 1] - std::abs(p.coeffs[j - 1]));
          row.set("margin_limit", j - std::abs(p.coeffs[j - 1]));
          if (sr.status == Simplicity::Simple && std::abs(p.coeffs[j - 1]) > j + tol)
            counterexample = true;
          rows.push_back(std::move(row));
        }
      };
      for (int n = std::max(2, n_min); n <= n_max; ++n) {
        UnitPolynomial sf = suffridge_coeffs(n);
        const double a1 = sf.coeffs[0];
        for (double& c : sf.coeffs) c /= a1;
        sf.family = "suffridge-rescaled";
        bound_rows(std::move(sf), n);
        for (int q = 2; q <= n; ++q) bound_rows(koebe_q_coeffs(n, q), n);
      }
      break;
    }
    default:
      std::cerr << "error: unknown conjecture id " << id << " (known: 1, 2, 4, 5, 6)\n";
      return kExitUsage;
  }

  root.set("counterexample_found", counterexample);
  root.set("rows", std::move(rows));
  const int rc = out.write(root.dump());
  if (rc != kExitOk) return rc;
  return counterexample ? kExitCounterexample : kExitOk;
}

int cmd_boundary(const std::string& family, const std::string& family2, int n,
                 std::optional<int> q, int samples, const std::string& format,
                 const OutputTarget& out) {
  using namespace koebe;
  std::vector<UnitPolynomial> fams;
  fams.push_back(make_family(family, n, q));
  if (!family2.empty()) fams.push_back(make_family(family2, n, q));

  std::vector<BoundaryCurve> curves;
  for (const auto& p : fams) curves.push_back(sample_boundary(p, samples));

  if (format == "csv") {
    std::vector<std::string> header{"t"};
    for (const auto& p : fams) {
      header.push_back("re_" + p.family);
      header.push_back("im_" + p.family);
    }
    std::vector<std::vector<std::string>> rows;
    for (int k = 0; k < samples; ++k) {
      std::vector<std::string> row{fmt17(curves[0].t[k])};
      for (const auto& c : curves) {
        row.push_back(fmt17(c.f[k].real()));
        row.push_back(fmt17(c.f[k].imag()));
      }
      rows.push_back(std::move(row));
    }
    return out.write(csv_string(header, rows));
  }
  if (format == "svg") {
    const char* colors[] = {"#cc2222", "#2244cc"};
    std::vector<SvgCurve> sc;
    for (std::size_t i = 0; i < curves.size(); ++i) {
      SvgCurve c;
      c.label = fams[i].family;
      c.color = colors[i % 2];
      for (int k = 0; k < samples; ++k)
        c.points.emplace_back(curves[i].f[k].real(), curves[i].f[k].imag());
      sc.push_back(std::move(c));
    }
    std::ostringstream os;
    write_svg(os, sc);
    return out.write(os.str());
  }
  if (format == "json") {
    Json root = Json::object();
    root.set("n", n);
    Json arr = Json::array();
    for (std::size_t i = 0; i < curves.size(); ++i) {
      Json jc = Json::object();
      jc.set("family", fams[i].family);
      Json pts = Json::array();
      for (int k = 0; k < samples; ++k) {
        Json p = Json::array();
        p.push_back(curves[i].t[k]);
        p.push_back(curves[i].f[k].real());
        p.push_back(curves[i].f[k].imag());
        pts.push_back(std::move(p));
      }
      jc.set("samples", std::move(pts));
      arr.push_back(std::move(jc));
    }
    root.set("curves", std::move(arr));
    return out.write(root.dump());
  }
  std::cerr << "error: boundary supports --format csv|svg|json\n";
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extremal polynomials for the Koebe-radius problem: construction, "
               "verification, conjecture scans and figure data"};
  app.require_subcommand(1);

  std::string family = "koebe", family2, format = "json", out_path;
  int n = 0, n_min = 1, n_max = 10, samples = 8192, jobs = 1, conj_id = 0;
  std::optional<int> q;
  double tol = 0.0;
  bool timings = false;

  int q_raw = -1;

  auto* coeffs = app.add_subcommand("coeffs", "print the coefficient vector of a family");
  coeffs->add_option("--family", family)->required();
  coeffs->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  coeffs->add_option("--q", q_raw);
  coeffs->add_option("--format", format);
  coeffs->add_option("--out", out_path);

  auto* value = app.add_subcommand("value", "print the closed-form extremal value");
  value->add_option("--family", family)->required();
  value->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  value->add_option("--format", format);
  value->add_option("--out", out_path);

  auto* eigen = app.add_subcommand("eigen", "generalized eigenvalues of the (I-A, I-B) pencil");
  eigen->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  eigen->add_option("--format", format);
  eigen->add_option("--out", out_path);

  auto* verify = app.add_subcommand("verify", "run the theorem-verification suite");
  verify->add_option("--n-min", n_min)->check(CLI::PositiveNumber);
  verify->add_option("--n-max", n_max)->check(CLI::PositiveNumber);
  verify->add_option("--tol", tol)->check(CLI::NonNegativeNumber);
  verify->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  verify->add_flag("--timings", timings, "include wall time per entry in the report");
  verify->add_option("--out", out_path);

  auto* scan = app.add_subcommand("scan-conjecture", "gather numerical evidence for a conjecture");
  scan->add_option("--id", conj_id)->required();
  scan->add_option("--n-min", n_min)->check(CLI::PositiveNumber);
  scan->add_option("--n-max", n_max)->check(CLI::PositiveNumber);
  scan->add_option("--samples", samples);
  scan->add_option("--tol", tol);
  scan->add_option("--out", out_path);

  auto* boundary = app.add_subcommand("boundary", "sample the boundary curve F(e^{it})");
  boundary->add_option("--family", family)->required();
  boundary->add_option("--family2", family2);
  boundary->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  boundary->add_option("--q", q_raw);
  boundary->add_option("--samples", samples);
  boundary->add_option("--format", format);
  boundary->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  if (q_raw >= 0) q = q_raw;
  const OutputTarget out{out_path};

  try {
    if (*coeffs) return cmd_coeffs(family, n, q, format, out);
    if (*value) return cmd_value(family, n, format, out);
    if (*eigen) return cmd_eigen(n, format, out);
    if (*verify) {
      if (n_min < 1 || n_min > n_max) {
        std::cerr << "error: need 1 <= n-min <= n-max\n";
        return kExitUsage;
      }
      return cmd_verify(n_min, n_max, tol, jobs, timings, out);
    }
    if (*scan) {
      if (n_min < 1 || n_min > n_max) {
        std::cerr << "error: need 1 <= n-min <= n-max\n";
        return kExitUsage;
      }
      if (samples < 512) {
        std::cerr << "error: --samples must be >= 512 for scans\n";
        return kExitUsage;
      }
      if (tol <= 0.0) tol = 1e-9;
      return cmd_scan(conj_id, n_min, n_max, samples, tol, out);
    }
    if (*boundary) {
      if (samples < 64) {
        std::cerr << "error: --samples must be >= 64\n";
        return kExitUsage;
      }
      return cmd_boundary(family, family2, n, q, samples, format, out);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
  return kExitUsage;
}
