// gkf-kit command-line tool: expected-Euler-characteristic tables, Monte
// Carlo tube-volume validation of the closed forms, and end-to-end grid
// simulation experiments.
#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "gkf/euler_char.hpp"
#include "gkf/field_sim.hpp"
#include "gkf/gkf.hpp"
#include "gkf/gmf.hpp"
#include "gkf/lkc.hpp"
#include "gkf/parallel.hpp"
#include "gkf/rng.hpp"
#include "gkf/special_fn.hpp"
#include "gkf/tube_oracle.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDisagree = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

struct GlobalOpts {
  std::uint64_t seed = 12345;
  std::string threads = "auto";
  std::string output;
  std::string format = "csv";
  bool no_timestamp = false;
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

// Tabular report serializable as versioned CSV or as JSON with the same
// resolved-config echo in the header.
struct Report {
  std::vector<std::pair<std::string, std::string>> config;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  json extra = json::object();

  void cfg(const std::string& k, const std::string& v) {
    config.emplace_back(k, v);
  }
  void row(std::vector<std::string> r) { rows.push_back(std::move(r)); }

  void write(const GlobalOpts& g) const {
    std::ostringstream out;
    if (g.format == "json") {
      json j;
      j["version"] = "gkf-kit v1";
      for (const auto& [k, v] : config) j["config"][k] = v;
      if (!g.no_timestamp)
        j["timestamp"] = static_cast<long long>(std::time(nullptr));
      j["columns"] = columns;
      j["rows"] = rows;
      for (auto it = extra.begin(); it != extra.end(); ++it)
        j[it.key()] = it.value();
      out << j.dump(2) << "\n";
    } else {
      out << "# gkf-kit v1\n";
      for (const auto& [k, v] : config) out << "# " << k << " = " << v << "\n";
      if (!g.no_timestamp)
        out << "# timestamp = " << std::time(nullptr) << "\n";
      for (std::size_t i = 0; i < columns.size(); ++i)
        out << columns[i] << (i + 1 == columns.size() ? "\n" : ",");
      for (const auto& r : rows)
        for (std::size_t i = 0; i < r.size(); ++i)
          out << r[i] << (i + 1 == r.size() ? "\n" : ",");
    }
    if (g.output.empty()) {
      std::cout << out.str();
    } else {
      std::ofstream f(g.output, std::ios::binary);
      if (!f) throw std::runtime_error("cannot open output file " + g.output);
      f << out.str();
    }
  }
};

std::string family_param_string(const std::string& family,
                                const std::vector<double>& params) {
  std::string s;
  for (double p : params) {
    if (!s.empty()) s += ';';
    s += fmt(p);
  }
  return s;
}

// ---------------------------------------------------------------- table ----
struct TableArgs {
  std::string family;
  int k = 2, k1 = 2, k2 = 2;
  double rho = 0.0, alpha = 1.0;
  std::vector<double> levels;
  std::vector<int> orders;
};

std::vector<double> family_params(const std::string& family,
                                  const TableArgs& a) {
  if (family == "gaussian") return {};
  if (family == "chi2") return {static_cast<double>(a.k)};
  if (family == "noncentral-chi2")
    return {static_cast<double>(a.k), a.alpha};
  if (family == "f")
    return {static_cast<double>(a.k1), static_cast<double>(a.k2)};
  if (family == "conjunction") return {a.rho};
  throw CLI::ValidationError("--family", "unknown family '" + family + "'");
}

int run_table(const GlobalOpts& g, const TableArgs& a) {
  std::vector<double> params = family_params(a.family, a);
  Report rep;
  rep.cfg("command", "table");
  rep.cfg("family", a.family);
  rep.cfg("params", family_param_string(a.family, params));
  rep.cfg("seed", std::to_string(g.seed));
  rep.columns = {"family", "params", "u", "j", "ec_density",
                 "gmf_coefficient"};
  int max_order = 0;
  for (int j : a.orders) max_order = std::max(max_order, j);
  for (double u : a.levels) {
    std::vector<double> rho = gkf::ec_densities(a.family, u, max_order, params);
    for (int j : a.orders) {
      double m = rho[j] * std::pow(2.0 * M_PI, 0.5 * j);
      rep.row({a.family, family_param_string(a.family, params), fmt(u),
               std::to_string(j), fmt(rho[j]), fmt(m)});
    }
  }
  rep.write(g);
  return kExitOk;
}

// --------------------------------------------------------------- oracle ----
struct OracleArgs {
  std::string domain;
  double level = 1.0;
  int k = 2, k1 = 2, k2 = 2;
  double rho = 0.0, alpha = 1.0;
  int orders = 2;
  std::vector<double> radii;
  double r_max = 0.25;
  int n_radii = 16;
  std::uint64_t n_samples = 1000000;
};

int run_oracle(const GlobalOpts& g, const OracleArgs& a) {
  std::vector<double> radii = a.radii;
  if (radii.empty())
    for (int i = 1; i <= a.n_radii; ++i)
      radii.push_back(a.r_max * i / a.n_radii);
  if (static_cast<int>(radii.size()) < 2 * (a.orders + 2))
    throw CLI::ValidationError(
        "--radii", "need at least 2(J+2) radii for order " +
                       std::to_string(a.orders));

  gkf::Domain dom;
  gkf::GmfSeries closed;
  std::vector<double> alt_apex_closed;  // conjunction diagnostic only
  if (a.domain == "half-space") {
    Eigen::VectorXd z = Eigen::VectorXd::Zero(a.k);
    z(0) = 1.0;
    dom = gkf::HalfSpace{z, a.level};
  } else if (a.domain == "ball-complement") {
    dom = gkf::BallComplement{a.k, a.level};
  } else if (a.domain == "noncentral") {
    Eigen::VectorXd c = Eigen::VectorXd::Zero(a.k);
    c(0) = std::sqrt(a.alpha);
    dom = gkf::NoncentralBallComplement{a.k, c, a.level};
  } else if (a.domain == "f") {
    dom = gkf::FRegion{a.k1, a.k2, a.level};
  } else if (a.domain == "cone") {
    dom = gkf::conjunction_cone_params(a.level, a.rho);
    alt_apex_closed.resize(a.orders + 1);
    gkf::GmfSeries pa =
        gkf::gmf_cone2(gkf::conjunction_cone_alt_apex(a.level, a.rho),
                       a.orders);
    for (int j = 0; j <= a.orders; ++j) alt_apex_closed[j] = pa[j];
  } else {
    throw CLI::ValidationError("--domain",
                               "unknown domain '" + a.domain + "'");
  }
  closed = gkf::gmf_series(dom, a.orders);

  gkf::TubeCurve curve = gkf::mc_tube_curve(dom, radii, a.n_samples, g.seed);
  gkf::CoefficientFit fit = gkf::fit_tube_coefficients(curve, a.orders);

  Report rep;
  rep.cfg("command", "oracle");
  rep.cfg("domain", a.domain);
  rep.cfg("level", fmt(a.level));
  rep.cfg("orders", std::to_string(a.orders));
  rep.cfg("n_samples", std::to_string(a.n_samples));
  rep.cfg("seed", std::to_string(g.seed));
  rep.columns = {"j", "closed_form", "fitted", "fitted_se", "z"};
  bool ok = true;
  json diag = json::array();
  for (int j = 0; j <= a.orders; ++j) {
    double se = std::sqrt(fit.covariance(j, j));
    double z = (fit.coefficients[j] - closed[j]) / se;
    if (std::abs(z) > 3.0) ok = false;
    rep.row({std::to_string(j), fmt(closed[j]), fmt(fit.coefficients[j]),
             fmt(se), fmt(z)});
    if (!alt_apex_closed.empty()) {
      double zp = (fit.coefficients[j] - alt_apex_closed[j]) / se;
      diag.push_back({{"j", j},
                      {"alt_apex_closed_form", alt_apex_closed[j]},
                      {"z", zp}});
    }
  }
  if (!alt_apex_closed.empty()) rep.extra["alt_apex_diagnostic"] = diag;
  rep.extra["fit_condition"] = fit.condition;
  rep.write(g);
  return ok ? kExitOk : kExitDisagree;
}

// ------------------------------------------------------------- simulate ----
struct SimulateArgs {
  std::string family = "gaussian";
  int k = 2, k1 = 2, k2 = 2;
  double rho = 0.0, alpha = 1.0;
  int n = 256;
  double spacing = 1.0;
  double scale = 8.0;
  std::string topology = "torus";
  std::vector<double> levels;
  int replicates = 0;
  std::string histogram_output;
};

std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t rep,
                       std::uint64_t comp) {
  return seed + 0x9E3779B97F4A7C15ull * (rep * 64 + comp + 1);
}

int run_simulate(const GlobalOpts& g, const SimulateArgs& a) {
  if (a.replicates <= 0)
    throw CLI::ValidationError("--replicates", "must be positive");
  if (a.topology != "torus" && a.topology != "rectangle")
    throw CLI::ValidationError("--topology", "torus or rectangle");
  const gkf::Topology topo = a.topology == "torus" ? gkf::Topology::torus
                                                   : gkf::Topology::rectangle;
  TableArgs fam;
  fam.k = a.k;
  fam.k1 = a.k1;
  fam.k2 = a.k2;
  fam.rho = a.rho;
  fam.alpha = a.alpha;
  std::vector<double> params = family_params(a.family, fam);

  int n_components = 1;
  gkf::PointwiseMap map = gkf::LinearMap{{1.0}};
  if (a.family == "chi2") {
    n_components = a.k;
    map = gkf::SumOfSquares{};
  } else if (a.family == "noncentral-chi2") {
    n_components = a.k;
    std::vector<double> shift(a.k, 0.0);
    shift[0] = std::sqrt(a.alpha);
    map = gkf::ShiftedSumOfSquares{shift};
  } else if (a.family == "f") {
    n_components = a.k1 + a.k2;
    map = gkf::FRatioMap{a.k1, a.k2};
  } else if (a.family == "conjunction") {
    n_components = 2;
    map = gkf::ConjunctionMin{a.rho};
  }

  gkf::SpectralModel model{a.scale};
  std::vector<gkf::FieldGrid> base_fields;  // component 0 of each replicate
  std::vector<std::vector<long long>> chis(a.levels.size());
  for (int rep = 0; rep < a.replicates; ++rep) {
    std::vector<gkf::FieldGrid> comps;
    for (int c = 0; c < n_components; ++c)
      comps.push_back(gkf::synthesize_field(model, a.n, a.spacing, topo,
                                            sub_seed(g.seed, rep, c)));
    base_fields.push_back(comps[0]);
    gkf::FieldGrid f = gkf::derived_field(map, comps);
    for (std::size_t li = 0; li < a.levels.size(); ++li)
      chis[li].push_back(
          gkf::euler_char_2d(gkf::excursion_mask(f, a.levels[li])));
  }
  gkf::Mu2Estimate mu2 = gkf::mu2_empirical(base_fields);

  const double T = a.n * a.spacing;
  gkf::LkcVector lkc = topo == gkf::Topology::torus
                           ? gkf::lkc_flat_torus2(T, mu2.mu2)
                           : gkf::lkc_box({T, T}, mu2.mu2);

  Report rep;
  rep.cfg("command", "simulate");
  rep.cfg("family", a.family);
  rep.cfg("params", family_param_string(a.family, params));
  rep.cfg("topology", a.topology);
  rep.cfg("n", std::to_string(a.n));
  rep.cfg("spacing", fmt(a.spacing));
  rep.cfg("scale", fmt(a.scale));
  rep.cfg("replicates", std::to_string(a.replicates));
  rep.cfg("seed", std::to_string(g.seed));
  rep.cfg("mu2_empirical", fmt(mu2.mu2));
  rep.cfg("mu2_analytic", fmt(model.mu2_analytic()));
  rep.columns = {"u", "predicted_chi", "empirical_mean", "se", "z"};
  bool ok = true;
  json hists = json::object();
  for (std::size_t li = 0; li < a.levels.size(); ++li) {
    double u = a.levels[li];
    double pred = gkf::expected_euler_char(lkc, a.family, u, params)
                      .expected_chi;
    double mean = 0.0;
    for (long long c : chis[li]) mean += static_cast<double>(c);
    mean /= a.replicates;
    double var = 0.0;
    for (long long c : chis[li]) var += (c - mean) * (c - mean);
    var /= std::max(1, a.replicates - 1);
    double se = std::sqrt(var / a.replicates);
    double z = (mean - pred) / se;
    if (std::abs(z) > 3.0) ok = false;
    rep.row({fmt(u), fmt(pred), fmt(mean), fmt(se), fmt(z)});

    std::map<long long, int> hist;
    for (long long c : chis[li]) ++hist[c];
    json h = json::array();
    for (const auto& [chi, count] : hist)
      h.push_back({{"chi", chi}, {"count", count}});
    hists[fmt(u)] = h;
  }
  rep.extra["histograms"] = hists;
  rep.write(g);

  if (!a.histogram_output.empty()) {
    std::ofstream f(a.histogram_output, std::ios::binary);
    if (!f)
      throw std::runtime_error("cannot open " + a.histogram_output);
    f << "# gkf-kit v1\nu,chi,count\n";
    for (std::size_t li = 0; li < a.levels.size(); ++li) {
      std::map<long long, int> hist;
      for (long long c : chis[li]) ++hist[c];
      for (const auto& [chi, count] : hist)
        f << fmt(a.levels[li]) << ',' << chi << ',' << count << "\n";
    }
  }
  return ok ? kExitOk : kExitDisagree;
}

// ------------------------------------------------------------- selftest ----

// Reference fit of an analytically known tube curve at tight tolerance:
// extended-precision QR on Chebyshev-spaced radii with extra guard degrees,
// so both Taylor truncation and conditioning sit below the 1e-8 target. The
// production double-precision fitter deliberately trades this accuracy for
// robustness to Monte Carlo noise.
std::vector<double> fit_analytic_tube_curve(
    const std::function<long double(long double)>& volume, int J) {
  using LMat = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
  using LVec = Eigen::Matrix<long double, Eigen::Dynamic, 1>;
  const int npts = 20;
  const int degree = J + 7;
  LMat X(npts, degree + 1);
  LVec y(npts);
  for (int i = 0; i < npts; ++i) {
    long double r =
        0.125L * (1.0L - std::cos(static_cast<long double>(M_PI) *
                                  (i + 0.5L) / npts));
    long double pw = 1.0L, fact = 1.0L;
    for (int j = 0; j <= degree; ++j) {
      if (j > 0) fact *= j;
      X(i, j) = pw / fact;
      pw *= r;
    }
    y(i) = volume(r);
  }
  LVec scale(degree + 1);
  for (int j = 0; j <= degree; ++j) {
    long double nrm = X.col(j).norm();
    scale(j) = nrm > 0.0L ? 1.0L / nrm : 1.0L;
  }
  LMat Xe = X * scale.asDiagonal();
  LVec beta = scale.asDiagonal() *
              LVec(Xe.colPivHouseholderQr().solve(y));
  std::vector<double> out(static_cast<std::size_t>(J) + 1);
  for (int j = 0; j <= J; ++j) out[static_cast<std::size_t>(j)] =
      static_cast<double>(beta(j));
  return out;
}

int run_selftest(const GlobalOpts& g) {
  int failures = 0;
  auto check = [&](const std::string& name, bool pass) {
    std::cout << (pass ? "PASS " : "FAIL ") << name << "\n";
    if (!pass) ++failures;
  };

  // Analytic half-space tube curve reproduces the closed-form coefficients.
  {
    bool ok = true;
    for (double u : {0.0, 1.0, 2.0}) {
      std::vector<double> fit = fit_analytic_tube_curve(
          [u](long double r) {
            return 0.5L * std::erfc((static_cast<long double>(u) - r) /
                                    std::sqrt(2.0L));
          },
          4);
      gkf::GmfSeries ref = gkf::gmf_half_space(u, 4);
      // exactly-zero coefficients are measured against the series scale
      double series_scale = 0.0;
      for (int j = 0; j <= 4; ++j)
        series_scale = std::max(series_scale, std::abs(ref[j]));
      for (int j = 0; j <= 4; ++j) {
        double denom = std::max(std::abs(ref[j]), series_scale);
        if (std::abs(fit[static_cast<std::size_t>(j)] - ref[j]) / denom > 1e-8)
          ok = false;
      }
    }
    check("half-space analytic fit", ok);
  }
  // Chi tube coefficients match finite differences of the chi density.
  {
    bool ok = true;
    const double h = 1e-4;
    for (int k : {2, 3}) {
      for (double x : {1.0, 1.5, 2.0}) {
        gkf::GmfSeries s = gkf::gmf_chi(k, x, 3);
        double fd1 = gkf::chi_density(k, x);
        double fd2 = -(gkf::chi_density(k, x + h) -
                       gkf::chi_density(k, x - h)) / (2 * h);
        double fd3 = (gkf::chi_density(k, x + h) - 2 * gkf::chi_density(k, x) +
                      gkf::chi_density(k, x - h)) / (h * h);
        if (std::abs(s[1] - fd1) > 1e-6 || std::abs(s[2] - fd2) > 1e-6 ||
            std::abs(s[3] - fd3) > 1e-4)
          ok = false;
      }
    }
    check("chi derivative identity", ok);
  }
  // Euler characteristic equals both independent oracles.
  {
    gkf::CounterRng rng(g.seed);
    bool ok = true;
    for (int t = 0; t < 200; ++t) {
      gkf::MaskGrid m;
      m.n = 16;
      m.topology = t % 2 ? gkf::Topology::torus : gkf::Topology::rectangle;
      m.on.resize(256);
      for (int i = 0; i < 256; ++i)
        m.on[i] = rng.uniform(static_cast<std::uint64_t>(t) * 256 + i, 0) < 0.5;
      long long chi = gkf::euler_char_2d(m);
      if (chi != gkf::euler_char_quad_oracle(m)) ok = false;
      if (m.topology == gkf::Topology::rectangle &&
          chi != gkf::euler_char_flood_fill_oracle(m))
        ok = false;
    }
    check("euler characteristic oracles", ok);
  }
  // Box curvatures recovered from the Euclidean Steiner polynomial.
  {
    bool ok = true;
    for (const std::vector<double>& sides :
         {std::vector<double>{1.0, 1.0}, std::vector<double>{1.0, 1.0, 1.0}}) {
      int n = static_cast<int>(sides.size());
      Eigen::MatrixXd X(24, n + 1);
      Eigen::VectorXd y(24);
      for (int i = 0; i < 24; ++i) {
        double r = 0.25 * (i + 1) / 24.0;
        for (int j = 0; j <= n; ++j)
          X(i, j) = gkf::unit_ball_volume(j) * std::pow(r, j);
        y(i) = gkf::steiner_tube_volume_box(sides, r);
      }
      Eigen::VectorXd c = X.colPivHouseholderQr().solve(y);
      gkf::LkcVector lkc = gkf::lkc_box(sides, 1.0);
      for (int j = 0; j <= n; ++j)
        if (std::abs(c(j) - lkc[n - j]) > 1e-10) ok = false;
    }
    check("box Steiner recovery", ok);
  }
  return failures == 0 ? kExitOk : kExitDisagree;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gkf-kit: expected Euler characteristics of Gaussian-related "
               "excursion sets"};
  app.require_subcommand(1);
  app.set_config("--config", "", "flat key = value config file; flags win");

  GlobalOpts g;
  if (const char* env = std::getenv("GKF_SEED")) g.seed = std::strtoull(env, nullptr, 10);
  app.add_option("--seed", g.seed, "RNG seed (default: GKF_SEED env or 12345)");
  app.add_option("--threads", g.threads, "worker count or 'auto'");
  app.add_option("--output", g.output, "output file (default stdout)");
  app.add_option("--format", g.format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_flag("--no-timestamp", g.no_timestamp,
               "omit timestamp from the output header");

  TableArgs ta;
  CLI::App* table = app.add_subcommand("table", "EC-density tables");
  table->add_option("--family", ta.family, "gaussian | chi2 | noncentral-chi2 | f | conjunction")->required();
  table->add_option("--k", ta.k, "degrees of freedom (chi2 families)");
  table->add_option("--k1", ta.k1, "numerator dof (f)");
  table->add_option("--k2", ta.k2, "denominator dof (f)");
  table->add_option("--rho", ta.rho, "correlation (conjunction)");
  table->add_option("--alpha", ta.alpha, "noncentrality (noncentral-chi2)");
  table->add_option("--levels", ta.levels, "levels u")->required()->expected(-1);
  table->add_option("--orders", ta.orders, "orders j")->required()->expected(-1);

  OracleArgs oa;
  CLI::App* oracle = app.add_subcommand(
      "oracle", "Monte Carlo tube-volume check of the closed forms");
  oracle->add_option("--domain", oa.domain,
                     "half-space | ball-complement | noncentral | f | cone")
      ->required();
  oracle->add_option("--level", oa.level, "level / threshold");
  oracle->add_option("--k", oa.k, "ambient dimension (half-space, chi)");
  oracle->add_option("--k1", oa.k1, "numerator dof (f)");
  oracle->add_option("--k2", oa.k2, "denominator dof (f)");
  oracle->add_option("--rho", oa.rho, "correlation (cone)");
  oracle->add_option("--alpha", oa.alpha, "noncentrality");
  oracle->add_option("--orders", oa.orders, "fit order J");
  oracle->add_option("--radii", oa.radii, "explicit radii list")->expected(-1);
  oracle->add_option("--r-max", oa.r_max, "max radius for generated grid");
  oracle->add_option("--n-radii", oa.n_radii, "number of generated radii");
  oracle->add_option("--n-samples", oa.n_samples, "Monte Carlo sample count");

  SimulateArgs sa;
  CLI::App* simulate = app.add_subcommand(
      "simulate", "end-to-end grid experiment: predicted vs empirical chi");
  simulate->add_option("--family", sa.family, "field family")->required();
  simulate->add_option("--k", sa.k, "components (chi2 families)");
  simulate->add_option("--k1", sa.k1, "numerator dof (f)");
  simulate->add_option("--k2", sa.k2, "denominator dof (f)");
  simulate->add_option("--rho", sa.rho, "correlation (conjunction)");
  simulate->add_option("--alpha", sa.alpha, "noncentrality");
  simulate->add_option("--n", sa.n, "grid size per axis");
  simulate->add_option("--spacing", sa.spacing, "grid spacing");
  simulate->add_option("--scale", sa.scale, "covariance length scale");
  simulate->add_option("--topology", sa.topology, "torus | rectangle");
  simulate->add_option("--levels", sa.levels, "levels u")->required()->expected(-1);
  simulate->add_option("--replicates", sa.replicates, "replicate count")->required();
  simulate->add_option("--histogram-output", sa.histogram_output,
                       "write per-level chi histogram CSV here");

  CLI::App* selftest =
      app.add_subcommand("selftest", "run the fast acceptance checks");

  // Global flags may appear after the subcommand name.
  for (CLI::App* sub : {table, oracle, simulate, selftest}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (g.threads != "auto") {
    try {
      gkf::set_thread_count(std::stoi(g.threads));
    } catch (...) {
      std::cerr << "error: --threads must be an integer or 'auto'\n";
      return kExitUsage;
    }
  }

  try {
    if (table->parsed()) return run_table(g, ta);
    if (oracle->parsed()) return run_oracle(g, oa);
    if (simulate->parsed()) return run_simulate(g, sa);
    if (selftest->parsed()) return run_selftest(g);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitUsage;
}
