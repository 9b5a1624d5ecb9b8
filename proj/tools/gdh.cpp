#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gdh/cache.hpp"
#include "gdh/checks.hpp"
#include "gdh/errors.hpp"
#include "gdh/gd.hpp"
#include "gdh/kp.hpp"
#include "gdh/render.hpp"
#include "gdh/witten.hpp"

namespace {

using namespace gdh;

struct RunConfig {
  Format format = Format::text;
  std::string cache;
  int workers = 1;
  SignConvention sign = SignConvention::frozen;
  CoordinateMap coordinates = CoordinateMap::linear;
  PairRoute route = PairRoute::operator_series;

  Execution exec() const { return workers > 1 ? Execution::parallel : Execution::serial; }

  std::optional<std::filesystem::path> cache_dir() const {
    if (const char* env = std::getenv("GDH_CACHE"); env && *env) return std::filesystem::path(env);
    if (!cache.empty()) return std::filesystem::path(cache);
    return std::nullopt;
  }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Load the persisted tables, extend to `weight`, persist again if extended.
template <class Table>
void prepare(Table& table, const RunConfig& cfg, int weight) {
  table.set_route(cfg.route);
  const auto dir = cfg.cache_dir();
  if (dir) {
    const CacheLoad load = load_cache(table, *dir);
    if (load.status == CacheStatus::invalid || load.status == CacheStatus::stale)
      std::cerr << "gdh: ignoring cache (" << load.reason << ")\n";
  }
  const int before = table.built_weight();
  table.ensure(weight, cfg.exec(), cfg.workers);
  if (dir && table.built_weight() > before) save_cache(table, *dir);
}

void emit_equation(const RunConfig& cfg, const nlohmann::json& header, const std::vector<int>& lhs,
                   const JetPolynomial& p) {
  switch (cfg.format) {
    case Format::text:
      std::cout << lhs_text(lhs) << " = " << render_text(p) << "\n";
      break;
    case Format::latex:
      std::cout << lhs_latex(lhs) << " = " << render_latex(p) << "\n";
      break;
    case Format::json: {
      nlohmann::json out = header;
      out["lhs"] = lhs;
      out["terms"] = equation_terms_json(p);
      std::cout << out.dump(2) << "\n";
      break;
    }
  }
}

std::vector<int> sorted_indices(std::vector<int> v, const char* flag) {
  for (int i : v)
    if (i < 1) throw UsageError(std::string(flag) + ": indices must be >= 1");
  std::sort(v.begin(), v.end());
  return v;
}

void check_order(int n) {
  if (n < 2) throw UsageError("--n: order must be >= 2");
}

int run_kp(const RunConfig& cfg, std::vector<int> pair) {
  if (pair.size() != 2) throw UsageError("--pair: expected two indices i,j");
  pair = sorted_indices(std::move(pair), "--pair");
  KPTable kp;
  prepare(kp, cfg, pair[0] + pair[1]);
  emit_equation(cfg, {{"hierarchy", "kp"}}, pair, kp.pair(pair[0], pair[1]));
  return 0;
}

int run_gd(const RunConfig& cfg, int n, std::vector<int> indices) {
  check_order(n);
  if (indices.size() < 2) throw UsageError("--indices: expected at least two indices");
  indices = sorted_indices(std::move(indices), "--indices");
  GDContext ctx(n);
  prepare(ctx, cfg, std::accumulate(indices.begin(), indices.end(), 0));
  emit_equation(cfg, {{"hierarchy", "gd"}, {"n", n}}, indices, gd_equation(ctx, indices));
  return 0;
}

int truncation_weight(int n, int g_max, int k_max) { return (n + 1) * (2 * g_max - 2 + k_max); }

int run_witten(const RunConfig& cfg, int n, int g_max, int k_max, const std::string& residual) {
  check_order(n);
  if (g_max < 0) throw UsageError("--genus: must be >= 0");
  if (k_max < 2) throw UsageError("--kmax: must be >= 2");
  GDContext ctx(n);
  prepare(ctx, cfg, truncation_weight(n, g_max, k_max));
  const auto w = witten_truncation(ctx, g_max, k_max, cfg.exec(), cfg.workers);
  std::optional<GradedSeries> res;
  if (residual != "none")
    res = string_residual(n, w, k_max - 1,
                          residual == "printed" ? StringForm::printed : StringForm::sign_corrected);
  switch (cfg.format) {
    case Format::text:
    case Format::latex: {
      const bool latex = cfg.format == Format::latex;
      for (const auto& s : w)
        std::cout << (latex ? "W^{" + std::to_string(*s.genus_tag()) + "}"
                            : "W^" + std::to_string(*s.genus_tag()))
                  << " = " << (latex ? render_series_latex(s) : render_series_text(s)) << "\n";
      if (res)
        std::cout << "residual (" << residual << ", <= " << k_max - 1 << " factors) = "
                  << (latex ? render_series_latex(*res) : render_series_text(*res)) << "\n";
      break;
    }
    case Format::json: {
      nlohmann::json series = nlohmann::json::array();
      for (const auto& s : w) series.push_back(series_json(s));
      nlohmann::json out{{"n", n}, {"genus_max", g_max}, {"kmax", k_max}, {"series", series}};
      if (res) {
        out["residual"] = series_json(*res);
        out["residual"]["form"] = residual;
        out["residual"]["max_factors"] = k_max - 1;
      }
      std::cout << out.dump(2) << "\n";
      break;
    }
  }
  return 0;
}

int run_correlators(const RunConfig& cfg, int n, int genus, const std::vector<std::string>& raw) {
  check_order(n);
  if (genus < 0) throw UsageError("--genus: must be >= 0");
  CorrelatorKey key{n, genus, {}};
  for (const auto& item : raw) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw UsageError("--insertions: expected k:m, got " + item);
    try {
      std::size_t used_k = 0, used_m = 0;
      const int k = std::stoi(item.substr(0, colon), &used_k);
      const int m = std::stoi(item.substr(colon + 1), &used_m);
      if (used_k != colon || used_m != item.size() - colon - 1) throw std::invalid_argument(item);
      key.insertions.emplace_back(k, m);
    } catch (const std::logic_error&) {
      throw UsageError("--insertions: expected integers k:m, got " + item);
    }
  }
  if (key.insertions.empty()) throw UsageError("--insertions: at least one insertion needed");
  int weight = 0;
  for (const auto& [k, m] : key.insertions) weight += m * n + k;
  GDContext ctx(n);
  prepare(ctx, cfg, std::max(weight, 2));
  const CorrelatorResult r = correlator(ctx, key, cfg.sign, cfg.coordinates);
  const int sign = sgn(r.value);
  const Rational mag = sign < 0 ? Rational(-r.value) : r.value;
  const std::string sign_text = sign > 0 ? "+" : sign < 0 ? "-" : "0";
  const std::string convention = cfg.sign == SignConvention::frozen ? "frozen" : "literal";
  const std::string coords = cfg.coordinates == CoordinateMap::linear ? "linear" : "descendant";
  if (cfg.format == Format::json) {
    nlohmann::json ins = nlohmann::json::array();
    for (const auto& [k, m] : key.insertions) ins.push_back({k, m});
    nlohmann::json out{{"n", n},
                       {"genus", genus},
                       {"insertions", ins},
                       {"linear_indices", r.linear_indices},
                       {"value", to_json(r.value)},
                       {"abs_value", to_json(mag)},
                       {"sign", sign_text},
                       {"sign_convention", convention},
                       {"coordinates", coords}};
    if (!r.diagnostic.empty()) out["diagnostic"] = r.diagnostic;
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::string label = "<";
  for (std::size_t a = 0; a < key.insertions.size(); ++a)
    label += (a ? " " : "") + std::string("tau_{") + std::to_string(key.insertions[a].first) +
             "," + std::to_string(key.insertions[a].second) + "}";
  label += ">_" + std::to_string(genus);
  std::cout << label << " = " << to_string(r.value) << "  (|value| " << to_string(mag)
            << ", sign " << sign_text << ", " << convention << " sign, " << coords
            << " coordinates)\n";
  if (!r.diagnostic.empty()) std::cout << "note: " << r.diagnostic << "\n";
  return 0;
}

int run_selfcheck(const RunConfig& cfg, int max_weight) {
  if (max_weight < 4) throw UsageError("--max-weight: must be >= 4");
  const int w = max_weight;
  std::vector<CheckResult> results;
  KPTable kp;
  kp.set_route(cfg.route);
  kp.ensure(w, cfg.exec(), cfg.workers);
  results.push_back(check_leading_coefficient(kp, w));
  results.push_back(check_kp_parity(kp, w));
  results.push_back(check_padding_identity(500, 20261018));
  results.push_back(check_p_against_naive(500, 20261018));
  results.push_back(check_flow_compatibility(kp, std::min(w, 10)));
  results.push_back(check_b_cross(std::min(w, 8)));
  results.push_back(check_eta_forms(kp, w));
  results.push_back(check_pair_symmetry(kp, std::min(w, 10)));
  results.push_back(check_soliton(kp, w));
  results.push_back(check_route_agreement(0, std::min(w, 10)));
  results.push_back(check_route_agreement(3, std::min(w, 12)));
  results.push_back(check_gd_structure({2, 3}, std::max(2, w / 4), cfg.exec(), cfg.workers));
  GDContext kdv(2);
  kdv.set_route(cfg.route);
  results.push_back(check_kdv_soliton(kdv, w));
  results.push_back(check_correlator_oracle(kdv, 5));
  results.push_back(check_correlator_values(kdv, 5, CoordinateMap::descendant));
  for (int n : {2, 3}) {
    GDContext ctx(n);
    ctx.set_route(cfg.route);
    results.push_back(check_string_equation_up_to_one_point(ctx, 1, 5, cfg.exec(), cfg.workers));
    results.push_back(check_small_phase(ctx));
    results.push_back(check_quasihomogeneity(ctx, 1, 5));
    results.push_back(check_witten_reference(ctx, 4));
  }
  int failed = 0;
  nlohmann::json records = nlohmann::json::array();
  for (const auto& r : results) {
    if (!r.passed) ++failed;
    if (cfg.format == Format::json) {
      records.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    } else {
      std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
    }
  }
  if (cfg.format == Format::json) {
    std::cout << nlohmann::json{{"checks", records}, {"failed", failed}}.dump(2) << "\n";
  } else {
    std::cout << results.size() - static_cast<std::size_t>(failed) << "/" << results.size()
              << " checks passed\n";
  }
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact KP / Gelfand-Dickey hierarchy equations and Witten solution coefficients",
               "gdh"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string format = "text", sign = "frozen", coords = "linear", route = "series";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "latex", "json"}));
  app.add_option("--cache", cfg.cache, "Cache directory (GDH_CACHE overrides)");
  app.add_option("--workers", cfg.workers, "Worker threads for stage builds (1 = serial)")
      ->check(CLI::Range(1, 1024));
  app.add_option("--sign-convention", sign, "Correlator sign convention")
      ->check(CLI::IsMember({"frozen", "literal"}));
  app.add_option("--coordinates", coords, "Correlator coordinate scaling")
      ->check(CLI::IsMember({"linear", "descendant"}));
  app.add_option("--route", route, "Pair expansion used when building tables")
      ->check(CLI::IsMember({"series", "matrix"}));

  std::vector<int> pair;
  auto* kp = app.add_subcommand("kp", "KP equation for d_i d_j v");
  kp->add_option("--pair", pair, "i,j")->required()->delimiter(',');

  int n = 0;
  std::vector<int> indices;
  auto* gd = app.add_subcommand("gd", "Reduced equation for d_{i1}..d_{ik} v");
  gd->add_option("--n", n, "Reduction order")->required();
  gd->add_option("--indices", indices, "i1,i2[,...]")->required()->delimiter(',');

  int genus = 0, kmax = 0;
  std::string residual = "none";
  auto* witten = app.add_subcommand("witten", "Truncated Witten solution W^0 .. W^g");
  witten->add_option("--n", n, "Reduction order")->required();
  witten->add_option("--genus", genus, "Largest genus")->required();
  witten->add_option("--kmax", kmax, "Largest number of x factors")->required();
  witten->add_option("--residual", residual, "Also print the string-equation residual")
      ->check(CLI::IsMember({"none", "printed", "sign-corrected"}));

  std::vector<std::string> insertions;
  auto* corr = app.add_subcommand("correlators", "Correlator <tau_{k1,m1} ...>_g");
  corr->add_option("--n", n, "Reduction order")->required();
  corr->add_option("--genus", genus, "Genus")->required();
  corr->add_option("--insertions", insertions, "k:m[,k:m...]")->required()->delimiter(',');

  int max_weight = 0;
  auto* self = app.add_subcommand("selfcheck", "Run the property and oracle suites");
  self->add_option("--max-weight", max_weight, "Weight bound for the table checks")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  cfg.format = format == "json" ? Format::json : format == "latex" ? Format::latex : Format::text;
  cfg.sign = sign == "literal" ? SignConvention::literal : SignConvention::frozen;
  cfg.coordinates = coords == "descendant" ? CoordinateMap::descendant : CoordinateMap::linear;
  cfg.route = route == "matrix" ? PairRoute::matrix_sum : PairRoute::operator_series;

  try {
    if (kp->parsed()) return run_kp(cfg, pair);
    if (gd->parsed()) return run_gd(cfg, n, indices);
    if (witten->parsed()) return run_witten(cfg, n, genus, kmax, residual);
    if (corr->parsed()) return run_correlators(cfg, n, genus, insertions);
    if (self->parsed()) return run_selfcheck(cfg, max_weight);
  } catch (const UsageError& e) {
    std::cerr << "gdh: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "gdh: " << e.what() << "\n";
    return 2;
  } catch (const BoundError& e) {
    std::cerr << "gdh: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "gdh: internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
