#include <cinttypes>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cli_common.hpp"

namespace cli {
namespace {

struct GpkTriple {
  uint64_t gen = 0, prop = 0, kill = 0;
};

GpkTriple parse_gpk(const std::string& text) {
  GpkTriple out;
  char extra = 0;
  if (std::sscanf(text.c_str(), "%" SCNu64 ":%" SCNu64 ":%" SCNu64 "%c",
                  &out.gen, &out.prop, &out.kill, &extra) != 3) {
    throw UsageError("--gpk expects g:t:k, e.g. 1:1:1");
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open spec file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

uint64_t env_budget() {
  const char* text = std::getenv("CASCADE_BUDGET");
  if (text == nullptr || *text == '\0') return 0;  // library default
  char* end = nullptr;
  const uint64_t value = std::strtoull(text, &end, 10);
  if (end == nullptr || *end != '\0') {
    throw UsageError("CASCADE_BUDGET must be a non-negative integer");
  }
  return value;
}

// Source selection shared by count/oracle/dispersion: exactly one of a raw
// g:t:k triple, a named instance, or a JSON spec file.
struct Source {
  std::string gpk_text;
  std::string instance;
  uint64_t base = 0;
  std::string spec_path;

  bool has_gpk = false;       // resolved triple below
  GpkTriple triple;
  cascade_op* op = nullptr;   // owned
  std::string label;

  ~Source() { cascade_op_free(op); }

  void resolve(bool allow_ops) {
    const int sources = (gpk_text.empty() ? 0 : 1) +
                        (instance.empty() ? 0 : 1) + (spec_path.empty() ? 0 : 1);
    if (sources != 1) {
      throw UsageError("choose exactly one of --gpk, --instance, --spec");
    }
    if (!gpk_text.empty()) {
      triple = parse_gpk(gpk_text);
      has_gpk = true;
      label = "gpk " + gpk_text;
      return;
    }
    if (!spec_path.empty()) {
      if (!allow_ops) {
        throw UsageError("--spec is not available for this command");
      }
      check(cascade_op_from_json(read_file(spec_path).c_str(), &op));
      label = "spec " + spec_path;
      return;
    }
    label = "instance " + instance;
    if (instance == "carry" || instance == "dbl") {
      if (base == 0) throw UsageError("--instance " + instance + " needs --base");
      uint64_t g, t, k;
      if (instance == "carry") {
        check(cascade_addition_gpk(base, &g, &t, &k));
      } else {
        check(cascade_doubling_gpk(base, &g, &t, &k));
      }
      triple = {g, t, k};
      has_gpk = true;
      label += " base " + std::to_string(base);
    } else if (instance == "ternary3" || instance == "binary4") {
      if (!allow_ops) {
        throw UsageError("--instance " + instance + " is not available here");
      }
      check(cascade_op_builtin(instance.c_str(), &op));
    } else if (instance == "sediment") {
      if (!allow_ops) {
        throw UsageError("--instance sediment is not available here");
      }
      if (base == 0) throw UsageError("--instance sediment needs --base");
      check(cascade_op_sediment(base, &op));
      label += " base " + std::to_string(base);
    } else {
      throw UsageError("unknown instance '" + instance +
                       "' (expected carry, dbl, ternary3, binary4, sediment)");
    }
  }
};

void add_source_flags(CLI::App* cmd, Source& source) {
  cmd->add_option("--gpk", source.gpk_text, "class sizes as g:t:k");
  cmd->add_option("--instance", source.instance,
                  "carry | dbl | ternary3 | binary4 | sediment");
  cmd->add_option("--base", source.base, "base for carry/dbl/sediment");
  cmd->add_option("--spec", source.spec_path, "operation spec JSON file");
}

// ---- count ---------------------------------------------------------------

int cmd_count(const Source& source, uint32_t length, const std::string& format,
              const std::string& route, bool density) {
  if (density && format == "csv") {
    throw UsageError("--density requires table or json format");
  }
  Ints counts;
  if (source.has_gpk) {
    const GpkTriple& g = source.triple;
    if (route == "direct") {
      check(cascade_count_cascade_free(g.gen, g.prop, g.kill, length,
                                       &counts.ptr));
    } else if (route == "series") {
      check(cascade_gf_coefficients(g.gen, g.prop, g.kill, length, &counts.ptr));
    } else {
      throw UsageError("--route for --gpk sources must be direct or series");
    }
  } else {
    if (route == "direct") {
      check(cascade_op_count_avoiding(source.op, length, &counts.ptr));
    } else if (route == "recurrence") {
      check(cascade_op_count_by_recurrence(source.op, length, &counts.ptr));
    } else {
      throw UsageError("--route for operations must be direct or recurrence");
    }
    if (density) throw UsageError("--density applies only to --gpk sources");
  }
  std::string density_text;
  if (density) {
    CStr d;
    check(cascade_density(source.triple.gen, source.triple.prop,
                          source.triple.kill, length, &d.ptr));
    density_text = d.str();
  }
  if (format == "table") {
    std::printf("# %s\n", source.label.c_str());
    for (uint32_t ell = 0; ell <= length; ++ell) {
      std::printf("%u %s\n", ell, counts.str(ell).c_str());
    }
    if (density) std::printf("# density %s\n", density_text.c_str());
  } else if (format == "csv") {
    std::printf("L,a_L\n");
    for (uint32_t ell = 0; ell <= length; ++ell) {
      std::printf("%u,%s\n", ell, counts.str(ell).c_str());
    }
  } else if (format == "json") {
    nlohmann::json doc;
    doc["command"] = "count";
    doc["source"] = source.label;
    doc["length"] = length;
    nlohmann::json values = nlohmann::json::array();
    for (uint32_t ell = 0; ell <= length; ++ell) values.push_back(counts.str(ell));
    doc["counts"] = values;
    if (density) doc["density"] = density_text;
    std::printf("%s\n", doc.dump(2).c_str());
  } else {
    throw UsageError("--format must be table, csv, or json");
  }
  return 0;
}

// ---- oracle ----------------------------------------------------------------

int cmd_oracle(const Source& source, uint32_t length, uint64_t budget) {
  bool match = false;
  if (source.has_gpk) {
    const GpkTriple& g = source.triple;
    CStr brute, adjacency;
    check(cascade_brute_cascade_free(g.gen, g.prop, g.kill, length, budget,
                                     &brute.ptr));
    check(cascade_brute_adjacency(g.gen, g.prop, g.kill, length, budget,
                                  &adjacency.ptr));
    Ints counts;
    check(cascade_count_cascade_free(g.gen, g.prop, g.kill, length, &counts.ptr));
    const std::string recurrence = counts.str(length);
    match = brute.str() == recurrence && adjacency.str() == recurrence;
    std::printf("brute %s\nadjacency %s\nrecurrence %s\n%s\n",
                brute.str().c_str(), adjacency.str().c_str(),
                recurrence.c_str(), match ? "match" : "MISMATCH");
  } else {
    CStr brute;
    check(cascade_op_brute_avoiding(source.op, length, budget, &brute.ptr));
    Ints counts;
    check(cascade_op_count_avoiding(source.op, length, &counts.ptr));
    const std::string transfer = counts.str(length);
    match = brute.str() == transfer;
    std::printf("brute %s\ntransfer %s\n%s\n", brute.str().c_str(),
                transfer.c_str(), match ? "match" : "MISMATCH");
  }
  return match ? 0 : 1;
}

// ---- dispersion -----------------------------------------------------------

int cmd_dispersion(const Source& source, uint32_t length,
                   const std::string& regime, uint64_t mc_samples,
                   uint64_t seed) {
  if (!source.has_gpk) {
    throw UsageError("dispersion needs a --gpk or carry/dbl --instance source");
  }
  const GpkTriple& g = source.triple;
  cascade_chain chain;
  check(cascade_markov_chain(g.gen, g.prop, g.kill, &chain));
  CStr mu, pi0, pi1;
  check(cascade_markov_chain_strings(g.gen, g.prop, g.kill, &mu.ptr, &pi0.ptr,
                                     &pi1.ptr));
  std::printf("# %s\n", source.label.c_str());
  std::printf("mu %s (%.9g)\n", mu.str().c_str(), chain.mu);
  std::printf("pi0 %s (%.9g)\n", pi0.str().c_str(), chain.pi0);
  std::printf("pi1 %s (%.9g)\n", pi1.str().c_str(), chain.pi1);
  std::printf("correlation_length %.9g\n", chain.correlation_length);

  cascade_moments moments{};
  if (regime == "stationary") {
    check(cascade_stationary_moments(g.gen, g.prop, g.kill, length, &moments));
  } else if (regime == "transient") {
    check(cascade_transient_moments(g.gen, g.prop, g.kill, length, &moments));
  } else {
    throw UsageError("--regime must be stationary or transient");
  }
  std::printf("regime %s length %u\n", regime.c_str(), length);
  std::printf("mean %s (%.9g)\n", moments.mean, moments.mean_d);
  std::printf("variance %s (%.9g)\n", moments.variance, moments.variance_d);
  std::printf("dispersion %s (%.9g)\n", moments.dispersion, moments.dispersion_d);
  const double analytic = moments.dispersion_d;
  cascade_moments_clear(&moments);

  CStr dinf;
  double dinf_value = 0;
  check(cascade_asymptotic_dispersion(g.gen, g.prop, g.kill, &dinf.ptr,
                                      &dinf_value));
  std::printf("dispersion_limit %s (%.9g)\n", dinf.str().c_str(), dinf_value);

  if (mc_samples > 0) {
    cascade_mc_report mc;
    check(cascade_monte_carlo(g.gen, g.prop, g.kill, length, mc_samples, seed,
                              &mc));
    std::printf("mc_samples %" PRIu64 " seed %" PRIu64 "\n", mc_samples, seed);
    std::printf("mc_mean %.9g (se %.3g)\n", mc.mean, mc.mean_se);
    std::printf("mc_variance %.9g (se %.3g)\n", mc.variance, mc.variance_se);
    std::printf("mc_dispersion %.9g (se %.3g)\n", mc.dispersion,
                mc.dispersion_se);
    const double gap = std::abs(mc.dispersion - analytic);
    std::printf("mc_gap %.3g (%.2f se)\n", gap,
                mc.dispersion_se > 0 ? gap / mc.dispersion_se : 0.0);
  }
  return 0;
}

// ---- poisson ---------------------------------------------------------------

int cmd_poisson(std::optional<uint32_t> length, double tol,
                const std::string& mu, bool expansion,
                std::optional<uint32_t> scan_max, const std::string& grid) {
  if (scan_max.has_value()) {
    // Exact monotonicity checks over the rational grid ...
    std::vector<std::string> mus;
    std::stringstream items(grid);
    std::string item;
    while (std::getline(items, item, ',')) {
      if (!item.empty()) mus.push_back(item);
    }
    std::vector<const char*> pointers;
    pointers.reserve(mus.size());
    for (const std::string& m : mus) pointers.push_back(m.c_str());
    uint64_t checks = 0;
    int all_pass = 0;
    CStr failure;
    const uint32_t exact_max = std::min<uint32_t>(*scan_max, 50);
    check(cascade_monotonicity_scan(pointers.data(), pointers.size(), exact_max,
                                    &checks, &all_pass, &failure.ptr));
    std::printf("monotonicity grid {%s} L<=%u: %" PRIu64 " checks, %s\n",
                grid.c_str(), exact_max, checks,
                all_pass ? "all pass" : failure.str().c_str());
    // ... then the root column at a curated set of lengths.
    std::printf("L mu_star product residual\n");
    bool decreasing = true;
    double previous = 1.0;
    for (uint32_t ell : {2u, 3u, 4u, 5u, 10u, 20u, 50u, 100u, 200u, 400u}) {
      if (ell > *scan_max) break;
      cascade_poisson_root_report report;
      check(cascade_poisson_root(ell, tol, &report));
      std::printf("%u %.6f %.5f %.3g\n", ell, report.mu_star,
                  ell * (report.mu_star - 1.0 / 3.0), report.residual);
      if (report.mu_star >= previous) decreasing = false;
      previous = report.mu_star;
    }
    std::printf("root column %s\n",
                decreasing ? "monotone decreasing" : "NOT MONOTONE");
    return (all_pass && decreasing) ? 0 : 1;
  }
  if (!mu.empty()) {
    CStr limit;
    double limit_value = 0;
    check(cascade_symmetric_dispersion_limit(mu.c_str(), &limit.ptr,
                                             &limit_value));
    std::printf("dispersion_limit %s (%.9g)\n", limit.str().c_str(), limit_value);
    if (length.has_value()) {
      CStr exact, marginal;
      double value = 0, marginal_value = 0;
      check(cascade_symmetric_dispersion(mu.c_str(), *length, &exact.ptr, &value));
      check(cascade_marginal_dispersion(mu.c_str(), *length, &marginal.ptr,
                                        &marginal_value));
      std::printf("dispersion L=%u %s (%.9g)\n", *length, exact.str().c_str(),
                  value);
      std::printf("marginal k=%u %s (%.9g)\n", *length, marginal.str().c_str(),
                  marginal_value);
      if (expansion) {
        CStr first_order;
        CStr exact2;
        double residual = 0;
        check(cascade_expansion_check(mu.c_str(), *length, &exact2.ptr,
                                      &first_order.ptr, &residual));
        std::printf("first_order %s\nresidual %.3g\n",
                    first_order.str().c_str(), residual);
      }
    }
    return 0;
  }
  if (!length.has_value()) {
    throw UsageError("poisson needs --length, --mu, or --scan");
  }
  cascade_poisson_root_report report;
  check(cascade_poisson_root(*length, tol, &report));
  std::printf("L %u\nmu_star %.12f\nproduct %.9f\nresidual %.3g\ntol %.3g\n",
              report.length, report.mu_star,
              report.length * (report.mu_star - 1.0 / 3.0), report.residual,
              report.tol);
  return 0;
}

int dispatch(int argc, char** argv) {
  CLI::App app{
      "Exact counting, dispersion, and avoidance analysis for stateful "
      "digit-wise operations"};
  app.require_subcommand(1);

  // count
  auto* count = app.add_subcommand("count", "emit a(0..L) for a source");
  Source count_source;
  add_source_flags(count, count_source);
  uint32_t count_length = 0;
  std::string count_format = "table";
  std::string count_route = "direct";
  bool count_density = false;
  count->add_option("--length", count_length, "maximum word length")->required();
  count->add_option("--format", count_format, "table | csv | json");
  count->add_option("--route", count_route,
                    "direct | series (gpk) | recurrence (operations)");
  count->add_flag("--density", count_density, "also emit a(L) / N^L");

  // oracle
  auto* oracle = app.add_subcommand(
      "oracle", "exhaustively re-count and compare with the recurrence");
  Source oracle_source;
  add_source_flags(oracle, oracle_source);
  uint32_t oracle_length = 0;
  uint64_t oracle_budget = 0;
  oracle->add_option("--length", oracle_length, "word length")->required();
  oracle->add_option("--budget", oracle_budget,
                     "maximum words to enumerate (default 1e7)");

  // dispersion
  auto* dispersion = app.add_subcommand(
      "dispersion", "chain parameters and count moments for a gpk source");
  Source dispersion_source;
  add_source_flags(dispersion, dispersion_source);
  uint32_t dispersion_length = 0;
  std::string regime = "transient";
  uint64_t mc_samples = 0;
  uint64_t seed = 1;
  dispersion->add_option("--length", dispersion_length, "word length")
      ->required();
  dispersion->add_option("--regime", regime, "stationary | transient");
  dispersion->add_option("--mc", mc_samples,
                         "Monte Carlo sample count (0 = skip)");
  dispersion->add_option("--seed", seed, "Monte Carlo seed");

  // poisson
  auto* poisson = app.add_subcommand(
      "poisson", "unit-dispersion roots for symmetric chains");
  std::optional<uint32_t> poisson_length;
  double tol = 0;
  std::string mu;
  bool expansion = false;
  std::optional<uint32_t> scan_max;
  poisson->add_option("--length", poisson_length, "word length");
  poisson->add_option("--tol", tol, "residual tolerance (default 1e-12)");
  poisson->add_option("--mu", mu, "memory parameter, e.g. 1/3");
  poisson->add_flag("--expansion", expansion,
                    "with --mu and --length, emit the 1/L expansion check");
  poisson->add_option("--scan", scan_max,
                      "monotonicity scan and root column up to this length");
  std::string grid = "1/10,1/3,1/2,9/10";
  poisson->add_option("--grid", grid, "comma-separated rational grid for --scan");

  // verify
  auto* verify = app.add_subcommand("verify", "golden-table suites");
  std::string suite = "all";
  verify->add_option("--suite", suite,
                     "scaling | fibonacci | a007070 | dispersion | convergence "
                     "| discriminant | avoidance | all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
      return app.exit(e);
    }
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return 2;
  }

  if (count->parsed()) {
    count_source.resolve(true);
    return cmd_count(count_source, count_length, count_format, count_route,
                     count_density);
  }
  if (oracle->parsed()) {
    oracle_source.resolve(true);
    const uint64_t budget = oracle_budget != 0 ? oracle_budget : env_budget();
    return cmd_oracle(oracle_source, oracle_length, budget);
  }
  if (dispersion->parsed()) {
    dispersion_source.resolve(false);
    return cmd_dispersion(dispersion_source, dispersion_length, regime,
                          mc_samples, seed);
  }
  if (poisson->parsed()) {
    return cmd_poisson(poisson_length, tol, mu, expansion, scan_max, grid);
  }
  if (verify->parsed()) {
    const int failures = run_verify_suite(suite);
    if (failures > 0) {
      std::printf("%d row(s) failed\n", failures);
      return 1;
    }
    std::printf("all rows pass\n");
    return 0;
  }
  return 2;
}

}  // namespace
}  // namespace cli

int main(int argc, char** argv) {
  try {
    return cli::dispatch(argc, argv);
  } catch (const cli::UsageError& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return 2;
  } catch (const cli::ComputationError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: Internal: %s\n", e.what());
    return 1;
  }
}
