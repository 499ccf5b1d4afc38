#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>

#include "CLI11.hpp"
#include "iwagraph/bouquet.hpp"
#include "iwagraph/complete_graph.hpp"
#include "iwagraph/errors.hpp"
#include "iwagraph/pipeline.hpp"
#include "iwagraph/stats.hpp"

namespace {

using namespace iwagraph;

long resource_cap_from_env() {
  const char* env = std::getenv("IWAGRAPH_RESOURCE_CAP");
  if (!env) return kDefaultResourceCap;
  char* end = nullptr;
  long cap = std::strtol(env, &end, 10);
  if (end == env || cap < 1) fail(Errc::validation, "IWAGRAPH_RESOURCE_CAP must be a positive integer");
  return cap;
}

Multigraph load_graph(const std::string& path) {
  if (path == "-") return parse_graph_json(std::cin);
  std::ifstream in(path);
  if (!in) fail(Errc::validation, "cannot open graph file: " + path);
  return parse_graph_json(in);
}

VoltageAssignment load_voltage(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::validation, "cannot open voltage file: " + path);
  return parse_voltage_json(in);
}

std::ostream& output_stream(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) fail(Errc::validation, "cannot open output file: " + path);
  return file;
}

// delta given as a decimal string in (0,1), e.g. "0.4" -> 2/5
std::pair<long, long> parse_delta(const std::string& text) {
  auto dot = text.find('.');
  std::string digits = (dot == std::string::npos) ? text : text.substr(0, dot) + text.substr(dot + 1);
  long frac_digits = (dot == std::string::npos) ? 0 : static_cast<long>(text.size() - dot - 1);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    fail(Errc::validation, "--delta must be a decimal number");
  long num = std::strtol(digits.c_str(), nullptr, 10);
  long den = 1;
  for (long i = 0; i < frac_digits; ++i) den *= 10;
  long g = std::gcd(num, den);
  if (g > 0) {
    num /= g;
    den /= g;
  }
  return {num, den};
}

void require_odd_prime(long ell) {
  if (!is_odd_prime(Int(ell))) fail(Errc::validation, "--ell must be an odd prime >= 3");
}

StatRow make_row(std::string family, long ell, std::string params) {
  StatRow row;
  row.family = std::move(family);
  row.ell = Int(ell);
  row.params = std::move(params);
  return row;
}

void emit_enumeration(StatReport& report, const std::string& family, long ell,
                      const std::string& params, const EnumerationResult& e,
                      const std::function<std::optional<Rat>(long, long)>& theoretical) {
  for (const auto& [key, count] : e.tallies) {
    StatRow row = make_row(family, ell, params);
    row.mu = key.mu;
    row.lambda = key.lambda;
    row.count = count;
    row.total = e.total;
    row.empirical = Rat(count, e.total);
    row.empirical.canonicalize();
    row.theoretical = theoretical(key.mu, key.lambda);
    report.rows.push_back(std::move(row));
  }
}

void emit_monte_carlo(StatReport& report, const std::string& family, long ell,
                      const std::string& params, const MonteCarloResult& mc,
                      const std::function<std::optional<Rat>(long, long)>& theoretical) {
  for (const auto& [key, count] : mc.tallies) {
    StatRow row = make_row(family, ell, params);
    row.mu = key.mu;
    row.lambda = key.lambda;
    row.count = count;
    row.total = Int(mc.samples);
    row.empirical = Rat(count, Int(mc.samples));
    row.empirical.canonicalize();
    row.theoretical = theoretical(key.mu, key.lambda);
    row.seed = mc.seed;
    row.wilson95 = wilson_interval_95(count, Int(mc.samples));
    report.rows.push_back(std::move(row));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"iwagraph: exact Iwasawa invariants of Z_ell-towers of multigraphs"};
  app.require_subcommand(1);

  std::string graph_path, voltage_path, output_path;
  long levels = 4, prefix_degree = 8, truncation_degree = 16;
  bool cross_validate = false, no_cross_validate = false;
  int threads = 1;
  app.add_option("--threads", threads, "worker threads for sampling (default 1)")
      ->check(CLI::PositiveNumber);

  auto* inv_cmd = app.add_subcommand("invariants", "mu/lambda/nu of a voltage tower");
  inv_cmd->add_option("--graph", graph_path, "graph JSON file ('-' for stdin)")->required();
  inv_cmd->add_option("--voltage", voltage_path, "voltage JSON file")->required();
  inv_cmd->add_option("--levels", levels, "kappa levels for the nu fit (default 4)");
  inv_cmd->add_option("--prefix-degree", prefix_degree, "series prefix degree in the report");
  inv_cmd->add_option("--degree", truncation_degree, "series degree for non-exact voltages");
  inv_cmd->add_flag("--cross-validate", cross_validate,
                    "validate a prefix-certified mu against tree counts (default on)");
  inv_cmd->add_flag("--no-cross-validate", no_cross_validate, "skip the kappa computation");
  inv_cmd->add_option("--output,-o", output_path, "write JSON here instead of stdout");

  auto* tower_cmd = app.add_subcommand("tower", "kappa_n and ord_ell(kappa_n) per level");
  tower_cmd->add_option("--graph", graph_path, "graph JSON file ('-' for stdin)")->required();
  tower_cmd->add_option("--voltage", voltage_path, "voltage JSON file")->required();
  tower_cmd->add_option("--levels", levels, "highest level n (default 4)");
  tower_cmd->add_option("--output,-o", output_path, "write JSON here instead of stdout");

  auto* verify_cmd = app.add_subcommand("verify", "run the pinned regression corpus");

  auto* stats_cmd = app.add_subcommand("stats", "distribution experiments (CSV)");
  stats_cmd->require_subcommand(1);
  long ell = 3, t = 2, depth = 1, samples = 100000, p = 0, q = 0, r = 1, e = 1;
  long max_u = 1000000, mu0 = 0, lambda0 = 1, x = 100, k_bound = 2;
  std::string mode = "enumerate", assignment = "star", delta = "0.5";
  std::uint64_t seed = 1;
  Int voltage_a(1);

  auto* sb = stats_cmd->add_subcommand("bouquet", "bouquet X_t over admissible classes");
  sb->add_option("--ell", ell)->required();
  sb->add_option("--t", t)->required();
  sb->add_option("--depth", depth, "residue depth k (classes mod ell^k)");
  sb->add_option("--mode", mode)->check(CLI::IsMember({"enumerate", "mc"}));
  sb->add_option("--samples", samples);
  sb->add_option("--seed", seed);
  sb->add_option("--bound-k", k_bound, "also print the lambda<2k-1 bound row when valid");
  sb->add_option("--output,-o", output_path);

  auto* st = stats_cmd->add_subcommand("two-vertex", "X_{p,q,r}^{e,g} over admissible classes");
  st->add_option("--ell", ell)->required();
  st->add_option("--p", p)->required();
  st->add_option("--q", q)->required();
  st->add_option("--r", r)->required();
  st->add_option("--e", e)->required();
  st->add_option("--mode", mode)->check(CLI::IsMember({"enumerate", "mc"}));
  st->add_option("--samples", samples);
  st->add_option("--seed", seed);
  st->add_option("--output,-o", output_path);

  auto* sc = stats_cmd->add_subcommand("complete", "K_u densities for single/star assignments");
  sc->add_option("--ell", ell)->required();
  sc->add_option("--assignment", assignment)->check(CLI::IsMember({"single", "star"}));
  sc->add_option("--a", voltage_a, "voltage value (must be coprime to ell)");
  sc->add_option("--mu", mu0);
  sc->add_option("--lambda", lambda0);
  sc->add_option("--max-u", max_u);
  sc->add_option("--output,-o", output_path);

  auto* sv = stats_cmd->add_subcommand("vary-t", "density over both t and alpha");
  sv->add_option("--ell", ell)->required();
  sv->add_option("--x", x)->required();
  sv->add_option("--delta", delta, "exponent in (0,1), decimal");
  sv->add_option("--output,-o", output_path);

  CLI11_PARSE(app, argc, argv);

  try {
    std::ofstream file;
    std::ostream& out = output_stream(file, output_path);
    long cap = resource_cap_from_env();

    if (*inv_cmd) {
      Multigraph g = load_graph(graph_path);
      VoltageAssignment v = load_voltage(voltage_path);
      AnalysisOptions opts;
      opts.levels = levels;
      opts.resource_cap = cap;
      opts.prefix_degree = prefix_degree;
      opts.truncation_degree = truncation_degree;
      opts.cross_validate = cross_validate || !no_cross_validate;
      opts.allow_uncertified = false;
      Analysis a = analyze_tower(g, v, opts);
      out << invariants_to_json(a.invariants, a.series_prefix) << "\n";
    } else if (*tower_cmd) {
      Multigraph g = load_graph(graph_path);
      VoltageAssignment v = load_voltage(voltage_path);
      out << kappa_levels_to_json(kappa_sequence(g, v, levels, cap)) << "\n";
    } else if (*verify_cmd) {
      (void)verify_cmd;
      int failures = 0;
      for (const auto& check : pinned_corpus()) {
        std::string detail;
        bool ok = false;
        try {
          ok = check.run(detail);
        } catch (const std::exception& ex) {
          detail = ex.what();
        }
        out << (ok ? "PASS" : "FAIL") << "  " << check.name;
        if (!ok && !detail.empty()) out << "  [" << detail << "]";
        out << "\n";
        if (!ok) ++failures;
      }
      out << (failures == 0 ? "all checks passed" : std::to_string(failures) + " check(s) failed")
          << "\n";
      return failures == 0 ? 0 : 1;
    } else if (*sb) {
      require_odd_prime(ell);
      StatReport report;
      std::string params = "t=" + std::to_string(t) + ";depth=" + std::to_string(depth);
      auto theo = [&](long mu, long lambda) -> std::optional<Rat> {
        if (mu == 0 && lambda == 1) return closed_form_bouquet(Int(ell), t);
        return std::nullopt;
      };
      if (mode == "enumerate") {
        emit_enumeration(report, "bouquet", ell, params, bouquet_enumerate(Int(ell), t, depth),
                         theo);
      } else {
        emit_monte_carlo(report, "bouquet", ell, params + ";samples=" + std::to_string(samples),
                         monte_carlo_bouquet(Int(ell), t, samples, seed, threads), theo);
      }
      // Prob(mu>0) bound row
      StatRow bound_row = make_row("bouquet", ell, params + ";bound=mu>0");
      bound_row.bound = mu_positive_upper_bound(Int(ell), t);
      report.rows.push_back(bound_row);
      if (k_bound > 1 && 2 * k_bound - 1 < ell && k_bound * (k_bound - 1) < t) {
        StatRow b2 = make_row("bouquet", ell,
                              params + ";bound=lambda<" + std::to_string(2 * k_bound - 1));
        b2.bound = lambda_small_bound(Int(ell), t, k_bound);
        report.rows.push_back(b2);
      }
      report.write_csv(out);
    } else if (*st) {
      require_odd_prime(ell);
      TwoVertexShape shape{p, q, r, e, r - e};
      std::string params = "p=" + std::to_string(p) + ";q=" + std::to_string(q) +
                           ";r=" + std::to_string(r) + ";e=" + std::to_string(e) +
                           ";eta=" + std::to_string(two_vertex_eta(shape, ell));
      auto theo = [&](long mu, long lambda) -> std::optional<Rat> {
        if (mu == 0 && lambda == 1) return prob_two_vertex_mu0_lambda1(shape, ell);
        return std::nullopt;
      };
      StatReport report;
      if (mode == "enumerate")
        emit_enumeration(report, "two-vertex", ell, params, two_vertex_enumerate(shape, ell), theo);
      else
        emit_monte_carlo(report, "two-vertex", ell, params + ";samples=" + std::to_string(samples),
                         monte_carlo_two_vertex(shape, ell, samples, seed, threads), theo);
      report.write_csv(out);
    } else if (*sc) {
      require_odd_prime(ell);
      if (voltage_a % ell == 0) fail(Errc::validation, "--a must be coprime to ell");
      auto kind = assignment == "single" ? CompleteAssignment::single : CompleteAssignment::star;
      DensityResult d = complete_density(Int(ell), mu0, lambda0, kind, max_u);
      StatRow row = make_row("complete", ell,
                             "assignment=" + assignment + ";a=" + voltage_a.get_str() +
                                 ";max_u=" + std::to_string(max_u));
      row.mu = mu0;
      row.lambda = lambda0;
      row.count = d.matching;
      row.total = Int(max_u);
      row.empirical = d.empirical;
      row.theoretical = d.theoretical;
      StatReport report;
      report.rows.push_back(std::move(row));
      report.write_csv(out);
    } else if (*sv) {
      require_odd_prime(ell);
      auto [dn, dd] = parse_delta(delta);
      VaryTResult v = vary_t_density(Int(ell), x, dn, dd);
      StatRow row = make_row("vary-t", ell,
                             "x=" + std::to_string(x) + ";delta=" + delta +
                                 ";t_max=" + std::to_string(v.t_max));
      row.mu = 0;
      row.lambda = 1;
      row.count = v.matching_count;
      row.total = v.admissible_count;
      row.empirical = v.ratio;
      row.theoretical = v.target;
      StatReport report;
      report.rows.push_back(std::move(row));
      report.write_csv(out);
    }
    return 0;
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return err.exit_code();
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
}
