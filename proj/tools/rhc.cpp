// rhc: command-line front end.
//
// JSON goes to stdout, diagnostics to stderr. Exit codes: 0 success / true,
// 1 property violated / false, 2 usage or input error.

#include "rhc.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

using namespace rhc;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_false = 1;
constexpr int exit_input = 2;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return in;
}

std::string read_text(const std::string& path) {
  auto in = open_input(path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

RootedHypergraph load_hypergraph(const std::string& path) {
  auto in = open_input(path);
  return read_hypergraph(in);
}

void emit(const Json& j) { std::cout << j.dump() << '\n'; }

// Parameter flags shared by contain and reconstruct. Strings so that exact
// rationals ("1/10", "0.004") survive.
struct ParamFlags {
  std::string eps = "1/10", s = "100", t = "8000", N = "1", tau, z;
  std::string mode = "exact";
  bool relaxed = false;
  CLI::Option* opts[6] = {};
  CLI::Option* mode_opt = nullptr;
  CLI::Option* relaxed_opt = nullptr;

  void attach(CLI::App* app) {
    opts[0] = app->add_option("--eps", eps, "epsilon")->capture_default_str();
    opts[1] = app->add_option("--s", s, "degree cap of the link subgraph")->capture_default_str();
    opts[2] = app->add_option("--t", t, "edge threshold of the link subgraph")->capture_default_str();
    opts[3] = app->add_option("--N", N, "target container size scale")->capture_default_str();
    opts[4] = app->add_option("--tau", tau, "Phase I threshold (default 2s/t)");
    opts[5] = app->add_option("--z", z, "Phase II degree cutoff (default 4 eps s)");
    mode_opt = app->add_option("--mode", mode, "eligibility test")
                   ->check(CLI::IsMember({"exact", "greedy"}))
                   ->capture_default_str();
    relaxed_opt = app->add_flag("--relaxed", relaxed, "accept parameters outside the algorithm profile");
  }

  bool any_given() const {
    for (auto* o : opts)
      if (o->count()) return true;
    return false;
  }

  Params build(std::size_t m) const {
    Params p = Params::with_defaults(parse_rational(eps), parse_rational(s), parse_rational(t), parse_rational(N), m);
    if (!tau.empty()) p.tau = parse_rational(tau);
    if (!z.empty()) p.z = parse_rational(z);
    return p;
  }

  RunOptions options() const {
    RunOptions o;
    o.mode = parse_mode(mode);
    o.relaxed = relaxed;
    return o;
  }
};

std::string summary(const ContainerRun& run) {
  std::ostringstream out;
  out << "|C| = " << run.C.size() << " of " << run.vertex_count << ", |T| = " << run.T.size()
      << ", |T'| = " << run.T_prime.size() << ", steps = " << run.trace.size()
      << ", exit phase " << to_string(run.exit_phase)
      << ", certified = " << (run.certificate.certified() ? "yes" : "no");
  return out.str();
}

// Integral doubles print as integers, the rest as doubles.
Json number(double x) {
  if (std::isfinite(x) && x == std::floor(x) && std::fabs(x) < 9e15) return Json(static_cast<std::int64_t>(x));
  return Json(x);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Containers for rooted 3-uniform hypergraphs and union-free families"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  // gen
  auto* gen = app.add_subcommand("gen", "Write a generated instance to stdout");
  gen->require_subcommand(1);
  unsigned gen_n = 0, gen_m = 0, gen_k = 0;
  std::size_t gen_vertices = 0;
  double gen_density = 0;
  std::uint64_t gen_seed = 1;
  auto* gen_union = gen->add_subcommand("union", "union hypergraph on P(n), as rooted-hg text");
  gen_union->add_option("n", gen_n, "ground set size")->required();
  auto* gen_kneser = gen->add_subcommand("kneser", "Kneser graph KG(m, k), as graph text");
  gen_kneser->add_option("m", gen_m)->required();
  gen_kneser->add_option("k", gen_k)->required();
  auto* gen_synthetic = gen->add_subcommand("synthetic", "random 1-rooted hypergraph, as rooted-hg text");
  gen_synthetic->add_option("M", gen_vertices, "vertex count")->required();
  gen_synthetic->add_option("density", gen_density, "edge density in [0, 1]")->required();
  gen_synthetic->add_option("seed,--seed", gen_seed, "seed, positional or flagged")->capture_default_str();

  // verify
  auto* verify = app.add_subcommand("verify", "Check a hypergraph (rootedness, independence) or a family (union-free)");
  std::string verify_file, verify_iset;
  unsigned verify_r = 0;
  verify->add_option("file", verify_file, "rooted-hg or family file")->required();
  verify->add_option("--r", verify_r, "rootedness to check (default: the file's r)");
  verify->add_option("--iset", verify_iset, "vertex set to test for independence");

  // contain
  auto* contain = app.add_subcommand("contain", "Run the container algorithm on one independent set");
  std::string contain_hg, contain_iset;
  bool contain_json = false, contain_iterate = false;
  ParamFlags contain_params;
  contain->add_option("hypergraph", contain_hg)->required();
  contain->add_option("iset", contain_iset, "vset or family file")->required();
  contain_params.attach(contain);
  contain->add_flag("--json", contain_json, "print the full run as JSON");
  contain->add_flag("--iterate", contain_iterate, "iterate on the container until it is small or stops shrinking");

  // reconstruct
  auto* recon = app.add_subcommand("reconstruct", "Rebuild a container from fingerprints");
  std::string recon_hg, recon_fp;
  ParamFlags recon_params;
  recon->add_option("hypergraph", recon_hg)->required();
  recon->add_option("fingerprints", recon_fp, "JSON from contain --json (single run or --iterate)")->required();
  recon_params.attach(recon);

  // census
  auto* census = app.add_subcommand("census", "Count union-free families of P(n)");
  unsigned census_n = 0, census_threads = 1;
  census->add_option("n", census_n)->required();
  census->add_option("--threads", census_threads)->check(CLI::PositiveNumber)->capture_default_str();

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Evaluate the union-free counting bounds at n, eps");
  unsigned bounds_n = 0;
  double bounds_eps = 0;
  bounds->add_option("n", bounds_n)->required();
  bounds->add_option("eps", bounds_eps)->required();

  // count-bound
  auto* count_bound = app.add_subcommand("count-bound", "Bound on the number of containers for given parameters");
  ParamFlags count_params;
  std::size_t count_m = 0;
  unsigned count_r = 1;
  count_bound->add_option("--M", count_m, "host size")->required();
  count_bound->add_option("--r", count_r, "rootedness")->capture_default_str();
  count_params.attach(count_bound);

  // spectra
  auto* spectra = app.add_subcommand("spectra", "Kneser graph degree, size and minimum eigenvalue");
  unsigned spectra_m = 0, spectra_k = 0;
  bool spectra_eml = false;
  std::size_t spectra_samples = 2000;
  std::uint64_t spectra_seed = 1;
  spectra->add_option("m", spectra_m)->required();
  spectra->add_option("k", spectra_k)->required();
  spectra->add_flag("--eml", spectra_eml, "also check the mixing lower bound on vertex subsets");
  spectra->add_option("--samples", spectra_samples, "subsets sampled when the graph is too big to enumerate")
      ->capture_default_str();
  spectra->add_option("--seed", spectra_seed)->capture_default_str();

  // audit
  auto* audit = app.add_subcommand("audit", "Permutation counting audit of a family");
  unsigned audit_n = 0, audit_gap = default_horrible_gap, audit_threads = 1;
  std::string audit_file;
  bool audit_exclude_empty = false;
  std::optional<unsigned> audit_delta;
  audit->add_option("n", audit_n)->required();
  audit->add_option("family", audit_file, "family file")->required();
  audit->add_flag("--exclude-empty", audit_exclude_empty, "do not count the empty prefix as an initial segment");
  audit->add_option("--horrible-gap", audit_gap)->capture_default_str();
  audit->add_option("--delta", audit_delta, "prefix length for the horrible-prefix count");
  audit->add_option("--threads", audit_threads)->check(CLI::PositiveNumber)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_input;
  }

  try {
    if (*gen) {
      if (*gen_union) {
        if (gen_n == 0) throw std::out_of_range("union hypergraph needs n >= 1");
        write_hypergraph(std::cout, build_union_hypergraph(gen_n));
      } else if (*gen_kneser) {
        write_graph(std::cout, kneser_graph(gen_m, gen_k));
      } else {
        write_hypergraph(std::cout, generate_synthetic_rooted(gen_vertices, gen_density, gen_seed));
      }
      return exit_ok;
    }

    if (*verify) {
      const std::string text = read_text(verify_file);
      std::istringstream in(text);
      std::string keyword;
      in >> keyword;
      in.seekg(0);
      if (keyword == "family") {
        auto f = read_family(in);
        const bool free = is_union_free(f);
        emit(Json{{"n", f.n()}, {"members", f.size()}, {"union_free", free}});
        return free ? exit_ok : exit_false;
      }
      auto h = read_hypergraph(in);
      const unsigned r = verify_r ? verify_r : h.r();
      auto report = verify_rooted(h, r);
      Json j{{"vertex_count", h.vertex_count()}, {"edges", h.edge_count()}, {"r", r}, {"rooted", report.rooted},
             {"violating_pairs", report.violating_pairs}};
      if (report.witness) j["witness_pair"] = {report.witness->pair.first, report.witness->pair.second};
      bool ok = report.rooted;
      if (!verify_iset.empty()) {
        auto iset_in = open_input(verify_iset);
        const bool independent = is_independent(h, read_vertex_set(iset_in, h.vertex_count()));
        j["independent"] = independent;
        ok = ok && independent;
      }
      emit(j);
      return ok ? exit_ok : exit_false;
    }

    if (*contain) {
      auto h = load_hypergraph(contain_hg);
      auto iset_in = open_input(contain_iset);
      auto independent = read_vertex_set(iset_in, h.vertex_count());
      const Params p = contain_params.build(h.vertex_count());
      const RunOptions options = contain_params.options();
      if (contain_iterate) {
        auto record = iterate_containers(h, independent, p, options);
        std::cerr << "iterations = " << record.iterations() << ", |C| = " << record.C.size() << ", status "
                  << to_string(record.status) << '\n';
        if (contain_json) emit(to_json(record));
        else std::cout << "C " << encode_container(record.C) << '\n';
        return independent.is_subset_of(record.C) ? exit_ok : exit_false;
      }
      std::vector<std::string> violations;
      RunOptions observed = options;
      observed.observer = [&](const StepView& view) {
        for (auto& v : step_invariant_violations(view, p.s, true)) violations.push_back(std::move(v));
      };
      auto run = run_container(h, independent, p, observed);
      for (auto& v : run_invariant_violations(run, independent)) violations.push_back(std::move(v));
      if (contain_json) emit(to_json(run));
      else std::cout << summary(run) << '\n';
      for (const auto& v : violations) std::cerr << "invariant violated: " << v << '\n';
      return violations.empty() ? exit_ok : exit_false;
    }

    if (*recon) {
      auto h = load_hypergraph(recon_hg);
      const Json j = Json::parse(read_text(recon_fp));
      const std::size_t m = h.vertex_count();
      if (j.contains("vertex_count") && j.at("vertex_count").get<std::size_t>() != m)
        throw InputError("fingerprints were produced on a host with a different vertex count");
      // parameters and mode come from the file unless given on the command line
      Params p = j.contains("params") && !recon_params.any_given() ? params_from_json(j.at("params"))
                                                                   : recon_params.build(m);
      RunOptions options = recon_params.options();
      if (j.contains("mode") && !recon_params.mode_opt->count()) options.mode = parse_mode(j.at("mode").get<std::string>());
      if (j.contains("relaxed") && !recon_params.relaxed_opt->count()) options.relaxed = j.at("relaxed").get<bool>();
      VertexSet c = j.contains("levels")
                        ? reconstruct_iterated(h, fingerprints_from_json(j, m), p, options)
                        : reconstruct(h, vertex_set_from_json(j.at("T"), m), vertex_set_from_json(j.at("T_prime"), m),
                                      p, options);
      emit(Json{{"C", to_json(c)}});
      return exit_ok;
    }

    if (*census) {
      const auto alpha = count_union_free(census_n, census_threads);
      emit(Json{{"n", census_n}, {"alpha", alpha}});
      return exit_ok;
    }

    if (*bounds) {
      auto report = alpha_bounds(bounds_n, bounds_eps);
      emit(to_json(report));
      if (!report.chain_holds)
        std::cerr << "the bound chain does not hold at n = " << bounds_n << "; it first holds near log2 n = "
                  << report.crossover_log2_n << '\n';
      return report.lower_bound_ok ? exit_ok : exit_false;
    }

    if (*count_bound) {
      Params p = count_params.build(count_m);
      p.r = count_r;
      emit(to_json(container_count_bound(p)));
      return exit_ok;
    }

    if (*spectra) {
      const auto stats = kneser_stats(spectra_m, spectra_k);
      const auto g = kneser_graph(spectra_m, spectra_k);
      const double computed = min_eigenvalue(g);
      Json j{{"N", stats.N}, {"D", stats.D}, {"lambda_formula", number(stats.lambda_formula)},
             {"lambda_computed", computed}};
      bool ok = std::fabs(computed - stats.lambda_formula) <= 1e-6;
      if (spectra_eml) {
        const double d = static_cast<double>(stats.D);
        auto check = g.vertex_count() <= max_exhaustive_eml_vertices
                         ? verify_eml_exhaustive(g, d, stats.lambda_formula)
                         : verify_eml_sampled(g, d, stats.lambda_formula, spectra_samples, spectra_seed);
        j["eml"] = to_json(check);
        ok = ok && check.holds;
      }
      emit(j);
      return ok ? exit_ok : exit_false;
    }

    if (*audit) {
      auto in = open_input(audit_file);
      auto family = read_family(in);
      if (family.n() != audit_n)
        throw InputError("family file declares n = " + std::to_string(family.n()) + ", expected " +
                         std::to_string(audit_n));
      AuditOptions options;
      options.rules.include_empty = !audit_exclude_empty;
      options.rules.horrible_gap = audit_gap;
      options.delta = audit_delta;
      options.threads = audit_threads;
      auto result = audit_counting_identity(family, options);
      emit(to_json(result));
      return result.passed() ? exit_ok : exit_false;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_input;
  }
  return exit_input;
}
