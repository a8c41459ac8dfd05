// Command-line front end: build graphs, print invariants, run the
// verification suites and scan parameter families into CSV.
//
// Exit codes: 0 ok, 1 failed verification (or internal error), 2 unparseable
// group spec / bad usage, 3 nilpotent group, 4 budget exceeded.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ng/errors.hpp"
#include "ng/families.hpp"
#include "ng/nilgraph.hpp"
#include "ng/nilpotency.hpp"
#include "ng/structure.hpp"
#include "ng/verify.hpp"
#include "ng/version.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct RunConfig {
  std::string group_spec;
  std::string suite;
  std::string family;
  int n_max = 25;
  long q_max = 11;
  int workers = static_cast<int>(std::thread::hardware_concurrency());
  std::string json_path;
  std::string dot_path;
  std::string csv_path;
  std::string cache_dir;
  long max_order = 5040;
  int clique_budget = ng::kDefaultCliqueBudget;
  bool unlock_stretch = false;
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << content;
}

std::optional<std::string> read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string sanitize(const std::string& spec) {
  std::string out;
  for (char c : spec)
    if (std::isalnum(static_cast<unsigned char>(c)))
      out += c;
    else if (!std::isspace(static_cast<unsigned char>(c)))
      out += '_';
  return out;
}

// One graph computation result, possibly served from the cache. The cached
// artifact is the JSON export itself; elapsed_ms lives in a sidecar so the
// export stays byte-identical whether it was computed or replayed.
struct BuildResult {
  std::string json_text;
  long elapsed_ms = 0;
  bool from_cache = false;
};

BuildResult build_with_cache(const RunConfig& cfg, const std::string& spec) {
  fs::path cache_file, meta_file;
  if (!cfg.cache_dir.empty()) {
    fs::create_directories(cfg.cache_dir);
    std::string key = sanitize(spec) + "-v" + ng::kEngineVersion;
    cache_file = fs::path(cfg.cache_dir) / (key + ".json");
    meta_file = fs::path(cfg.cache_dir) / (key + ".meta.json");
    if (auto cached = read_file(cache_file)) {
      BuildResult r{*cached, 0, true};
      if (auto meta = read_file(meta_file))
        r.elapsed_ms = json::parse(*meta).value("elapsed_ms", 0L);
      return r;
    }
  }

  auto start = std::chrono::steady_clock::now();
  ng::PermGroup g =
      ng::parse_group_spec(spec, static_cast<std::size_t>(cfg.max_order));
  ng::NilpotencyData nil(g);
  ng::NilGraph graph = ng::NilGraph::build(g, nil, cfg.workers);
  BuildResult r;
  r.json_text = graph.export_json(spec, cfg.clique_budget);
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  if (!cache_file.empty()) {
    write_file(cache_file.string(), r.json_text);
    write_file(meta_file.string(),
               json{{"elapsed_ms", r.elapsed_ms}}.dump() + "\n");
  }
  return r;
}

std::string sizes_brackets(const json& sizes) {
  std::string out = "[";
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(sizes[i].get<long>());
  }
  return out + "]";
}

std::string summary_line(const json& doc) {
  return "kappa=" + std::to_string(doc["kappa"].get<long>()) +
         " sizes=" + sizes_brackets(doc["component_sizes"]) +
         " nil=" + std::to_string(doc["nil_order"].get<long>());
}

// DOT regenerated from the JSON export; byte-identical to a direct export,
// so cache hits can serve it without rebuilding the graph.
std::string dot_from_json(const json& doc) {
  std::string out = "graph nilpotent_graph {\n";
  for (const auto& v : doc["vertices"])
    out += "  v" + std::to_string(v["id"].get<int>()) + " [label=\"" +
           v["perm"].get<std::string>() + "\"];\n";
  for (const auto& e : doc["edges"])
    out += "  v" + std::to_string(e[0].get<int>()) + " -- v" +
           std::to_string(e[1].get<int>()) + ";\n";
  out += "}\n";
  return out;
}

int cmd_build(const RunConfig& cfg) {
  BuildResult r = build_with_cache(cfg, cfg.group_spec);
  json doc = json::parse(r.json_text);
  if (!cfg.dot_path.empty()) write_file(cfg.dot_path, dot_from_json(doc));
  if (!cfg.json_path.empty()) {
    write_file(cfg.json_path, r.json_text);
    std::cout << summary_line(doc) << "\n";
  } else {
    std::cout << r.json_text;
    std::cerr << summary_line(doc) << "\n";
  }
  return 0;
}

int cmd_invariants(const RunConfig& cfg) {
  ng::PermGroup g = ng::parse_group_spec(cfg.group_spec,
                                         static_cast<std::size_t>(cfg.max_order));
  ng::NilpotencyData nil(g);
  ng::NilGraph graph = ng::NilGraph::build(g, nil, cfg.workers);

  ng::CliqueResult clique = graph.clique_number(cfg.clique_budget);
  ng::Classification cls = graph.classify();
  ng::ElementSet fit = ng::fitting(g);
  std::size_t ssc = ng::strongly_self_centralizing(g).size();

  std::map<int, int> histogram;
  for (int v = 0; v < graph.vertex_count(); ++v) ++histogram[graph.degree(v)];

  std::vector<int> sizes = graph.component_sizes();
  std::sort(sizes.rbegin(), sizes.rend());

  nlohmann::ordered_json doc;
  doc["group"] = {{"spec", cfg.group_spec},
                  {"order", g.size()},
                  {"degree", g.degree()}};
  doc["kappa"] = graph.kappa();
  doc["component_sizes"] = sizes;
  doc["nil_order"] = nil.nil_set().size();
  if (clique.exact) {
    doc["clique_number"] = clique.clique_number;
    doc["clique_bounds"] = nullptr;
  } else {
    doc["clique_number"] = nullptr;
    doc["clique_bounds"] = {clique.bounds.first, clique.bounds.second};
  }
  auto hist = nlohmann::ordered_json::array();
  for (auto [deg, count] : histogram)
    hist.push_back({{"degree", deg}, {"count", count}});
  doc["degree_histogram"] = hist;
  doc["fitting_order"] = fit.size();
  doc["hypercenter_order"] = nil.hypercenter().size();
  doc["ssc_count"] = ssc;
  const char* sc = cls.self_complementary == ng::SelfComplementary::kNo
                       ? "no"
                       : "undetermined";
  doc["classes"] = {{"bipartite", cls.bipartite},
                    {"star", cls.star},
                    {"eulerian", cls.eulerian},
                    {"self_complementary", sc}};
  if (!cfg.json_path.empty()) write_file(cfg.json_path, doc.dump(2) + "\n");

  std::cout << "group=" << cfg.group_spec << " order=" << g.size()
            << " degree=" << g.degree() << "\n";
  std::cout << summary_line(doc) << "\n";
  if (clique.exact)
    std::cout << "omega=" << clique.clique_number << "\n";
  else
    std::cout << "omega_bounds=" << clique.bounds.first << ".."
              << clique.bounds.second << "\n";
  std::cout << "degree_histogram=";
  bool first = true;
  for (auto [deg, count] : histogram) {
    std::cout << (first ? "{" : ", ") << deg << ":" << count;
    first = false;
  }
  std::cout << "}\n";
  std::cout << "fitting=" << fit.size()
            << " hypercenter=" << nil.hypercenter().size() << " ssc=" << ssc
            << "\n";
  std::cout << "bipartite=" << (cls.bipartite ? "true" : "false")
            << " star=" << (cls.star ? "true" : "false")
            << " eulerian=" << (cls.eulerian ? "true" : "false")
            << " self_complementary=" << sc << "\n";
  return 0;
}

int cmd_verify(const RunConfig& cfg) {
  ng::VerifyOptions opts;
  opts.workers = cfg.workers;
  opts.clique_budget = cfg.clique_budget;
  opts.max_order = static_cast<std::size_t>(cfg.max_order);

  auto group_of = [&](const std::string& spec) {
    return ng::parse_group_spec(spec, opts.max_order);
  };

  ng::VerificationReport report;
  report.subject = "suite:" + cfg.suite;
  auto start = std::chrono::steady_clock::now();

  bool want_all = cfg.suite == "all";
  if (cfg.suite == "group" || (want_all && !cfg.group_spec.empty())) {
    ng::PermGroup g = group_of(cfg.group_spec);
    report.merge(ng::verify_group(g, cfg.group_spec, opts));
    report.merge(ng::verify_quotient_iso(g, cfg.group_spec + "/quotient", opts));
  }
  if (cfg.suite == "dihedral" || want_all)
    report.merge(ng::verify_family_dihedral(cfg.n_max, opts));
  if (cfg.suite == "psl2" || want_all)
    report.merge(ng::verify_family_psl2(cfg.q_max, opts));
  if (cfg.suite == "symmetric" || want_all)
    report.merge(ng::verify_family_symmetric(std::min(cfg.n_max, 9),
                                             cfg.unlock_stretch, opts));
  if (cfg.suite == "products" || want_all) {
    report.merge(ng::verify_product(group_of("S:3"), group_of("C:2"),
                                    "S:3 x C:2", opts));
    report.merge(ng::verify_product(group_of("S:3"), group_of("S:3"),
                                    "S:3 x S:3", opts));
    report.merge(ng::verify_product(group_of("D:5"), group_of("C:3"),
                                    "D:5 x C:3", opts));
  }
  if (cfg.suite == "quotient" || want_all) {
    report.merge(ng::verify_quotient_iso(group_of("D:12"), "D:12", opts));
    report.merge(ng::verify_quotient_iso(group_of("S:4"), "S:4", opts));
    report.merge(
        ng::verify_quotient_iso(group_of("S:3xC:2"), "S:3xC:2", opts));
  }
  if (report.checks.empty())
    throw CLI::ValidationError("--suite",
                               "nothing to verify (unknown suite or missing "
                               "--group)");

  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  if (!cfg.json_path.empty())
    write_file(cfg.json_path, report.to_json().dump(2) + "\n");
  std::cout << report.summary();
  int failed = 0, passed = 0, skipped = 0;
  for (const auto& c : report.checks) {
    if (c.status == "fail") ++failed;
    if (c.status == "pass") ++passed;
    if (c.status == "skipped") ++skipped;
  }
  std::cout << "verified: " << passed << " passed, " << failed << " failed, "
            << skipped << " skipped\n";
  return failed == 0 ? 0 : 1;
}

int cmd_scan(const RunConfig& cfg) {
  std::vector<std::string> specs;
  if (cfg.family == "dihedral") {
    for (int n = 3; n <= cfg.n_max; ++n) {
      if ((n & (n - 1)) == 0) {
        std::cerr << "skip D:" << n << ": nilpotent (degree a power of two)\n";
        continue;
      }
      specs.push_back("D:" + std::to_string(n));
    }
  } else if (cfg.family == "psl2") {
    for (long q = 2; q <= cfg.q_max; ++q) {
      try {
        ng::PslParameters::of(q);
      } catch (const std::invalid_argument&) {
        continue;
      }
      specs.push_back("PSL2:" + std::to_string(q));
    }
  } else if (cfg.family == "symmetric") {
    for (int n = 3; n <= cfg.n_max; ++n) {
      if (n >= 7 && !cfg.unlock_stretch) {
        std::cerr << "skip S:" << n << ": stretch budget not unlocked\n";
        continue;
      }
      specs.push_back("S:" + std::to_string(n));
    }
  } else {
    throw CLI::ValidationError("--family",
                               "expected dihedral, psl2 or symmetric");
  }

  std::ostringstream csv;
  csv << "param,order,nil_order,kappa,sizes,omega,elapsed_ms\n";
  for (const std::string& spec : specs) {
    BuildResult r;
    try {
      r = build_with_cache(cfg, spec);
    } catch (const ng::budget_error& e) {
      std::cerr << "skip " << spec << ": " << e.what() << "\n";
      continue;
    }
    json doc = json::parse(r.json_text);
    std::string omega = doc["clique_number"].is_null()
                            ? std::to_string(doc["clique_bounds"][0].get<long>()) +
                                  ".." +
                                  std::to_string(doc["clique_bounds"][1].get<long>())
                            : std::to_string(doc["clique_number"].get<long>());
    csv << spec << "," << doc["group"]["order"].get<long>() << ","
        << doc["nil_order"].get<long>() << "," << doc["kappa"].get<long>()
        << ",\"" << sizes_brackets(doc["component_sizes"]) << "\"," << omega
        << "," << r.elapsed_ms << "\n";
  }
  if (!cfg.csv_path.empty())
    write_file(cfg.csv_path, csv.str());
  else
    std::cout << csv.str();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nilpotent graph engine"};
  app.require_subcommand(1);
  app.set_version_flag("--version", ng::kEngineVersion);

  RunConfig cfg;
  if (cfg.workers < 1) cfg.workers = 1;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--workers", cfg.workers, "worker threads")
        ->check(CLI::PositiveNumber);
    sub->add_option("--max-order", cfg.max_order, "group order budget")
        ->check(CLI::PositiveNumber);
    sub->add_option("--clique-budget", cfg.clique_budget,
                    "max vertices for exact clique search");
    sub->add_flag("--unlock-stretch", cfg.unlock_stretch,
                  "allow long-running stretch workloads");
    sub->add_option("--cache-dir", cfg.cache_dir, "result cache directory");
  };

  CLI::App* build = app.add_subcommand("build", "construct the graph");
  build->add_option("--group", cfg.group_spec, "group spec, e.g. S:4 or D:5xC:2")
      ->required();
  build->add_option("--json", cfg.json_path, "JSON output path");
  build->add_option("--dot", cfg.dot_path, "DOT output path");
  add_common(build);

  CLI::App* invariants =
      app.add_subcommand("invariants", "print graph and structure invariants");
  invariants->add_option("--group", cfg.group_spec, "group spec")->required();
  invariants->add_option("--json", cfg.json_path, "JSON output path");
  add_common(invariants);

  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  verify
      ->add_option("--suite", cfg.suite,
                   "group|dihedral|psl2|symmetric|products|quotient|all")
      ->required();
  verify->add_option("--group", cfg.group_spec, "group spec for --suite group");
  verify->add_option("--n-max", cfg.n_max, "largest dihedral/symmetric degree");
  verify->add_option("--q-max", cfg.q_max, "largest PSL(2,q) field size");
  verify->add_option("--json", cfg.json_path, "report output path");
  add_common(verify);

  CLI::App* scan = app.add_subcommand("scan", "sweep a family into CSV");
  scan->add_option("--family", cfg.family, "dihedral|psl2|symmetric")
      ->required();
  scan->add_option("--n-max", cfg.n_max, "largest dihedral/symmetric degree");
  scan->add_option("--q-max", cfg.q_max, "largest PSL(2,q) field size");
  scan->add_option("--csv", cfg.csv_path, "CSV output path");
  add_common(scan);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (build->parsed()) return cmd_build(cfg);
    if (invariants->parsed()) return cmd_invariants(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    return cmd_scan(cfg);
  } catch (const ng::spec_parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ng::nilpotent_group_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ng::budget_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
