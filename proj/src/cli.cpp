#include "nsat/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "nsat/io.hpp"
#include "nsat/saturate.hpp"
#include "nsat/search.hpp"
#include "nsat/verify.hpp"

namespace nsat {

using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write file: " + out_path);
  out << text;
}

// --pattern accepts a standard name first, then a path to a pattern file.
PosetPattern load_pattern(const std::string& spec) {
  try {
    return standard_pattern(spec);
  } catch (const std::invalid_argument&) {
  }
  std::ifstream probe(spec);
  if (!probe) throw std::invalid_argument("unknown pattern and no such file: " + spec);
  return parse_pattern(slurp(spec));
}

json report_to_json(const SaturationReport& r) {
  json j{{"free", r.free}, {"saturated", r.saturated}};
  if (r.violating_copy)
    j["violating_copy"] = embedding_to_json(*r.violating_copy);
  else
    j["violating_copy"] = nullptr;
  json ub = json::array();
  for (SubsetMask s : r.unblocked) ub.push_back(mask_to_json(s));
  j["unblocked"] = ub;
  return j;
}

json verdict_to_json(const LemmaVerdict& v) {
  return json{{"lemma", v.lemma_id},
              {"holds", v.holds},
              {"counterexample", v.counterexample},
              {"certificates", v.certificates}};
}

int cmd_check(const std::string& input, const std::string& pattern,
              const std::string& output, const std::string& format) {
  SetFamily f = parse_family(slurp(input));
  PosetPattern p = load_pattern(pattern);
  SaturationReport r = check_saturated(f, p);
  if (format == "text") {
    std::ostringstream os;
    os << (r.free ? "free" : "contains a copy") << ", "
       << (r.saturated ? "saturated" : "not saturated");
    if (!r.free) os << " (violating copy found)";
    if (r.free && !r.saturated) os << ", " << r.unblocked.size() << " unblocked sets";
    os << "\n";
    emit(output, os.str());
  } else {
    emit(output, report_to_json(r).dump() + "\n");
  }
  return r.saturated ? 0 : 1;
}

int cmd_saturate(const std::string& input, const std::string& pattern,
                 const std::string& output, bool seeded, std::uint64_t seed) {
  SetFamily f = parse_family(slurp(input));
  PosetPattern p = load_pattern(pattern);
  SetFamily g = seeded ? greedy_saturate_shuffled(f, p, seed) : greedy_saturate(f, p);
  emit(output, serialize_family(g));
  return 0;
}

int cmd_gen_canonical(int n, const std::string& output) {
  emit(output, serialize_family(canonical_construction(n)));
  return 0;
}

int cmd_verify(const std::string& input, const std::string& lemmas,
               const std::string& output) {
  SetFamily f = parse_family(slurp(input));
  std::vector<LemmaVerdict> verdicts;
  if (lemmas == "all") {
    verdicts = verify_all(f);
  } else {
    std::stringstream ss(lemmas);
    std::string id;
    while (std::getline(ss, id, ',')) {
      if (id == "maxmin")
        verdicts.push_back(verify_maxmin_comparability(f));
      else if (id == "midpoint")
        verdicts.push_back(verify_midpoint(f));
      else if (id == "valve")
        verdicts.push_back(verify_valve(f));
      else if (id == "forest")
        verdicts.push_back(verify_pair_graph_forest(f));
      else if (id == "bounds")
        verdicts.push_back(verify_main_bounds(f));
      else if (id == "extension")
        verdicts.push_back(verify_extension_lemmas(f));
      else
        throw std::invalid_argument(
            "unknown lemma id '" + id +
            "' (expected maxmin, midpoint, valve, forest, bounds, extension)");
    }
    if (verdicts.empty()) throw std::invalid_argument("--lemmas selected nothing");
  }
  json out = json::array();
  bool all_hold = true;
  for (const auto& v : verdicts) {
    out.push_back(verdict_to_json(v));
    all_hold = all_hold && v.holds;
  }
  emit(output, out.dump() + "\n");
  return all_hold ? 0 : 1;
}

int cmd_satstar(int n, const std::string& pattern, int k_max, std::uint64_t budget,
                const std::string& output, const std::string& format) {
  PosetPattern p = load_pattern(pattern);
  SearchResult r = sat_star_exact(n, p, k_max, budget);
  if (format == "json") {
    json j{{"n", n},
           {"pattern", pattern},
           {"sat_star", r.sat_star},
           {"exhaustive", r.exhaustive},
           {"nodes", r.nodes},
           {"level_nodes", r.level_nodes},
           {"seconds", r.seconds}};
    json ws = json::array();
    for (const auto& w : r.witnesses) ws.push_back(family_to_json(w));
    j["witnesses"] = ws;
    emit(output, j.dump() + "\n");
  } else {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", r.seconds);
    std::ostringstream os;
    os << "n,pattern,sat_star,exhaustive,nodes,seconds\n";
    os << n << "," << pattern << "," << r.sat_star << ","
       << (r.exhaustive ? "true" : "false") << "," << r.nodes << "," << buf << "\n";
    emit(output, os.str());
  }
  return r.exhaustive ? 0 : 1;
}

int cmd_export_dot(const std::string& input, const std::string& output) {
  emit(output, export_dot(parse_family(slurp(input))));
  return 0;
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"induced poset saturation toolkit for the Boolean lattice"};
  app.require_subcommand(1);

  std::string input, output, pattern = "N", format, lemmas = "all";
  int n = 0, k_max = 64;
  std::uint64_t budget = 50'000'000, seed = 0;
  bool seed_given = false;

  auto* check = app.add_subcommand("check", "freeness and saturation report");
  check->add_option("--input", input, "family JSON file")->required();
  check->add_option("--pattern", pattern, "pattern name or pattern JSON file");
  check->add_option("--output", output, "output path (default stdout)");
  check->add_option("--format", format, "json or text")
      ->default_val("json")
      ->check(CLI::IsMember({"json", "text"}));

  auto* saturate = app.add_subcommand("saturate", "greedy completion of a free seed");
  saturate->add_option("--input", input, "seed family JSON file")->required();
  saturate->add_option("--pattern", pattern, "pattern name or pattern JSON file");
  saturate->add_option("--output", output, "output path (default stdout)");
  saturate->add_option("--seed", seed, "RNG seed for shuffled candidate order")
      ->each([&](const std::string&) { seed_given = true; });

  auto* gen = app.add_subcommand("gen-canonical", "the 2n-set saturated construction");
  gen->add_option("--n", n, "ground set size")->required();
  gen->add_option("--output", output, "output path (default stdout)");

  auto* verify = app.add_subcommand("verify", "structural checks on an N-saturated family");
  verify->add_option("--input", input, "family JSON file")->required();
  verify->add_option("--lemmas", lemmas,
                     "all or a comma list of maxmin,midpoint,valve,forest,bounds,extension");
  verify->add_option("--output", output, "output path (default stdout)");

  auto* satstar = app.add_subcommand("satstar", "exact minimum saturated family size");
  satstar->add_option("--n", n, "ground set size")->required();
  satstar->add_option("--pattern", pattern, "pattern name or pattern JSON file");
  satstar->add_option("--k-max", k_max, "largest family size to try");
  satstar->add_option("--budget", budget, "search node budget");
  satstar->add_option("--output", output, "output path (default stdout)");
  satstar->add_option("--format", format, "csv or json")
      ->default_val("csv")
      ->check(CLI::IsMember({"csv", "json"}));

  auto* dot = app.add_subcommand("export-dot", "Hasse diagram as DOT");
  dot->add_option("--input", input, "family JSON file")->required();
  dot->add_option("--output", output, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) return cmd_check(input, pattern, output, format);
    if (saturate->parsed()) return cmd_saturate(input, pattern, output, seed_given, seed);
    if (gen->parsed()) return cmd_gen_canonical(n, output);
    if (verify->parsed()) return cmd_verify(input, lemmas, output);
    if (satstar->parsed()) return cmd_satstar(n, pattern, k_max, budget, output, format);
    if (dot->parsed()) return cmd_export_dot(input, output);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace nsat
