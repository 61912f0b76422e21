// mwb: command-line front end. Exit codes: 0 ok, 1 verification failure,
// 2 bad input.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <httplib.h>
#include <json.hpp>

#include "mwb/golden.hpp"
#include "mwb/lie_seeds.hpp"
#include "mwb/quantum.hpp"
#include "mwb/server.hpp"
#include "mwb/session.hpp"
#include "mwb/verification.hpp"

using namespace mwb;
using nlohmann::json;

namespace {

enum class Format { Json, Text };

struct BadInput : Error {
  using Error::Error;
};

json read_json(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw BadInput("cannot open '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw BadInput(std::string("input is not JSON: ") + e.what());
  }
}

// A seed (anything with a "quiver", e.g. the output of `mutate`) or an origin.
Construction load(const std::string& preset, const std::string& seed_path) {
  if (!preset.empty() && !seed_path.empty()) throw BadInput("give either --preset or --seed, not both");
  if (!preset.empty()) return make_preset(preset);
  if (seed_path.empty()) throw BadInput("one of --preset or --seed is required");
  json j = read_json(seed_path);
  if (j.is_object() && j.contains("quiver")) return construct({{"seed", j}});
  if (j.is_object() && j.contains("seed") && j["seed"].is_object() && j["seed"].contains("quiver"))
    return construct({{"seed", j["seed"]}});
  return construct(j);
}

json cartan_arg(const std::string& s) {
  if (!s.empty() && s.front() == '[') return json::parse(s);
  return s;
}

void print_seed_text(const json& v) {
  const auto& q = v["quiver"];
  std::cout << "quiver: " << q["n"].get<int>() << " vertices";
  if (!q["frozen"].empty()) {
    std::cout << ", frozen";
    for (int f : q["frozen"]) std::cout << ' ' << f;
  }
  std::cout << '\n';
  for (const auto& a : q["arrows"]) {
    std::cout << "  " << a[0] << " -> " << a[1];
    if (a[2] != 1) std::cout << " (x" << a[2] << ")";
    std::cout << '\n';
  }
  std::cout << "variables:\n";
  const auto frozen = q["frozen"].get<std::vector<int>>();
  for (std::size_t i = 0; i < v["variables"].size(); ++i) {
    std::cout << "  " << i + 1 << ": " << v["variables"][i].get<std::string>();
    if (v.contains("aliases") && !v["aliases"][i].is_null()) std::cout << "  = " << v["aliases"][i].get<std::string>();
    if (std::find(frozen.begin(), frozen.end(), static_cast<int>(i + 1)) != frozen.end()) std::cout << "  (frozen)";
    std::cout << '\n';
  }
}

bool print_reports(const std::vector<Report>& reports, Format fmt) {
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.all_hold();
  if (fmt == Format::Json) {
    json out = json::array();
    for (const auto& r : reports) out.push_back(to_json(r));
    std::cout << json{{"all_hold", ok}, {"reports", out}}.dump(2) << '\n';
    return ok;
  }
  std::size_t passed = 0, total = 0;
  for (const auto& r : reports) {
    std::cout << "== " << r.title << '\n';
    for (const auto& c : r.checks) {
      ++total;
      passed += c.holds;
      if (c.holds)
        std::cout << "[pass] " << c.name << '\n';
      else
        std::cout << "[FAIL] " << c.name << ": " << c.lhs << " != " << c.rhs << '\n';
    }
  }
  std::cout << passed << "/" << total << " checks hold\n";
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mwb: exact cluster-algebra workbench"};
  app.require_subcommand(1);
  Format fmt = Format::Json;
  app.add_option("--format", fmt, "output format")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"json", Format::Json}, {"text", Format::Text}}))
      ->capture_default_str();

  std::string preset, seed_path, cartan, word;

  auto* mut = app.add_subcommand("mutate", "mutate a seed along a vertex sequence");
  std::vector<int> vertices;
  mut->add_option("--preset", preset, "preset name");
  mut->add_option("--seed", seed_path, "seed JSON file, '-' for stdin");
  mut->add_option("--vertex", vertices, "vertex to mutate (repeatable, or comma separated)")->delimiter(',');

  auto* exp = app.add_subcommand("explore", "breadth-first mutation class");
  ExploreBudget budget;
  bool list_vars = false;
  exp->add_option("--preset", preset, "preset name");
  exp->add_option("--seed", seed_path, "seed JSON file, '-' for stdin");
  exp->add_option("--max-seeds", budget.max_seeds, "seed budget")->capture_default_str();
  exp->add_option("--max-depth", budget.max_depth, "depth budget")->capture_default_str();
  exp->add_option("--threads", budget.threads, "worker threads")->capture_default_str();
  exp->add_flag("--list-variables", list_vars, "include every cluster variable");

  auto* sfw = app.add_subcommand("seed-from-word", "initial seed on Gamma_i for a reduced word");
  sfw->add_option("--cartan", cartan, "A3, D4, E6, affine-a1, or a JSON matrix")->required();
  sfw->add_option("--word", word, "letters i_1,...,i_r")->required();

  auto* dseq = app.add_subcommand("distinguished-seq", "distinguished mutation sequence with labels");
  bool jsonl = false;
  dseq->add_option("--cartan", cartan, "Cartan type or JSON matrix")->required();
  dseq->add_option("--word", word, "letters i_1,...,i_r")->required();
  dseq->add_flag("--jsonl", jsonl, "one JSON record per mutation");

  auto* ca = app.add_subcommand("chamber-ansatz", "identities for the affine sl2 word 1,2,1,2");
  std::string part = "all";
  int truncation = 8;
  ca->add_option("--part", part, "eq4, phi, nprime, chamber or all")
      ->check(CLI::IsMember({"eq4", "phi", "nprime", "chamber", "all"}))
      ->capture_default_str();
  ca->add_option("--truncation", truncation, "z-degree for N'(w)")->capture_default_str();

  auto* qc = app.add_subcommand("quantum-check", "quantum seed of the affine word");
  std::vector<int> qpath;
  qc->add_option("--path", qpath, "also print the quantum seed after this path")->delimiter(',');

  auto* va = app.add_subcommand("verify-all", "run every golden example");

  auto* srv = app.add_subcommand("serve", "JSON-over-HTTP sessions");
  int port = default_port();
  std::string host = "127.0.0.1", state_dir;
  srv->add_option("--port", port, "port (default $MWB_PORT or 7373)")->capture_default_str();
  srv->add_option("--host", host, "bind address")->capture_default_str();
  srv->add_option("--state-dir", state_dir, "snapshot sessions to this directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*mut) {
      auto c = load(preset, seed_path);
      for (int k : vertices)
        if (k < 1 || k > c.seed.n())
          throw IndexOutOfRange("vertex out of range: " + std::to_string(k) + " not in 1.." +
                                std::to_string(c.seed.n()));
      auto s = mutate_path(c.seed, vertices);
      auto v = seed_view(c, s);
      v["history"] = vertices;
      if (fmt == Format::Json)
        std::cout << v.dump(2) << '\n';
      else
        print_seed_text(v);
      return 0;
    }
    if (*exp) {
      auto c = load(preset, seed_path);
      auto r = explore(c.seed, budget);
      if (fmt == Format::Json) {
        std::cout << to_json(r, list_vars).dump(2) << '\n';
      } else {
        std::cout << "clusters: " << r.clusters << "\nvariables: " << r.variables << " (" << r.mutable_variables
                  << " mutable, " << r.frozen << " frozen)\nverdict: " << (r.finite ? "finite" : "exceeded-budget")
                  << "\ndepth: " << r.depth << '\n';
        if (list_vars)
          for (const auto& s : r.variable_strings) std::cout << "  " << s << '\n';
      }
      return 0;
    }
    if (*sfw) {
      auto c = construct({{"cartan", cartan_arg(cartan)}, {"word", word}});
      auto v = seed_view(c, c.seed);
      v["origin"] = c.origin;
      if (fmt == Format::Json)
        std::cout << v.dump(2) << '\n';
      else
        print_seed_text(v);
      return 0;
    }
    if (*dseq) {
      const auto cm = cartan_from_json(cartan_arg(cartan));
      const auto w = parse_word(word);
      auto run = run_labeled_sequence(cm, w);
      auto seq = distinguished_vertices(cm, w);
      auto pos = word_positions(cm.n(), w);
      long expected = 0;
      for (int j = 1; j <= cm.n(); ++j) expected += pos.t[j] * (pos.t[j] - 1) / 2;
      if (jsonl) {
        for (const auto& t : run.trace) std::cout << to_json(t).dump() << '\n';
      } else if (fmt == Format::Json) {
        auto j = to_json(run);
        j["sequence"] = seq;
        j["expected_length"] = expected;
        std::cout << j.dump(2) << '\n';
      } else {
        std::cout << "sequence:";
        for (int k : seq) std::cout << " mu" << k;
        std::cout << "\nlength: " << seq.size() << " (sum t_j(t_j-1)/2 = " << expected << ")\n";
        for (const auto& t : run.trace) {
          std::cout << "step " << t.step << ": mu" << t.vertex << "  " << t.old_label.str() << " -> "
                    << t.new_label.str() << '\n';
        }
        std::cout << "final labels are the T_k: " << (run.final_matches_t ? "yes" : "no")
                  << "\ninterval coverage: " << (run.coverage ? "yes" : "no") << '\n';
      }
      return run.final_matches_t && run.coverage && static_cast<long>(seq.size()) == expected ? 0 : 1;
    }
    if (*ca) {
      std::vector<Report> reports;
      if (part == "eq4" || part == "all") reports.push_back(verify_eqnotCA());
      if (part == "phi" || part == "all") reports.push_back(verify_phi_identities());
      if (part == "nprime" || part == "all") reports.push_back(verify_nprime_invariance(truncation));
      if (part == "chamber" || part == "all") reports.push_back(chamber_ansatz());
      return print_reports(reports, fmt) ? 0 : 1;
    }
    if (*qc) {
      auto report = verify_quantum_example();
      if (!qpath.empty()) {
        auto s = word_quantum_seed(CartanMatrix::from_name("affine-a1"), WeylWord{{1, 2, 1, 2}}, affine_homdims());
        for (int k : qpath) s = quantum_mutate(s, k);
        if (fmt == Format::Json) {
          std::cout << json{{"seed", to_json(s)}, {"report", to_json(report)}}.dump(2) << '\n';
        } else {
          for (int k = 1; k <= static_cast<int>(s.vars.size()); ++k)
            std::cout << "Y" << k << "' = " << to_string(s.var(k), s.ring) << '\n';
          print_reports({report}, fmt);
        }
        return report.all_hold() ? 0 : 1;
      }
      return print_reports({report}, fmt) ? 0 : 1;
    }
    if (*va) return print_reports(golden_reports(), fmt) ? 0 : 1;
    if (*srv) {
      std::optional<std::filesystem::path> dir;
      if (!state_dir.empty()) dir = state_dir;
      SessionStore store(dir);
      httplib::Server server;
      install_routes(server, store);
      std::cerr << "mwb serving on http://" << host << ":" << port << '\n';
      if (!server.listen(host, port)) throw BadInput("cannot listen on " + host + ":" + std::to_string(port));
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
