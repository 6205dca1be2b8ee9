// Command-line front end: parse edge-list files or generate families,
// dispatch the library computations, and render text or JSON.
//
// Exit codes: 0 success, 1 theorem/agreement violation, 2 usage or parse
// error, 3 enumeration budget exhausted.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "chromatic/all.hpp"

using namespace chromatic;

namespace {

struct GraphInput {
  std::string path;
  std::string family_name;
  int n = 0;

  void attach(CLI::App* cmd) {
    auto* file = cmd->add_option("input", path, "edge-list file");
    auto* fam = cmd->add_option("--family", family_name,
                                "complete|cycle|path|edgeless");
    auto* size = cmd->add_option("-n", n, "vertex count for --family");
    file->excludes(fam);
    fam->excludes(file);
    size->needs(fam);
  }

  Graph load() const {
    if (!path.empty()) return parse_graph_file(path);
    if (!family_name.empty())
      return family(family_from_name(family_name), n);
    throw std::invalid_argument(
        "no input graph: pass an edge-list file or --family with -n");
  }
};

Json edges_json(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (Edge e : edges) out.push_back({e.u, e.v});
  return out;
}

std::string edge_set_text(const std::vector<Edge>& edges) {
  std::string out = "{";
  for (size_t i = 0; i < edges.size(); ++i) {
    if (i) out += ", ";
    out += to_string(edges[i]);
  }
  return out + "}";
}

std::string counts_text(const std::vector<long long>& counts) {
  std::string out;
  for (size_t i = 0; i < counts.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(counts[i]);
  }
  return out;
}

int run_check(const Graph& g, const Budget& budget, bool json) {
  struct Row {
    std::string name, detail;
    bool pass;
  };
  std::vector<Row> rows;
  auto attempt = [&](const std::string& name, auto&& body) {
    try {
      rows.push_back({name, body(), true});
    } catch (const TheoremViolation& violation) {
      rows.push_back({name, violation.what(), false});
    }
  };

  attempt("three-way polynomial agreement", [&] {
    IntPoly dc = chromatic_poly_dc(g);
    IntPoly nbc = chromatic_poly_nbc(g, EdgeOrder::lex(g), budget);
    IntPoly interp = chromatic_poly_interp(g, budget);
    if (dc != nbc || dc != interp)
      throw TheoremViolation("dc=" + dc.to_string() + " nbc=" +
                             nbc.to_string() + " interp=" +
                             interp.to_string());
    return "P = " + dc.to_string();
  });
  attempt("compatible pairs (Stanley)", [&] {
    const int t_max = g.vertex_count() <= 5 ? 3 : 2;
    verify_stanley(g, t_max, budget);
    return "t = 1.." + std::to_string(t_max);
  });
  attempt("arrangement regions (Zaslavsky)", [&] {
    auto report = verify_zaslavsky(g, budget);
    return "chi(-1) = " + report.chi_at_minus_one.to_string() + ", regions = " +
           std::to_string(report.regions);
  });
  attempt("increasing forests", [&] {
    auto report = verify_isf_theorems(g, budget);
    return std::string("natural PEO: ") +
           (report.natural_peo ? "yes" : "no") + ", ISF" +
           (report.polys_equal ? " = " : " != ") + "P";
  });
  attempt("symmetric function specialization", [&] {
    IntPoly specialized = specialize(csf_nbc(g, EdgeOrder::lex(g), budget));
    IntPoly dc = chromatic_poly_dc(g);
    if (specialized != dc)
      throw TheoremViolation("specialization gives " +
                             specialized.to_string() + ", P = " +
                             dc.to_string());
    return std::string("specializes to P");
  });
  attempt("log-concavity", [&] {
    auto report = check_log_concavity(chromatic_poly_dc(g));
    if (!report.log_concave)
      throw TheoremViolation("coefficient sequence is not log-concave");
    return std::string(report.signs_alternate ? "holds, signs alternate"
                                              : "holds");
  });

  bool all_pass = true;
  if (json) {
    Json out = Json::array();
    for (const Row& row : rows) {
      out.push_back({{"check", row.name},
                     {"status", row.pass ? "pass" : "fail"},
                     {"detail", row.detail}});
      all_pass = all_pass && row.pass;
    }
    std::cout << out.dump() << "\n";
  } else {
    for (const Row& row : rows) {
      std::cout << (row.pass ? "PASS " : "FAIL ") << row.name << ": "
                << row.detail << "\n";
      all_pass = all_pass && row.pass;
    }
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact chromatic polynomial toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json = false;
  Budget budget;
  app.add_flag("--json", json, "machine-readable output");
  app.add_option("--max-subsets", budget.max_subsets,
                 "subset enumeration budget");
  app.add_option("--max-colorings", budget.max_colorings,
                 "coloring enumeration budget");

  auto* poly_cmd = app.add_subcommand("poly", "chromatic polynomial");
  GraphInput poly_in;
  poly_in.attach(poly_cmd);
  std::string method = "dc";
  poly_cmd->add_option("--method", method, "dc|nbc|interp")
      ->check(CLI::IsMember({"dc", "nbc", "interp"}));

  auto* eval_cmd = app.add_subcommand("eval", "evaluate P(G;t)");
  GraphInput eval_in;
  eval_in.attach(eval_cmd);
  long long eval_t = 0;
  eval_cmd->add_option("-t", eval_t, "evaluation point")->required();

  auto* chrom_cmd = app.add_subcommand("chromatic-number", "least t with P(G;t) > 0");
  GraphInput chrom_in;
  chrom_in.attach(chrom_cmd);

  auto* nbc_cmd = app.add_subcommand("nbc", "broken circuits and NBC sets");
  GraphInput nbc_in;
  nbc_in.attach(nbc_cmd);

  auto* orient_cmd = app.add_subcommand("orient", "acyclic orientations");
  GraphInput orient_in;
  orient_in.attach(orient_cmd);
  bool pairs_flag = false;
  long long pairs_t = 1;
  auto* pairs_opt =
      orient_cmd->add_flag("--pairs", pairs_flag, "count compatible pairs");
  orient_cmd->add_option("-t", pairs_t, "colors for --pairs")
      ->needs(pairs_opt);

  auto* arr_cmd = app.add_subcommand("arrangement", "bond lattice of the graphical arrangement");
  GraphInput arr_in;
  arr_in.attach(arr_cmd);

  auto* isf_cmd = app.add_subcommand("isf", "increasing spanning forests");
  GraphInput isf_in;
  isf_in.attach(isf_cmd);

  auto* csf_cmd = app.add_subcommand("csf", "chromatic symmetric function");
  GraphInput csf_in;
  csf_in.attach(csf_cmd);

  auto* gen_cmd = app.add_subcommand("gen", "emit a graph in edge-list form");
  std::string gen_family;
  int gen_n = 0;
  double gen_p = 0.5;
  std::uint32_t gen_seed = 1;
  gen_cmd->add_option("--family", gen_family,
                      "complete|cycle|path|edgeless|random")
      ->required();
  gen_cmd->add_option("-n", gen_n, "vertex count")->required();
  gen_cmd->add_option("--p", gen_p, "edge probability for random");
  gen_cmd->add_option("--seed", gen_seed, "seed for random");

  auto* trees_cmd = app.add_subcommand("trees", "tree classes and distinctness scan");
  int trees_max_n = 8;
  trees_cmd->add_option("--max-n", trees_max_n, "largest vertex count")
      ->required();

  auto* check_cmd = app.add_subcommand("check", "verify every identity on one graph");
  GraphInput check_in;
  check_in.attach(check_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& parse_error) {
    app.exit(parse_error);
    return 2;
  }

  try {
    if (app.got_subcommand(poly_cmd)) {
      Graph g = poly_in.load();
      IntPoly p = method == "dc"
                      ? chromatic_poly_dc(g)
                      : method == "nbc"
                            ? chromatic_poly_nbc(g, EdgeOrder::lex(g), budget)
                            : chromatic_poly_interp(g, budget);
      if (json)
        std::cout << poly_to_json(p).dump() << "\n";
      else
        std::cout << p.to_string() << "\n";
    } else if (app.got_subcommand(eval_cmd)) {
      CheckedInt value = chromatic_poly_dc(eval_in.load()).eval(eval_t);
      if (json)
        std::cout << Json{{"value", checked_to_json(value)}}.dump() << "\n";
      else
        std::cout << value.to_string() << "\n";
    } else if (app.got_subcommand(chrom_cmd)) {
      int chi = chromatic_number(chrom_in.load());
      if (json)
        std::cout << Json{{"chromatic_number", chi}}.dump() << "\n";
      else
        std::cout << chi << "\n";
    } else if (app.got_subcommand(nbc_cmd)) {
      Graph g = nbc_in.load();
      NbcReport report = nbc_report(g, EdgeOrder::lex(g), budget);
      if (json) {
        Json out;
        out["broken_circuits"] = Json::array();
        for (const auto& bc : report.broken_circuits)
          out["broken_circuits"].push_back(edges_json(bc));
        out["counts"] = report.counts;
        out["sets_by_k"] = Json::array();
        for (const auto& level : report.sets_by_k) {
          Json sets = Json::array();
          for (const auto& set : level) sets.push_back(edges_json(set));
          out["sets_by_k"].push_back(sets);
        }
        std::cout << out.dump() << "\n";
      } else {
        std::cout << "broken circuits:";
        for (const auto& bc : report.broken_circuits)
          std::cout << " " << edge_set_text(bc);
        std::cout << "\nnbc counts: " << counts_text(report.counts) << "\n";
        long long total = 0;
        for (long long c : report.counts) total += c;
        if (total <= 200) {
          for (size_t k = 0; k < report.sets_by_k.size(); ++k) {
            if (report.sets_by_k[k].empty() && k > 0) continue;
            std::cout << "k=" << k << ":";
            for (const auto& set : report.sets_by_k[k])
              std::cout << " " << edge_set_text(set);
            std::cout << "\n";
          }
        }
      }
    } else if (app.got_subcommand(orient_cmd)) {
      Graph g = orient_in.load();
      CheckedInt total = 1;
      for (int i = 0; i < g.edge_count(); ++i) total *= 2;
      long long acyclic = acyclic_orientations(g, budget).count;
      Json out{{"orientations", checked_to_json(total)},
               {"acyclic", acyclic}};
      std::string pairs_line;
      if (pairs_flag) {
        CheckedInt pairs = compatible_pairs_count(g, pairs_t, budget);
        out["pairs"] = checked_to_json(pairs);
        out["t"] = pairs_t;
        pairs_line = "compatible pairs (t=" + std::to_string(pairs_t) +
                     "): " + pairs.to_string() + "\n";
      }
      if (json)
        std::cout << out.dump() << "\n";
      else
        std::cout << "orientations: " << total.to_string()
                  << "\nacyclic: " << acyclic << "\n"
                  << pairs_line;
    } else if (app.got_subcommand(arr_cmd)) {
      Graph g = arr_in.load();
      BondLattice lattice = bond_lattice(g, budget);
      IntPoly chi = characteristic_poly(lattice);
      if (json) {
        Json flats = Json::array();
        for (size_t i = 0; i < lattice.flats().size(); ++i)
          flats.push_back({{"blocks", lattice.flats()[i].to_string()},
                           {"dim", lattice.flats()[i].dim()},
                           {"mobius", checked_to_json(lattice.mobius()[i])}});
        std::cout << Json{{"flat_count", lattice.flats().size()},
                          {"characteristic", poly_to_json(chi)},
                          {"flats", flats}}
                         .dump()
                  << "\n";
      } else {
        std::cout << "flats: " << lattice.flats().size()
                  << "\ncharacteristic: " << chi.to_string() << "\n";
        if (lattice.flats().size() <= 100)
          for (size_t i = 0; i < lattice.flats().size(); ++i)
            std::cout << lattice.flats()[i].to_string() << "  dim "
                      << lattice.flats()[i].dim() << "  mu "
                      << lattice.mobius()[i].to_string() << "\n";
      }
    } else if (app.got_subcommand(isf_cmd)) {
      Graph g = isf_in.load();
      LevelSets levels = level_sets(g);
      IntPoly p = isf_poly(g);
      IsfFamily fam = enumerate_isf(g, budget);
      PeoResult peo = is_natural_peo(g);
      if (json) {
        Json out;
        out["level_sizes"] = std::vector<int>(levels.sizes.begin() + 1,
                                              levels.sizes.end());
        out["isf"] = poly_to_json(p);
        out["counts"] = fam.counts;
        out["natural_peo"] = peo.ok;
        if (!peo.ok) {
          out["violating_vertex"] = peo.violating_vertex;
          out["missing_edge"] = {peo.missing.first, peo.missing.second};
        }
        std::cout << out.dump() << "\n";
      } else {
        std::cout << "level sizes:";
        for (int j = 1; j <= g.vertex_count(); ++j)
          std::cout << " " << levels.sizes[j];
        std::cout << "\nisf: " << p.to_string()
                  << "\nisf counts: " << counts_text(fam.counts)
                  << "\nnatural peo: ";
        if (peo.ok)
          std::cout << "yes\n";
        else
          std::cout << "no (vertex " << peo.violating_vertex
                    << ", missing edge " << peo.missing.first << "-"
                    << peo.missing.second << ")\n";
      }
    } else if (app.got_subcommand(csf_cmd)) {
      Graph g = csf_in.load();
      PSymFunc x = csf_nbc(g, EdgeOrder::lex(g), budget);
      if (json)
        std::cout << psym_to_json(x).dump() << "\n";
      else
        std::cout << x.to_string() << "\n";
    } else if (app.got_subcommand(gen_cmd)) {
      Graph g = gen_family == "random"
                    ? random_graph(gen_n, gen_p, gen_seed)
                    : family(family_from_name(gen_family), gen_n);
      if (json)
        std::cout << Json{{"n", g.vertex_count()},
                          {"edges", edges_json(g.edges())}}
                         .dump()
                  << "\n";
      else
        std::cout << to_edge_list(g);
    } else if (app.got_subcommand(trees_cmd)) {
      TreeScanReport report = tree_scan(trees_max_n, budget);
      if (json) {
        Json out;
        out["class_counts"] = std::vector<long long>(
            report.class_counts.begin() + 1, report.class_counts.end());
        out["chromatic_standard"] = report.all_chromatic_standard;
        out["csf_distinct"] = report.all_csf_distinct;
        if (!report.collision.empty()) out["collision"] = report.collision;
        std::cout << out.dump() << "\n";
      } else {
        for (int n = 1; n <= report.n_max; ++n)
          std::cout << "n=" << n << ": " << report.class_counts[n]
                    << (report.class_counts[n] == 1 ? " class\n"
                                                    : " classes\n");
        std::cout << "chromatic standard: "
                  << (report.all_chromatic_standard ? "yes" : "no")
                  << "\ncsf distinct: "
                  << (report.all_csf_distinct ? "yes" : "no") << "\n";
        if (!report.collision.empty())
          std::cout << "collision: " << report.collision << "\n";
      }
      if (!report.all_csf_distinct || !report.all_chromatic_standard)
        return 1;
    } else if (app.got_subcommand(check_cmd)) {
      return run_check(check_in.load(), budget, json);
    }
    return 0;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceError& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return 3;
  } catch (const TheoremViolation& e) {
    std::cerr << "theorem violation: " << e.what() << "\n";
    return 1;
  } catch (const std::overflow_error& e) {
    std::cerr << "arithmetic limit: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
