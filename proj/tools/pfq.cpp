// Command-line workbench for finite quandles and truncated towers.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pfq/abelian.hpp"
#include "pfq/errors.hpp"
#include "pfq/inner.hpp"
#include "pfq/io.hpp"
#include "pfq/iso.hpp"
#include "pfq/probe.hpp"
#include "pfq/subquandle.hpp"
#include "pfq/suite.hpp"
#include "pfq/tower.hpp"

using json = nlohmann::json;
using namespace pfq;

namespace {

struct GlobalOpts {
  std::string format = "human";
  uint64_t seed = kDefaultSeed;
  long bound = kDefaultOrderBound;
  bool structured() const { return format == "structured"; }
};

void print_table(std::ostream &os, const std::vector<std::vector<int>> &rows) {
  for (const auto &row : rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) os << ' ';
      os << row[i];
    }
    os << '\n';
  }
}

std::string elem_set_str(const std::vector<int> &elems) {
  std::ostringstream os;
  os << '{';
  for (size_t i = 0; i < elems.size(); ++i) {
    if (i) os << ' ';
    os << elems[i];
  }
  os << '}';
  return os.str();
}

int cmd_validate(const GlobalOpts &g, const std::string &file) {
  const FiniteQuandle q = load_quandle(file);
  if (g.structured()) {
    json j{{"file", file}, {"n", q.size()}, {"valid", true}};
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "quandle: " << q.size() << " elements, axioms OK\n";
  }
  return 0;
}

int cmd_info(const GlobalOpts &g, const std::string &file) {
  const FiniteQuandle q = load_quandle(file);
  const auto orbits = reachability_orbits(q);
  const bool connected = q.size() >= 1 && orbits.size() == 1;
  if (g.structured()) {
    json j{{"file", file},
           {"n", q.size()},
           {"kei", q.is_kei()},
           {"connected", connected},
           {"orbit_count", orbits.size()},
           {"op", q.rows()}};
    std::cout << j.dump() << '\n';
    return 0;
  }
  std::cout << "elements:  " << q.size() << "\n"
            << "kei:       " << (q.is_kei() ? "yes" : "no") << "\n"
            << "connected: " << (connected ? "yes" : "no") << " ("
            << orbits.size() << " orbit" << (orbits.size() == 1 ? "" : "s")
            << ")\n";
  std::cout << "table (0-indexed):\n";
  print_table(std::cout, q.rows());
  std::cout << "table (1-indexed):\n";
  print_table(std::cout, q.rows_one_indexed());
  return 0;
}

int cmd_inner(const GlobalOpts &g, const std::string &file, bool with_aut) {
  const FiniteQuandle q = load_quandle(file);
  const PermGroup in = inn(q, g.bound);
  json j{{"file", file},
         {"inn_order", in.order()},
         {"transitive", in.is_transitive()}};
  json jorbits = json::array();
  for (const auto &o : in.orbits()) jorbits.push_back(o);
  j["orbits"] = jorbits;
  if (with_aut) {
    const PermGroup a = aut(q);
    j["aut_order"] = a.order();
    bool normal = true;
    for (const auto &x : a.elements())
      for (const auto &s : in.generators())
        if (!in.contains(conjugate(s, x))) normal = false;
    j["inn_normal_in_aut"] = normal;
  }
  if (g.structured()) {
    std::cout << j.dump() << '\n';
    return 0;
  }
  std::cout << "|Inn| = " << j["inn_order"] << ", "
            << (in.is_transitive() ? "transitive" : "not transitive") << '\n';
  std::cout << "orbits:";
  for (const auto &o : in.orbits()) {
    std::cout << ' ' << elem_set_str(o);
  }
  std::cout << '\n';
  if (with_aut)
    std::cout << "|Aut| = " << j["aut_order"]
              << (j["inn_normal_in_aut"].get<bool>() ? ", Inn normal in Aut"
                                                     : ", NORMALITY FAILED")
              << '\n';
  return 0;
}

int cmd_subquandles(const GlobalOpts &g, const std::string &file,
                    bool with_complements) {
  const FiniteQuandle q = load_quandle(file);
  const auto subs = all_subquandles(q);
  if (g.structured()) {
    json j{{"file", file}, {"count", subs.size()}};
    json list = json::array();
    for (const auto &s : subs) {
      json entry{{"elems", s}};
      if (with_complements) {
        auto c = find_complement(q, s);
        entry["complement"] = c ? json(*c) : json();
      }
      list.push_back(std::move(entry));
    }
    j["subquandles"] = std::move(list);
    std::cout << j.dump() << '\n';
    return 0;
  }
  std::cout << subs.size() << " subquandles\n";
  for (const auto &s : subs) {
    std::cout << "  " << elem_set_str(s);
    if (with_complements) {
      auto c = find_complement(q, s);
      std::cout << "  complement: " << (c ? elem_set_str(*c) : "ABSENT");
    }
    std::cout << '\n';
  }
  return 0;
}

int cmd_ehrman(const GlobalOpts &g, const std::string &file, int base) {
  const FiniteQuandle q = load_quandle(file);
  const EhrmanData data = ehrman_decompose(q, base, g.bound);
  const CosetQuandle rebuilt =
      coset_quandle(CosetQuandleSpec{data.g, data.h_stab, data.h});
  const bool roundtrip = are_isomorphic(q, rebuilt.q);
  if (g.structured()) {
    json j{{"file", file},
           {"base", base},
           {"inn_order", data.g.order()},
           {"stabilizer_order", data.h_stab.order()},
           {"h", data.h.to_cycle_string()},
           {"cosets", data.cosets.size()},
           {"roundtrip_isomorphic", roundtrip}};
    std::cout << j.dump() << '\n';
    return roundtrip ? 0 : 1;
  }
  std::cout << "base point " << base << ": |G| = " << data.g.order()
            << ", |H| = " << data.h_stab.order() << ", h = "
            << data.h.to_cycle_string() << " (central in H)\n"
            << "cosets: " << data.cosets.size()
            << ", conjugate augmentations generate Inn\n"
            << "coset quandle isomorphic to input: "
            << (roundtrip ? "yes" : "NO") << '\n';
  return roundtrip ? 0 : 1;
}

int cmd_coset_quandle(const GlobalOpts &g, const std::string &group_file,
                      const std::vector<std::string> &subgroup,
                      const std::string &h) {
  const PermGroup big = load_perm_group(group_file, g.bound);
  std::vector<Permutation> gens;
  for (const auto &s : subgroup)
    gens.push_back(Permutation::from_cycles(s, big.degree()));
  PermGroup sub = gens.empty()
                      ? PermGroup::generate({}, big.degree(), g.bound)
                      : PermGroup::generate(std::move(gens), big.degree(), g.bound);
  const Permutation hc = Permutation::from_cycles(h, big.degree());
  const CosetQuandle cq =
      coset_quandle(CosetQuandleSpec{big, std::move(sub), hc});
  if (g.structured()) {
    std::cout << quandle_json(cq.q) << '\n';
  } else {
    std::cout << "# right coset quandle: " << cq.q.size()
              << " cosets, axioms OK\n"
              << to_qnd(cq.q);
  }
  return 0;
}

int cmd_enumerate(const GlobalOpts &g, int order, bool connected_only) {
  const auto found = connected_only ? enumerate_connected(order)
                                    : enumerate_all(order);
  if (g.structured()) {
    json j{{"order", order},
           {"connected_only", connected_only},
           {"count", found.size()}};
    json list = json::array();
    for (const auto &q : found) list.push_back(q.rows());
    j["tables"] = std::move(list);
    std::cout << j.dump() << '\n';
    return 0;
  }
  std::cout << found.size() << (connected_only ? " connected" : "")
            << " quandle" << (found.size() == 1 ? "" : "s") << " of order "
            << order << " up to isomorphism\n";
  for (size_t i = 0; i < found.size(); ++i) {
    std::cout << "# " << (i + 1) << '\n' << to_qnd(found[i]);
  }
  return 0;
}

int cmd_tower_check(const GlobalOpts &g, const QuandleTower &t) {
  validate_tower(t);
  json sizes = json::array();
  for (const auto &lvl : t.levels) sizes.push_back(lvl.size());
  if (g.structured()) {
    json j{{"depth", t.depth()}, {"level_sizes", sizes}, {"valid", true},
           {"levelwise_connected", levelwise_connected(t)}};
    std::cout << j.dump() << '\n';
    return 0;
  }
  std::cout << "tower: depth " << t.depth() << ", level sizes";
  for (const auto &lvl : t.levels) std::cout << ' ' << lvl.size();
  std::cout << ", transitions are surjective homs\n";
  std::cout << "levelwise connected: "
            << (levelwise_connected(t) ? "yes" : "no") << '\n';
  return 0;
}

int cmd_tower_elements(const GlobalOpts &g, const QuandleTower &t) {
  const auto elems = all_elements(t);
  if (g.structured()) {
    json j{{"depth", t.depth()}, {"count", elems.size()}};
    json list = json::array();
    for (const auto &e : elems) list.push_back(e);
    j["elements"] = std::move(list);
    std::cout << j.dump() << '\n';
    return 0;
  }
  std::cout << elems.size() << " coherent elements\n";
  for (const auto &e : elems) {
    std::cout << "  (";
    for (size_t k = 0; k < e.size(); ++k) {
      if (k) std::cout << ',';
      std::cout << e[k];
    }
    std::cout << ")\n";
  }
  return 0;
}

int cmd_tower_density(const GlobalOpts &g, const QuandleTower &t,
                      const std::vector<std::string> &seed_strs) {
  std::vector<TruncatedElement> seeds;
  for (const auto &s : seed_strs) {
    TruncatedElement e;
    std::istringstream in(s);
    std::string part;
    while (std::getline(in, part, ',')) e.push_back(std::stoi(part));
    require_element(t, e);
    seeds.push_back(std::move(e));
  }
  const DensityReport rep = density_check(t, seeds);
  if (g.structured()) {
    json j{{"dense", rep.dense}};
    json lvls = json::array();
    for (int k = 0; k < t.depth(); ++k)
      lvls.push_back({{"level", k},
                      {"closed_image", rep.level_images[static_cast<size_t>(k)]},
                      {"full", static_cast<bool>(rep.full[static_cast<size_t>(k)])}});
    j["levels"] = std::move(lvls);
    std::cout << j.dump() << '\n';
    return 0;
  }
  std::cout << "dense at depth " << t.depth() << ": "
            << (rep.dense ? "yes" : "no") << '\n';
  for (int k = 0; k < t.depth(); ++k)
    std::cout << "  level " << k << ": closed image "
              << elem_set_str(rep.level_images[static_cast<size_t>(k)]) << " of "
              << t.levels[static_cast<size_t>(k)].size() << " element(s)"
              << (rep.full[static_cast<size_t>(k)] ? " (full)" : "") << '\n';
  return 0;
}

int cmd_tower_inn(const GlobalOpts &g, const QuandleTower &t, long bound) {
  const GroupTower gt = inn_tower(t, bound);
  if (g.structured()) {
    json orders = json::array();
    for (const auto &lvl : gt.levels) orders.push_back(lvl.order());
    json j{{"depth", gt.depth()},
           {"inn_orders", orders},
           {"transitions_surjective", true}};
    std::cout << j.dump() << '\n';
    return 0;
  }
  std::cout << "inner tower orders:";
  for (const auto &lvl : gt.levels) std::cout << ' ' << lvl.order();
  std::cout << "\ninduced transitions are surjective\n";
  return 0;
}

int cmd_tower_probe(const GlobalOpts &g, const QuandleTower &t, long bound) {
  validate_tower(t);
  levelwise_action_check(t, bound);
  const GroupTower gt = inn_tower(t, bound);
  if (g.structured()) {
    json orders = json::array();
    for (const auto &lvl : gt.levels) orders.push_back(lvl.order());
    json j{{"depth", t.depth()},
           {"inn_orders", orders},
           {"equivariant", true},
           {"levelwise_connected", levelwise_connected(t)}};
    std::cout << j.dump() << '\n';
    return 0;
  }
  std::cout << "tower valid; projections equivariant for induced inner maps\n"
            << "inner tower orders:";
  for (const auto &lvl : gt.levels) std::cout << ' ' << lvl.order();
  std::cout << "\nlevelwise connected: "
            << (levelwise_connected(t) ? "yes" : "no") << '\n';
  return 0;
}

int cmd_probe_counterexample(const GlobalOpts &g, int depth) {
  const ProbeReport r = counterexample_probe(depth);
  if (g.structured()) {
    json j{{"depth", r.depth},
           {"ell_coherent", r.ell_coherent},
           {"min_transpositions_unbounded", r.unbounded}};
    json factors = json::array();
    for (const auto &f : r.factors)
      factors.push_back({{"symbols", f.n},
                         {"min_transpositions", f.min_transpositions},
                         {"parity", f.odd ? "odd" : "even"}});
    j["ell"] = std::move(factors);
    json levels = json::array();
    for (const auto &l : r.levels)
      levels.push_back({{"level", l.level},
                        {"carrier", l.carrier},
                        {"inn_order", l.inn_order},
                        {"equal_parity_order", l.same_parity_order},
                        {"equality", l.equality_exhaustive ? "exhaustive"
                                                           : "constructive"},
                        {"ell_member", l.ell_member},
                        {"orbit_count", l.orbit_count},
                        {"carrier_cross_checked", l.carrier_cross_checked}});
    j["levels"] = std::move(levels);
    std::cout << j.dump() << '\n';
    return 0;
  }
  std::cout << "two-cycle product tower, depth " << r.depth << '\n';
  for (const auto &l : r.levels)
    std::cout << "  level " << l.level << ": carrier " << l.carrier
              << ", |Inn| = " << l.inn_order
              << " = equal-parity subgroup order " << l.same_parity_order
              << (l.equality_exhaustive ? " (exhaustive)" : " (constructive)")
              << ", orbits " << l.orbit_count
              << (l.ell_member ? ", contains l" : ", MISSING l")
              << (l.carrier_cross_checked ? " [cross-checked]" : "") << '\n';
  std::cout << "l coordinates:";
  for (const auto &f : r.factors)
    std::cout << " (" << f.n << ": " << f.min_transpositions << " transpositions, "
              << (f.odd ? "odd" : "even") << ')';
  std::cout << "\ncoherent: " << (r.ell_coherent ? "yes" : "no")
            << "; transposition cost unbounded: "
            << (r.unbounded ? "yes" : "no") << '\n';
  return (r.ell_coherent && r.unbounded) ? 0 : 1;
}

int cmd_adtak(const GlobalOpts &g, const std::string &file) {
  const FiniteQuandle q = load_quandle(file);
  const FGAbelianGroup result = adtak(q);
  if (g.structured()) {
    json torsion = json::array();
    for (const auto &d : result.torsion) torsion.push_back(d.str());
    json j{{"file", file},
           {"free_rank", result.free_rank},
           {"torsion", torsion},
           {"group", result.to_string()}};
    std::cout << j.dump() << '\n';
    return 0;
  }
  std::cout << result.to_string() << '\n';
  return 0;
}

int cmd_paper_suite(const GlobalOpts &g, const std::string &only) {
  SuiteOptions opts;
  opts.only = only;
  opts.seed = g.seed;
  const auto results = run_paper_suite(opts);
  int failures = 0;
  for (const auto &r : results) {
    if (!r.pass) ++failures;
    if (g.structured()) {
      json j{{"id", r.id},
             {"claim", r.claim},
             {"status", r.pass ? "PASS" : "FAIL"},
             {"witness", r.witness}};
      std::cout << j.dump() << '\n';
    } else {
      std::cout << (r.pass ? "PASS " : "FAIL ") << r.id << "  " << r.claim;
      if (!r.pass) std::cout << "  [" << r.witness << "]";
      std::cout << '\n';
    }
  }
  if (!g.structured())
    std::cout << (results.size() - static_cast<size_t>(failures)) << "/"
              << results.size() << " checks passed\n";
  return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"workbench for finite quandles and truncated towers of finite quandles"};
  app.require_subcommand(1);
  GlobalOpts g;
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"human", "structured"}))
      ->capture_default_str();
  app.add_option("--seed", g.seed, "seed for sampled checks");
  app.add_option("--bound", g.bound, "group order bound for closures");

  std::string file, group_file, h_str, only, desc_file;
  std::vector<std::string> subgroup, seeds;
  int base = 0, order = 3, depth = 3;
  bool with_aut = false, with_complements = false, connected_only = false;

  auto *validate = app.add_subcommand("validate", "check the axioms of a quandle file");
  validate->add_option("file", file)->required();

  auto *info = app.add_subcommand("info", "carrier facts and both table indexings");
  info->add_option("file", file)->required();

  auto *inner_cmd = app.add_subcommand("inner", "inner automorphism group");
  inner_cmd->add_option("file", file)->required();
  inner_cmd->add_flag("--aut", with_aut, "also compute the full automorphism group");

  auto *subs = app.add_subcommand("subquandles", "subquandle lattice");
  subs->add_option("file", file)->required();
  subs->add_flag("--complements", with_complements, "find a complement for each");

  auto *ehrman = app.add_subcommand("ehrman", "connected decomposition at a base point");
  ehrman->add_option("file", file)->required();
  ehrman->add_option("--base", base, "base point")->capture_default_str();

  auto *coset = app.add_subcommand("coset-quandle", "right coset quandle from (G, H, h)");
  coset->set_help_flag("--help", "print help"); // frees -h for the element flag
  coset->add_option("--group", group_file, "group file")->required();
  coset->add_option("--subgroup", subgroup, "subgroup generators in cycle notation");
  coset->add_option("-h,--h", h_str, "central element in cycle notation")->required();

  auto *enumerate = app.add_subcommand("enumerate", "quandles of one order up to isomorphism");
  enumerate->add_option("--order", order, "carrier size")->required();
  enumerate->add_flag("--connected", connected_only, "connected quandles only");

  auto *tower = app.add_subcommand("tower", "operations on a tower descriptor");
  tower->add_option("descriptor", desc_file, "descriptor file")->required();
  tower->require_subcommand(1);
  auto *t_check = tower->add_subcommand("check", "validate the tower");
  auto *t_elements = tower->add_subcommand("elements", "list coherent tuples");
  auto *t_density = tower->add_subcommand("density", "closed projections of seed tuples");
  t_density->add_option("--seeds", seeds, "coherent tuples, e.g. --seeds 0,0,0")
      ->required();
  auto *t_inn = tower->add_subcommand("inn", "levelwise inner groups");
  auto *t_probe = tower->add_subcommand("probe", "equivariance and inner tower report");

  auto *probe = app.add_subcommand("probe", "standing probes");
  probe->require_subcommand(1);
  auto *p_cx = probe->add_subcommand(
      "counterexample", "inner groups of the two-cycle product tower");
  p_cx->add_option("--depth", depth, "number of levels")->capture_default_str();

  auto *adtak_cmd = app.add_subcommand("adtak", "abelianized kei invariant");
  adtak_cmd->add_option("file", file)->required();

  auto *suite = app.add_subcommand("paper-suite", "run the full proposition battery");
  suite->add_option("--only", only, "restrict to blocks with this prefix");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    std::cerr << e.what() << '\n';
    return 2;
  }

  try {
    if (*validate) return cmd_validate(g, file);
    if (*info) return cmd_info(g, file);
    if (*inner_cmd) return cmd_inner(g, file, with_aut);
    if (*subs) return cmd_subquandles(g, file, with_complements);
    if (*ehrman) return cmd_ehrman(g, file, base);
    if (*coset) return cmd_coset_quandle(g, group_file, subgroup, h_str);
    if (*enumerate) return cmd_enumerate(g, order, connected_only);
    if (*tower) {
      const QuandleTower t = load_tower(desc_file, g.bound);
      if (*t_check) return cmd_tower_check(g, t);
      if (*t_elements) return cmd_tower_elements(g, t);
      if (*t_density) return cmd_tower_density(g, t, seeds);
      if (*t_inn) return cmd_tower_inn(g, t, g.bound);
      if (*t_probe) return cmd_tower_probe(g, t, g.bound);
    }
    if (*probe && *p_cx) return cmd_probe_counterexample(g, depth);
    if (*adtak_cmd) return cmd_adtak(g, file);
    if (*suite) return cmd_paper_suite(g, only);
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
