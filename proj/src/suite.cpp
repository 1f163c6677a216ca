#include "pfq/suite.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "pfq/abelian.hpp"
#include "pfq/errors.hpp"
#include "pfq/inner.hpp"
#include "pfq/iso.hpp"
#include "pfq/probe.hpp"
#include "pfq/subquandle.hpp"
#include "pfq/tower.hpp"

namespace pfq {

namespace {

// Frozen desk-scale constants, computed once with the brute-force oracles in
// this file and the tests; the enumerative code must keep reproducing them.
constexpr int kConnectedCounts[6] = {1, 1, 0, 1, 1, 3}; // orders 0..5
const char *const kAdtakSingleton = "Z";
const char *const kAdtakTrivial2 = "Z x Z/2";
const char *const kAdtakTrivial3 = "Z x Z/2 x Z/2";
const char *const kAdtakTakZ3 = "Z x Z/3";
constexpr long kProbeInnOrders[5] = {1, 6, 72, 4320, 1555200};
constexpr int kProbeMinTrans[5] = {1, 1, 3, 3, 5}; // symbols 2..6

uint64_t rand_below(std::mt19937_64 &rng, uint64_t n) { return rng() % n; }

struct Block {
  std::vector<CheckResult> out;
  void add(const std::string &id, const std::string &claim, bool pass,
           const std::string &witness = "") {
    out.push_back({id, claim, pass, pass ? "" : witness});
  }
  // runs fn and converts a thrown Error into a failing check
  template <typename F>
  void guarded(const std::string &id, const std::string &claim, F &&fn) {
    try {
      fn();
      add(id, claim, true);
    } catch (const Error &e) {
      add(id, claim, false, e.what());
    }
  }
};

// ---------------------------------------------------------------- block: tait

std::vector<CheckResult> tait_block(const FiniteQuandle &tait) {
  Block b;
  const std::vector<std::vector<int>> printed = tait.rows_one_indexed();
  const std::vector<std::vector<int>> expected{{1, 3, 2}, {3, 2, 1}, {2, 1, 3}};
  b.add("tait.table", "one-indexed display table matches cell for cell",
        printed == expected, "display table mismatch");

  int rejected = 0, attempted = 0;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      for (int v = 0; v < 3; ++v) {
        if (v == tait.op(x, y)) continue;
        ++attempted;
        auto rows = tait.rows();
        rows[static_cast<size_t>(x)][static_cast<size_t>(y)] = v;
        try {
          FiniteQuandle::validate(rows);
        } catch (const AxiomViolation &) {
          ++rejected;
        }
      }
  b.add("tait.mutations",
        "all 18 single-cell edits are rejected by validation",
        attempted == 18 && rejected == 18,
        std::to_string(rejected) + "/" + std::to_string(attempted) +
            " rejected");
  return b.out;
}

// -------------------------------------------------------------- block: axioms

// a deterministic sample of valid coset specs over groups of order <= 48
std::vector<CosetQuandleSpec> sample_coset_specs(uint64_t seed, int count) {
  std::vector<PermGroup> pool;
  pool.push_back(PermGroup::generate(transpositions_of(4), 4)); // S4, 24
  pool.push_back(regular_representation(dihedral_group(12)));   // 24
  pool.push_back(regular_representation(dihedral_group(24)));   // 48
  pool.push_back(regular_representation(
      direct_product(cyclic_group(2), alternating_group_table(4)))); // 24
  pool.push_back(regular_representation(
      direct_product(symmetric_group_table(3), symmetric_group_table(3)))); // 36
  pool.push_back(regular_representation(dicyclic_group(12)));  // 48

  std::mt19937_64 rng(seed);
  std::vector<CosetQuandleSpec> specs;
  while (static_cast<int>(specs.size()) < count) {
    const PermGroup &g = pool[rand_below(rng, pool.size())];
    // subgroup generated by one or two random elements
    std::vector<Permutation> gens;
    gens.push_back(g.element(static_cast<int>(rand_below(rng, static_cast<uint64_t>(g.order())))));
    if (rng() & 1)
      gens.push_back(g.element(static_cast<int>(rand_below(rng, static_cast<uint64_t>(g.order())))));
    PermGroup h = PermGroup::generate(gens, g.degree());
    PermGroup z = h.center();
    const Permutation hc =
        z.element(static_cast<int>(rand_below(rng, static_cast<uint64_t>(z.order()))));
    specs.push_back(CosetQuandleSpec{g, std::move(h), hc});
  }
  return specs;
}

std::vector<CheckResult> axioms_block(uint64_t seed, ExecMode mode) {
  Block b;
  auto revalidate = [&](const FiniteQuandle &q) {
    FiniteQuandle::validate(q.rows(), mode); // throws on any axiom failure
  };

  b.guarded("axioms.trivial", "trivial quandles up to order 10 validate", [&] {
    for (int n = 0; n <= 10; ++n) revalidate(trivial_quandle(n));
  });
  b.guarded("axioms.conj-core",
            "conjugation and core quandles of every group of order <= 12 validate",
            [&] {
              for (const auto &[name, g] : groups_up_to_order_12()) {
                revalidate(conj_quandle(g));
                const FiniteQuandle core = core_quandle(g);
                revalidate(core);
                if (!core.is_kei())
                  throw InvariantFailure("core of " + name + " is not a kei");
              }
            });
  b.guarded("axioms.tak",
            "takasaki quandles of every abelian group of order <= 16 validate as kei",
            [&] {
              for (const auto &[name, g] : abelian_groups_up_to(16)) {
                const FiniteQuandle t = tak_quandle(g);
                revalidate(t);
                if (!t.is_kei())
                  throw InvariantFailure("tak of " + name + " is not a kei");
              }
            });
  b.guarded("axioms.products",
            "products and disjoint unions of corpus pairs validate", [&] {
              auto corpus = corpus_quandles();
              for (size_t i = 0; i < corpus.size(); ++i)
                for (size_t j = 0; j < corpus.size(); ++j) {
                  if (corpus[i].second.size() * corpus[j].second.size() > 150)
                    continue;
                  revalidate(product_quandle(corpus[i].second, corpus[j].second));
                  revalidate(
                      disjoint_union_quandle(corpus[i].second, corpus[j].second));
                }
            });
  b.guarded("axioms.davis", "davis quotients up to modulus 6 validate", [&] {
    for (int n = 1; n <= 6; ++n) revalidate(davis_quotient(n));
  });
  b.guarded("axioms.coset",
            "sampled right coset quandles over groups of order <= 48 validate",
            [&] {
              for (const auto &spec : sample_coset_specs(seed, 12))
                revalidate(coset_quandle(spec).q); // built via full validation
            });
  return b.out;
}

// -------------------------------------------------------------- block: inn-mn

std::vector<CheckResult> inn_mn_block() {
  Block b;
  long factorial = 2;
  for (int n = 3; n <= 5; ++n) {
    factorial *= n;
    const FiniteQuandle m = two_cycle_quandle(n);
    const PermGroup g = inn(m);
    b.add("inn-mn.order-" + std::to_string(n),
          "inner group of the two-cycle quandle on " + std::to_string(n) +
              " symbols has order " + std::to_string(n) + "!",
          g.order() == factorial,
          "order " + std::to_string(g.order()));
    b.add("inn-mn.transitive-" + std::to_string(n),
          "the action is transitive", g.is_transitive(), "not transitive");
  }
  b.add("inn-mn.m3-tait", "the two-cycle quandle on 3 symbols is the tait quandle",
        find_isomorphism(two_cycle_quandle(3), tait_quandle()).has_value(),
        "no isomorphism found");
  return b.out;
}

// -------------------------------------------------------------- block: ehrman

std::vector<CheckResult> ehrman_block(ExecMode mode) {
  Block b;
  for (int n = 1; n <= 5; ++n) {
    const auto found = enumerate_connected(n, 6, mode);
    b.add("ehrman.count-" + std::to_string(n),
          "connected quandle count at order " + std::to_string(n) +
              " reproduces the frozen constant " +
              std::to_string(kConnectedCounts[n]),
          static_cast<int>(found.size()) == kConnectedCounts[n],
          "got " + std::to_string(found.size()));
    // the brute-force oracle re-derives the constant from scratch
    const auto oracle = kernels::enumerate_tables_bruteforce(n, true, mode);
    b.add("ehrman.oracle-" + std::to_string(n),
          "exhaustive table filter agrees at order " + std::to_string(n),
          oracle.size() == found.size(),
          "oracle found " + std::to_string(oracle.size()));

    for (size_t qi = 0; qi < found.size(); ++qi) {
      const FiniteQuandle &q = found[qi];
      const std::string tag =
          std::to_string(n) + "-" + std::to_string(qi);
      b.guarded("ehrman.decompose-" + tag,
                "decomposition invariants hold at every base point", [&] {
                  for (int base = 0; base < q.size(); ++base)
                    ehrman_decompose(q, base); // throws on any invariant failure
                });
      b.guarded("ehrman.roundtrip-" + tag,
                "coset quandle of the decomposition is isomorphic to the original",
                [&] {
                  if (!ehrman_roundtrip(q))
                    throw InvariantFailure("roundtrip produced a different quandle");
                });
    }
  }
  return b.out;
}

// --------------------------------------------------------- block: induced-hom

// Quotient maps by normal subgroups provide the surjections.
std::vector<std::pair<PermGroup, GroupHom>> quotient_homs(const PermGroup &g) {
  std::vector<std::pair<PermGroup, GroupHom>> out;
  std::vector<std::vector<Permutation>> normal_subgroups;

  // normal closures of single elements, plus the center
  std::set<std::vector<int>> seen;
  auto consider = [&](std::vector<Permutation> gens) {
    // close under conjugation by generators of g and under multiplication
    std::vector<Permutation> elems{Permutation::identity(g.degree())};
    std::set<Permutation> set(elems.begin(), elems.end());
    std::vector<Permutation> work = gens;
    for (auto &x : work)
      if (set.insert(x).second) elems.push_back(x);
    while (!work.empty()) {
      Permutation x = work.back();
      work.pop_back();
      std::vector<Permutation> next;
      for (const auto &e : g.elements()) next.push_back(conjugate(x, e));
      for (const auto &e : elems) next.push_back(compose(x, e));
      for (auto &y : next)
        if (set.insert(y).second) {
          elems.push_back(y);
          work.push_back(y);
        }
    }
    std::vector<int> key;
    for (const auto &e : elems) key.push_back(*g.index_of(e));
    std::sort(key.begin(), key.end());
    if (seen.insert(key).second) normal_subgroups.push_back(elems);
  };

  for (long i = 0; i < g.order(); ++i) consider({g.element(static_cast<int>(i))});

  for (const auto &n_elems : normal_subgroups) {
    // cosets of N form the quotient; the quotient acts by right
    // multiplication on its own cosets
    std::set<Permutation> n_set(n_elems.begin(), n_elems.end());
    std::vector<int> coset_of(static_cast<size_t>(g.order()), -1);
    std::vector<int> reps;
    for (long i = 0; i < g.order(); ++i) {
      if (coset_of[static_cast<size_t>(i)] >= 0) continue;
      const int c = static_cast<int>(reps.size());
      reps.push_back(static_cast<int>(i));
      for (const auto &n : n_elems)
        coset_of[static_cast<size_t>(*g.index_of(compose(n, g.element(static_cast<int>(i)))))] = c;
    }
    const int m = static_cast<int>(reps.size());
    if (m == static_cast<int>(g.order())) continue; // trivial N: identity map covered anyway
    std::vector<std::vector<int>> mul(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m)));
    for (int a = 0; a < m; ++a)
      for (int c = 0; c < m; ++c)
        mul[static_cast<size_t>(a)][static_cast<size_t>(c)] =
            coset_of[static_cast<size_t>(*g.index_of(
                compose(g.element(reps[static_cast<size_t>(a)]),
                        g.element(reps[static_cast<size_t>(c)]))))];
    PermGroup quotient = regular_representation(FiniteGroup::validate(mul));
    GroupHom phi;
    for (long i = 0; i < g.order(); ++i)
      phi.image.push_back(coset_of[static_cast<size_t>(i)]);
    out.emplace_back(std::move(quotient), std::move(phi));
  }

  // the identity map
  GroupHom identity;
  for (long i = 0; i < g.order(); ++i) identity.image.push_back(static_cast<int>(i));
  out.emplace_back(g, std::move(identity));
  return out;
}

std::vector<CheckResult> induced_hom_block(uint64_t seed) {
  Block b;
  std::vector<PermGroup> pool;
  pool.push_back(PermGroup::generate(transpositions_of(3), 3)); // S3
  pool.push_back(PermGroup::generate(transpositions_of(4), 4)); // S4
  pool.push_back(regular_representation(dihedral_group(4)));
  pool.push_back(regular_representation(dicyclic_group(2))); // Q8
  pool.push_back(regular_representation(cyclic_group(12)));
  pool.push_back(regular_representation(dihedral_group(6)));
  pool.push_back(regular_representation(alternating_group_table(4)));

  std::mt19937_64 rng(seed ^ 0xabcdefULL);
  int built = 0, attempts = 0;
  while (built < 20 && attempts < 400) {
    ++attempts;
    const PermGroup &g = pool[rand_below(rng, pool.size())];
    std::vector<Permutation> gens{
        g.element(static_cast<int>(rand_below(rng, static_cast<uint64_t>(g.order()))))};
    if (rng() & 1)
      gens.push_back(g.element(static_cast<int>(rand_below(rng, static_cast<uint64_t>(g.order())))));
    PermGroup h = PermGroup::generate(gens, g.degree());
    PermGroup z = h.center();
    Permutation hc =
        z.element(static_cast<int>(rand_below(rng, static_cast<uint64_t>(z.order()))));
    CosetQuandleSpec spec{g, std::move(h), std::move(hc)};

    auto homs = quotient_homs(spec.g);
    const auto &[target, phi] = homs[rand_below(rng, homs.size())];
    const std::string tag = std::to_string(built);
    b.guarded("induced-hom.instance-" + tag,
              "pushing a sampled coset quandle along a sampled surjection "
              "yields a surjective quandle hom",
              [&] { induced_coset_hom(spec, target, phi); });
    ++built;
  }
  b.add("induced-hom.sampled", "twenty sampled instances were exercised",
        built == 20, "only " + std::to_string(built));
  return b.out;
}

// -------------------------------------------------------------- block: towers

std::vector<std::pair<std::string, QuandleTower>> tower_corpus() {
  std::vector<std::pair<std::string, QuandleTower>> out;
  out.emplace_back("const-tait", constant_tower(tait_quandle(), 4));
  out.emplace_back("tak-z2-depth3", tak_tower(zp_group_tower(2, 3)));
  out.emplace_back("tak-z3-depth2", tak_tower(zp_group_tower(3, 2)));
  out.emplace_back("tak-zhat-depth3", tak_tower(zhat_tower(3)));
  out.emplace_back("conj-s3", constant_tower(conj_quandle(symmetric_group_table(3)), 3));
  out.emplace_back("m-product-depth3", m_product_tower(3));
  {
    PermGroup g = PermGroup::generate(transpositions_of(3), 3);
    PermGroup h = PermGroup::generate({Permutation::from_cycles("(1 2)", 3)}, 3);
    Permutation hc = Permutation::from_cycles("(1 2)", 3);
    GroupTower gt;
    std::vector<int> id_map(static_cast<size_t>(g.order()));
    for (long i = 0; i < g.order(); ++i) id_map[static_cast<size_t>(i)] = static_cast<int>(i);
    for (int k = 0; k < 3; ++k) gt.levels.push_back(g);
    for (int k = 0; k + 1 < 3; ++k) gt.transitions.push_back(id_map);
    out.emplace_back("coset-s3",
                     coset_tower(gt, std::vector<PermGroup>(3, h),
                                 std::vector<Permutation>(3, hc)));
  }
  out.emplace_back("product-tait-x-tak",
                   product_tower(constant_tower(tait_quandle(), 3),
                                 tak_tower(zp_group_tower(3, 2))));
  out.emplace_back("union-tait-trivial",
                   disjoint_union_tower(constant_tower(tait_quandle(), 3),
                                        constant_tower(trivial_quandle(2), 3)));
  return out;
}

// independent closure: iterate pair scans to a fixed point
std::vector<int> oracle_closure(const FiniteQuandle &q, std::vector<int> set) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::set<int> s(set.begin(), set.end());
    for (int x : set)
      for (int y : set)
        for (int t : {q.op(x, y), q.inv_op(x, y)})
          if (!s.count(t)) {
            s.insert(t);
            grew = true;
          }
    set.assign(s.begin(), s.end());
  }
  return set;
}

std::vector<CheckResult> towers_block() {
  Block b;
  for (const auto &[name, tower] : tower_corpus()) {
    b.guarded("towers.validate-" + name,
              "transitions are surjective homs", [&] { validate_tower(tower); });

    const auto elems = all_elements(tower);
    b.add("towers.element-count-" + name,
          "coherent tuples biject with the top level",
          static_cast<int>(elems.size()) == tower.levels.back().size(),
          std::to_string(elems.size()) + " tuples");

    // coordinatewise axioms through the limit operations, all pairs
    b.guarded("towers.limit-axioms-" + name,
              "limit operations satisfy the three axioms on all coherent pairs",
              [&] {
                for (const auto &a : elems) {
                  if (limit_op(tower, a, a) != a)
                    throw InvariantFailure("idempotency fails");
                  for (const auto &bb : elems) {
                    const auto ab = limit_op(tower, a, bb);
                    if (limit_inv_op(tower, ab, bb) != a)
                      throw InvariantFailure("right inverse fails");
                    if (limit_op(tower, limit_inv_op(tower, a, bb), bb) != a)
                      throw InvariantFailure("left inverse fails");
                    for (const auto &c : elems) {
                      if (limit_op(tower, ab, c) !=
                          limit_op(tower, limit_op(tower, a, c),
                                   limit_op(tower, bb, c)))
                        throw InvariantFailure("distributivity fails");
                    }
                  }
                }
              });

    // slim basis: refinement inside intersections, exhaustively
    b.guarded("towers.slim-basis-" + name,
              "a deeper basic open separates every point of an intersection",
              [&] {
                for (int la = 0; la < tower.depth(); ++la)
                  for (int xa = 0; xa < tower.levels[static_cast<size_t>(la)].size(); ++xa)
                    for (int lb = 0; lb < tower.depth(); ++lb)
                      for (int xb = 0; xb < tower.levels[static_cast<size_t>(lb)].size(); ++xb) {
                        const SlimBasicOpen u{la, xa}, v{lb, xb};
                        const int deep = std::max(la, lb);
                        for (const auto &e : elems) {
                          if (!in_open(e, u) || !in_open(e, v)) continue;
                          const SlimBasicOpen w{deep, e[static_cast<size_t>(deep)]};
                          if (!in_open(e, w))
                            throw InvariantFailure("witness open misses its point");
                          for (const auto &f : elems)
                            if (in_open(f, w) && (!in_open(f, u) || !in_open(f, v)))
                              throw InvariantFailure(
                                  "witness open escapes the intersection");
                        }
                      }
              });

    // density against the independent closure oracle, on several seed sets
    b.guarded("towers.density-" + name,
              "density agrees with levelwise fullness of the oracle closure",
              [&] {
                std::vector<std::vector<TruncatedElement>> seed_sets;
                seed_sets.push_back(elems); // everything: always dense
                seed_sets.push_back({elems.front()});
                if (elems.size() >= 2)
                  seed_sets.push_back({elems.front(), elems.back()});
                for (const auto &seeds : seed_sets) {
                  const DensityReport got = density_check(tower, seeds);
                  bool expect = true;
                  for (int k = 0; k < tower.depth(); ++k) {
                    std::vector<int> proj;
                    for (const auto &e : seeds)
                      proj.push_back(e[static_cast<size_t>(k)]);
                    const auto closed =
                        oracle_closure(tower.levels[static_cast<size_t>(k)], proj);
                    if (closed != got.level_images[static_cast<size_t>(k)])
                      throw InvariantFailure("closure oracle disagrees at level " +
                                             std::to_string(k));
                    expect = expect &&
                             static_cast<int>(closed.size()) ==
                                 tower.levels[static_cast<size_t>(k)].size();
                  }
                  if (expect != got.dense)
                    throw InvariantFailure("density verdict disagrees with the oracle");
                }
                if (!density_check(tower, elems).dense)
                  throw InvariantFailure("full element set should be dense");
              });

    // projection subtowers form a closure operator
    b.guarded("towers.closure-laws-" + name,
              "projection subtower is extensive, monotone, and idempotent",
              [&] {
                std::vector<TruncatedElement> small{elems.front()};
                if (elems.size() > 2) small.push_back(elems[elems.size() / 2]);
                std::vector<TruncatedElement> large = small;
                large.push_back(elems.back());

                const SubTower cs = projection_subtower(tower, small);
                const SubTower cl = projection_subtower(tower, large);
                for (int k = 0; k < tower.depth(); ++k) {
                  // extensive
                  for (const auto &e : small)
                    if (!std::binary_search(cs.carrier[static_cast<size_t>(k)].begin(),
                                            cs.carrier[static_cast<size_t>(k)].end(),
                                            e[static_cast<size_t>(k)]))
                      throw InvariantFailure("not extensive");
                  // monotone
                  if (!std::includes(cl.carrier[static_cast<size_t>(k)].begin(),
                                     cl.carrier[static_cast<size_t>(k)].end(),
                                     cs.carrier[static_cast<size_t>(k)].begin(),
                                     cs.carrier[static_cast<size_t>(k)].end()))
                    throw InvariantFailure("not monotone");
                }
                // idempotent: feeding back the subtower's coherent elements
                std::vector<TruncatedElement> image_elems;
                for (const auto &e : all_elements(cs.tower)) {
                  TruncatedElement orig(e.size());
                  for (int k = 0; k < tower.depth(); ++k)
                    orig[static_cast<size_t>(k)] =
                        cs.carrier[static_cast<size_t>(k)][static_cast<size_t>(e[static_cast<size_t>(k)])];
                  image_elems.push_back(std::move(orig));
                }
                const SubTower again = projection_subtower(tower, image_elems);
                if (again.carrier != cs.carrier)
                  throw InvariantFailure("not idempotent");
              });

    // product / disjoint union coherence
    b.guarded("towers.union-split-" + name,
              "coherent tuples of a disjoint union stay in one summand", [&] {
                const QuandleTower u = disjoint_union_tower(
                    tower, constant_tower(trivial_quandle(1), tower.depth()));
                for (const auto &e : all_elements(u)) {
                  bool in_left = e[0] < tower.levels[0].size();
                  for (int k = 0; k < u.depth(); ++k)
                    if ((e[static_cast<size_t>(k)] <
                         tower.levels[static_cast<size_t>(k)].size()) != in_left)
                      throw InvariantFailure("tuple crosses summands");
                }
              });
  }

  b.guarded("towers.product-coherence",
            "limit operations on a product tower act coordinatewise", [&] {
              // depths 3 and 2: the product truncates to the shorter chain
              const QuandleTower t = tak_tower(zp_group_tower(3, 2));
              const QuandleTower p =
                  product_tower(constant_tower(tait_quandle(), 3), t);
              const QuandleTower a = constant_tower(tait_quandle(), p.depth());
              const auto elems = all_elements(p);
              const int bn0 = t.levels[0].size(), bn1 = t.levels[1].size();
              for (const auto &x : elems)
                for (const auto &y : elems) {
                  const auto xy = limit_op(p, x, y);
                  // split each level's packed index and compare factors
                  const TruncatedElement xa{x[0] / bn0, x[1] / bn1},
                      xb{x[0] % bn0, x[1] % bn1}, ya{y[0] / bn0, y[1] / bn1},
                      yb{y[0] % bn0, y[1] % bn1};
                  const auto fa = limit_op(a, xa, ya);
                  const auto fb = limit_op(t, xb, yb);
                  if (xy[0] != fa[0] * bn0 + fb[0] || xy[1] != fa[1] * bn1 + fb[1])
                    throw InvariantFailure("product op is not coordinatewise");
                }
            });
  return b.out;
}

// ------------------------------------------------------ block: counterexample

std::vector<CheckResult> counterexample_block(ExecMode mode) {
  Block b;
  for (int depth = 2; depth <= 5; ++depth) {
    const ProbeReport r = counterexample_probe(depth, mode);
    bool orders_ok = true, equal_ok = true, ell_ok = true;
    std::string witness;
    for (const auto &lvl : r.levels) {
      if (lvl.inn_order != kProbeInnOrders[lvl.level]) {
        orders_ok = false;
        witness = "level " + std::to_string(lvl.level) + " order " +
                  std::to_string(lvl.inn_order);
      }
      equal_ok = equal_ok && lvl.equality_exhaustive &&
                 lvl.inn_order == lvl.same_parity_order;
      ell_ok = ell_ok && lvl.ell_member;
    }
    const std::string d = std::to_string(depth);
    b.add("counterexample.orders-" + d,
          "inner group orders match the equal-parity subgroup orders",
          orders_ok && equal_ok, witness);
    b.add("counterexample.ell-member-" + d,
          "the distinguished tuple lies in every level's inner group", ell_ok,
          "membership failed");
    b.add("counterexample.ell-coherent-" + d,
          "the distinguished tuple is coherent with the projections",
          r.ell_coherent, "coherence failed");

    bool trans_ok = true;
    for (const auto &f : r.factors)
      trans_ok = trans_ok &&
                 f.min_transpositions == kProbeMinTrans[f.n - 2] && f.odd;
    b.add("counterexample.min-transpositions-" + d,
          "minimum transposition counts follow the frozen odd sequence",
          trans_ok, "sequence mismatch");
    b.add("counterexample.unbounded-" + d,
          "the transposition cost grows without bound", r.unbounded,
          "sequence bounded");
  }
  // the cycle-count formula against breadth-first search, small degrees
  b.guarded("counterexample.bfs-oracle",
            "cycle-count formula matches shortest-word search up to degree 5",
            [&] {
              for (int n = 2; n <= 5; ++n) {
                const Permutation l = ell_coordinate(n);
                if (l.min_transpositions() != min_transpositions_bfs(l))
                  throw InvariantFailure("mismatch at degree " + std::to_string(n));
              }
            });
  return b.out;
}

// --------------------------------------------------------- block: inn-density

std::vector<CheckResult> inn_density_block() {
  Block b;
  for (const auto &[name, tower] : tower_corpus()) {
    b.guarded("inn-density.surjective-" + name,
              "induced inner transitions exist and are surjective",
              [&] { inn_tower(tower); });
    b.guarded("inn-density.action-" + name,
              "projections are equivariant for the induced inner maps",
              [&] { levelwise_action_check(tower); });
  }
  return b.out;
}

// ----------------------------------------------------- block: complementation

std::vector<CheckResult> complementation_block(ExecMode mode) {
  Block b;
  std::vector<std::pair<std::string, FiniteQuandle>> pool;
  for (const auto &entry : corpus_quandles())
    if (entry.second.size() <= 5) pool.push_back(entry);
  for (int n = 3; n <= 5; ++n) {
    const auto all = enumerate_all(n, 6, mode);
    for (size_t i = 0; i < all.size(); ++i)
      pool.emplace_back("order" + std::to_string(n) + "-" + std::to_string(i),
                        all[i]);
  }
  for (const auto &[name, q] : pool) {
    b.guarded("complementation." + name,
              "every subquandle of " + name + " has a lattice complement", [&] {
                for (const auto &sub : all_subquandles(q))
                  if (!find_complement(q, sub))
                    throw InvariantFailure("no complement for a subquandle of " +
                                           name);
              });
  }
  return b.out;
}

// --------------------------------------------------------------- block: adtak

std::vector<CheckResult> adtak_block(uint64_t seed) {
  Block b;
  std::mt19937_64 rng(seed ^ 0x5eedULL);
  b.guarded("adtak.snf-random",
            "normal form invariants hold on 100 random matrices", [&] {
              for (int trial = 0; trial < 100; ++trial) {
                const int rows = 1 + static_cast<int>(rand_below(rng, 6));
                const int cols = 1 + static_cast<int>(rand_below(rng, 6));
                IntMatrix m(rows, cols);
                for (int i = 0; i < rows; ++i)
                  for (int j = 0; j < cols; ++j)
                    m.at(i, j) = static_cast<long>(rand_below(rng, 41)) - 20;
                const SmithResult r = smith_normal_form(m);
                if (multiply(multiply(r.u, m), r.v) != r.s)
                  throw InvariantFailure("u*m*v != s");
                if (multiply(multiply(r.u_inv, r.s), r.v_inv) != m)
                  throw InvariantFailure("u_inv*s*v_inv != m");
                const BigInt du = determinant(r.u), dv = determinant(r.v);
                if ((du != 1 && du != -1) || (dv != 1 && dv != -1))
                  throw InvariantFailure("transform not unimodular");
                auto d = r.invariant_factors();
                for (size_t i = 0; i + 1 < d.size(); ++i)
                  if (d[i + 1] % d[i] != 0)
                    throw InvariantFailure("divisibility chain broken");
                for (int i = 0; i < r.s.rows(); ++i)
                  for (int j = 0; j < r.s.cols(); ++j)
                    if (i != j && r.s.at(i, j) != 0)
                      throw InvariantFailure("s not diagonal");
              }
            });
  auto check_value = [&](const std::string &id, const FiniteQuandle &k,
                         const std::string &expect) {
    const std::string got = adtak(k).to_string();
    b.add("adtak." + id, "frozen regression value " + expect, got == expect,
          "got " + got);
  };
  check_value("singleton", trivial_quandle(1), kAdtakSingleton);
  check_value("trivial2", trivial_quandle(2), kAdtakTrivial2);
  check_value("trivial3", trivial_quandle(3), kAdtakTrivial3);
  check_value("tak-z3", tak_quandle(cyclic_group(3)), kAdtakTakZ3);
  return b.out;
}

} // namespace

std::vector<std::pair<std::string, FiniteQuandle>> corpus_quandles() {
  std::vector<std::pair<std::string, FiniteQuandle>> out;
  out.emplace_back("trivial1", trivial_quandle(1));
  out.emplace_back("trivial2", trivial_quandle(2));
  out.emplace_back("trivial3", trivial_quandle(3));
  out.emplace_back("trivial5", trivial_quandle(5));
  out.emplace_back("tait", tait_quandle());
  out.emplace_back("tak-z4", tak_quandle(cyclic_group(4)));
  out.emplace_back("tak-z5", tak_quandle(cyclic_group(5)));
  out.emplace_back("tak-z2xz2", tak_quandle(abelian_group({2, 2})));
  out.emplace_back("conj-s3", conj_quandle(symmetric_group_table(3)));
  out.emplace_back("core-s3", core_quandle(symmetric_group_table(3)));
  out.emplace_back("davis3", davis_quotient(3));
  out.emplace_back("m3", two_cycle_quandle(3));
  out.emplace_back("m4", two_cycle_quandle(4));
  out.emplace_back("union-tait-pt",
                   disjoint_union_quandle(tait_quandle(), trivial_quandle(1)));
  return out;
}

std::vector<CheckResult> run_tait_block_on(const FiniteQuandle &candidate) {
  return tait_block(candidate);
}

std::vector<std::string> suite_blocks() {
  return {"tait",   "axioms",         "inn-mn",          "ehrman",
          "induced-hom", "towers",    "counterexample",  "inn-density",
          "complementation", "adtak"};
}

std::vector<CheckResult> run_suite_block(const std::string &block,
                                         const SuiteOptions &opts) {
  if (block == "tait") return tait_block(tait_quandle());
  if (block == "axioms") return axioms_block(opts.seed, opts.mode);
  if (block == "inn-mn") return inn_mn_block();
  if (block == "ehrman") return ehrman_block(opts.mode);
  if (block == "induced-hom") return induced_hom_block(opts.seed);
  if (block == "towers") return towers_block();
  if (block == "counterexample") return counterexample_block(opts.mode);
  if (block == "inn-density") return inn_density_block();
  if (block == "complementation") return complementation_block(opts.mode);
  if (block == "adtak") return adtak_block(opts.seed);
  throw InvalidSpec("unknown suite block '" + block + "'");
}

std::vector<CheckResult> run_paper_suite(const SuiteOptions &opts) {
  std::vector<CheckResult> out;
  for (const auto &block : suite_blocks()) {
    if (!opts.only.empty() && block.rfind(opts.only, 0) != 0) continue;
    auto results = run_suite_block(block, opts);
    out.insert(out.end(), results.begin(), results.end());
  }
  return out;
}

} // namespace pfq
