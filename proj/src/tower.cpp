#include "pfq/tower.hpp"

#include <algorithm>
#include <map>

#include "pfq/errors.hpp"
#include "pfq/subquandle.hpp"

namespace pfq {

namespace {

void check_shape(const QuandleTower &t) {
  if (t.levels.empty()) throw InvalidSpec("tower needs depth >= 1");
  if (t.transitions.size() + 1 != t.levels.size())
    throw InvalidSpec("tower needs one transition per adjacent level pair");
}

} // namespace

void validate_tower(const QuandleTower &t) {
  check_shape(t);
  for (size_t k = 0; k < t.transitions.size(); ++k) {
    const auto &map = t.transitions[k];
    const FiniteQuandle &hi = t.levels[k + 1];
    const FiniteQuandle &lo = t.levels[k];
    if (static_cast<int>(map.size()) != hi.size())
      throw InvalidSpec("transition " + std::to_string(k) + " has wrong size");
    for (int v : map)
      if (v < 0 || v >= lo.size())
        throw InvalidSpec("transition " + std::to_string(k) +
                          " image out of range");
    std::vector<bool> hit(static_cast<size_t>(lo.size()), false);
    for (int v : map) hit[static_cast<size_t>(v)] = true;
    for (int x = 0; x < lo.size(); ++x)
      if (!hit[static_cast<size_t>(x)])
        throw NotSurjective("transition " + std::to_string(k) + " misses " +
                                std::to_string(x),
                            static_cast<int>(k));
    for (int x = 0; x < hi.size(); ++x)
      for (int y = 0; y < hi.size(); ++y)
        if (map[static_cast<size_t>(hi.op(x, y))] !=
            lo.op(map[static_cast<size_t>(x)], map[static_cast<size_t>(y)]))
          throw NotHom("transition " + std::to_string(k) +
                           " fails the hom property at (" + std::to_string(x) +
                           "," + std::to_string(y) + ")",
                       static_cast<int>(k));
  }
}

void validate_group_tower(const GroupTower &t) {
  if (t.levels.empty()) throw InvalidSpec("tower needs depth >= 1");
  if (t.transitions.size() + 1 != t.levels.size())
    throw InvalidSpec("tower needs one transition per adjacent level pair");
  for (size_t k = 0; k < t.transitions.size(); ++k) {
    const auto &map = t.transitions[k];
    const PermGroup &hi = t.levels[k + 1];
    const PermGroup &lo = t.levels[k];
    if (static_cast<long>(map.size()) != hi.order())
      throw InvalidSpec("group transition " + std::to_string(k) +
                        " has wrong size");
    for (int v : map)
      if (v < 0 || v >= lo.order())
        throw InvalidSpec("group transition image out of range");
    std::vector<bool> hit(static_cast<size_t>(lo.order()), false);
    for (int v : map) hit[static_cast<size_t>(v)] = true;
    for (long x = 0; x < lo.order(); ++x)
      if (!hit[static_cast<size_t>(x)])
        throw NotSurjective("group transition " + std::to_string(k) +
                                " misses element " + std::to_string(x),
                            static_cast<int>(k));
    for (long a = 0; a < hi.order(); ++a)
      for (long b = 0; b < hi.order(); ++b) {
        const int ab = *hi.index_of(compose(hi.element(static_cast<int>(a)),
                                            hi.element(static_cast<int>(b))));
        const Permutation lhs = lo.element(map[static_cast<size_t>(ab)]);
        const Permutation rhs =
            compose(lo.element(map[static_cast<size_t>(a)]),
                    lo.element(map[static_cast<size_t>(b)]));
        if (lhs != rhs)
          throw NotHom("group transition " + std::to_string(k) +
                           " fails multiplicativity",
                       static_cast<int>(k));
      }
  }
}

bool is_coherent(const QuandleTower &t, const TruncatedElement &e) {
  if (static_cast<int>(e.size()) != t.depth()) return false;
  for (int k = 0; k < t.depth(); ++k)
    if (e[static_cast<size_t>(k)] < 0 ||
        e[static_cast<size_t>(k)] >= t.levels[static_cast<size_t>(k)].size())
      return false;
  for (size_t k = 0; k < t.transitions.size(); ++k)
    if (t.transitions[k][static_cast<size_t>(e[k + 1])] != e[k]) return false;
  return true;
}

void require_element(const QuandleTower &t, const TruncatedElement &e) {
  if (!is_coherent(t, e))
    throw TowerMismatch("tuple is not a coherent element of the tower");
}

TruncatedElement limit_op(const QuandleTower &t, const TruncatedElement &a,
                          const TruncatedElement &b) {
  require_element(t, a);
  require_element(t, b);
  TruncatedElement out(a.size());
  for (int k = 0; k < t.depth(); ++k)
    out[static_cast<size_t>(k)] = t.levels[static_cast<size_t>(k)].op(
        a[static_cast<size_t>(k)], b[static_cast<size_t>(k)]);
  require_element(t, out); // guaranteed by the hom property; asserted anyway
  return out;
}

TruncatedElement limit_inv_op(const QuandleTower &t, const TruncatedElement &a,
                              const TruncatedElement &b) {
  require_element(t, a);
  require_element(t, b);
  TruncatedElement out(a.size());
  for (int k = 0; k < t.depth(); ++k)
    out[static_cast<size_t>(k)] = t.levels[static_cast<size_t>(k)].inv_op(
        a[static_cast<size_t>(k)], b[static_cast<size_t>(k)]);
  require_element(t, out);
  return out;
}

std::vector<int> lift(const QuandleTower &t, int k, int x) {
  if (k < 0 || k + 1 >= t.depth())
    throw IndexOutOfRange("lift level out of range");
  if (x < 0 || x >= t.levels[static_cast<size_t>(k)].size())
    throw IndexOutOfRange("lift element out of range");
  std::vector<int> out;
  const auto &map = t.transitions[static_cast<size_t>(k)];
  for (int y = 0; y < static_cast<int>(map.size()); ++y)
    if (map[static_cast<size_t>(y)] == x) out.push_back(y);
  return out;
}

std::vector<TruncatedElement> all_elements(const QuandleTower &t) {
  check_shape(t);
  std::vector<TruncatedElement> out;
  const int top = t.depth() - 1;
  out.reserve(static_cast<size_t>(t.levels[static_cast<size_t>(top)].size()));
  for (int x = 0; x < t.levels[static_cast<size_t>(top)].size(); ++x) {
    TruncatedElement e(static_cast<size_t>(t.depth()));
    e[static_cast<size_t>(top)] = x;
    for (int k = top - 1; k >= 0; --k)
      e[static_cast<size_t>(k)] =
          t.transitions[static_cast<size_t>(k)][static_cast<size_t>(e[static_cast<size_t>(k + 1)])];
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool in_open(const TruncatedElement &e, const SlimBasicOpen &u) {
  if (u.level < 0 || u.level >= static_cast<int>(e.size()))
    throw IndexOutOfRange("basic open level out of range");
  return e[static_cast<size_t>(u.level)] == u.x;
}

QuandleTower product_tower(const QuandleTower &a, const QuandleTower &b) {
  check_shape(a);
  check_shape(b);
  // diagonal cofinal chain of the product order
  const int depth = std::min(a.depth(), b.depth());
  QuandleTower out;
  for (int k = 0; k < depth; ++k)
    out.levels.push_back(product_quandle(a.levels[static_cast<size_t>(k)],
                                         b.levels[static_cast<size_t>(k)]));
  for (int k = 0; k + 1 < depth; ++k) {
    const int bn_hi = b.levels[static_cast<size_t>(k + 1)].size();
    const int bn_lo = b.levels[static_cast<size_t>(k)].size();
    std::vector<int> map(static_cast<size_t>(out.levels[static_cast<size_t>(k + 1)].size()));
    for (int x = 0; x < static_cast<int>(map.size()); ++x) {
      const int xa = x / bn_hi, xb = x % bn_hi;
      map[static_cast<size_t>(x)] =
          a.transitions[static_cast<size_t>(k)][static_cast<size_t>(xa)] * bn_lo +
          b.transitions[static_cast<size_t>(k)][static_cast<size_t>(xb)];
    }
    out.transitions.push_back(std::move(map));
  }
  return out;
}

QuandleTower disjoint_union_tower(const QuandleTower &a, const QuandleTower &b) {
  check_shape(a);
  check_shape(b);
  const int depth = std::min(a.depth(), b.depth());
  QuandleTower out;
  for (int k = 0; k < depth; ++k)
    out.levels.push_back(disjoint_union_quandle(a.levels[static_cast<size_t>(k)],
                                                b.levels[static_cast<size_t>(k)]));
  for (int k = 0; k + 1 < depth; ++k) {
    const int an_hi = a.levels[static_cast<size_t>(k + 1)].size();
    const int an_lo = a.levels[static_cast<size_t>(k)].size();
    std::vector<int> map(static_cast<size_t>(out.levels[static_cast<size_t>(k + 1)].size()));
    for (int x = 0; x < static_cast<int>(map.size()); ++x)
      map[static_cast<size_t>(x)] =
          x < an_hi
              ? a.transitions[static_cast<size_t>(k)][static_cast<size_t>(x)]
              : an_lo + b.transitions[static_cast<size_t>(k)][static_cast<size_t>(x - an_hi)];
    out.transitions.push_back(std::move(map));
  }
  return out;
}

namespace {

SubTower restrict_to(const QuandleTower &t,
                     const std::vector<std::vector<int>> &carrier) {
  SubTower out;
  out.carrier = carrier;
  std::vector<std::map<int, int>> reindex(carrier.size());
  for (size_t k = 0; k < carrier.size(); ++k)
    for (size_t i = 0; i < carrier[k].size(); ++i)
      reindex[k].emplace(carrier[k][i], static_cast<int>(i));
  for (size_t k = 0; k < carrier.size(); ++k) {
    const auto &elems = carrier[k];
    const int m = static_cast<int>(elems.size());
    const FiniteQuandle &q = t.levels[k];
    std::vector<int> flat(static_cast<size_t>(m) * static_cast<size_t>(m));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        flat[static_cast<size_t>(i * m + j)] = reindex[k].at(
            q.op(elems[static_cast<size_t>(i)], elems[static_cast<size_t>(j)]));
    out.tower.levels.push_back(FiniteQuandle::validate_flat(std::move(flat), m));
  }
  for (size_t k = 0; k + 1 < carrier.size(); ++k) {
    std::vector<int> map;
    map.reserve(carrier[k + 1].size());
    for (int e : carrier[k + 1])
      map.push_back(reindex[k].at(t.transitions[k][static_cast<size_t>(e)]));
    out.tower.transitions.push_back(std::move(map));
  }
  return out;
}

} // namespace

SubTower projection_subtower(const QuandleTower &t,
                             const std::vector<TruncatedElement> &seeds) {
  check_shape(t);
  std::vector<std::vector<int>> carrier(static_cast<size_t>(t.depth()));
  for (int k = 0; k < t.depth(); ++k) {
    ElemSet seed;
    for (const auto &e : seeds) {
      require_element(t, e);
      seed.push_back(e[static_cast<size_t>(k)]);
    }
    std::sort(seed.begin(), seed.end());
    seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
    carrier[static_cast<size_t>(k)] =
        generated_subquandle(t.levels[static_cast<size_t>(k)], seed);
  }
  SubTower out = restrict_to(t, carrier);
  validate_tower(out.tower); // restriction of surjections onto images
  return out;
}

DensityReport density_check(const QuandleTower &t,
                            const std::vector<TruncatedElement> &seeds) {
  SubTower sub = projection_subtower(t, seeds);
  DensityReport report;
  report.dense = true;
  for (int k = 0; k < t.depth(); ++k) {
    const bool full = static_cast<int>(sub.carrier[static_cast<size_t>(k)].size()) ==
                      t.levels[static_cast<size_t>(k)].size();
    report.level_images.push_back(sub.carrier[static_cast<size_t>(k)]);
    report.full.push_back(full);
    report.dense = report.dense && full;
  }
  return report;
}

SubTower orbit_subtower(const QuandleTower &t,
                        const std::vector<TruncatedElement> &seeds) {
  check_shape(t);
  std::vector<std::vector<int>> carrier(static_cast<size_t>(t.depth()));
  for (int k = 0; k < t.depth(); ++k) {
    const FiniteQuandle &q = t.levels[static_cast<size_t>(k)];
    std::vector<bool> in(static_cast<size_t>(q.size()), false);
    std::vector<int> stack;
    for (const auto &e : seeds) {
      require_element(t, e);
      const int x = e[static_cast<size_t>(k)];
      if (!in[static_cast<size_t>(x)]) {
        in[static_cast<size_t>(x)] = true;
        stack.push_back(x);
      }
    }
    // orbit under Inn = reachability under the symmetries both ways
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int y = 0; y < q.size(); ++y)
        for (int v : {q.op(x, y), q.inv_op(x, y)})
          if (!in[static_cast<size_t>(v)]) {
            in[static_cast<size_t>(v)] = true;
            stack.push_back(v);
          }
    }
    for (int x = 0; x < q.size(); ++x)
      if (in[static_cast<size_t>(x)]) carrier[static_cast<size_t>(k)].push_back(x);
  }
  SubTower out = restrict_to(t, carrier);
  validate_tower(out.tower);
  return out;
}

bool levelwise_connected(const QuandleTower &t) {
  for (const auto &q : t.levels)
    if (!is_connected(q)) return false;
  return true;
}

namespace {

// Extends S_y -> S_{t(y)} multiplicatively over the full element set of the
// upstairs inner group, checking single-valuedness across every Cayley edge.
std::vector<int> induced_inn_map(const FiniteQuandle &hi, const PermGroup &ghi,
                                 const FiniteQuandle &lo, const PermGroup &glo,
                                 const std::vector<int> &t, int level) {
  std::vector<int> phi(static_cast<size_t>(ghi.order()), -1);
  const int id_hi = *ghi.index_of(Permutation::identity(hi.size()));
  const int id_lo = *glo.index_of(Permutation::identity(lo.size()));
  phi[static_cast<size_t>(id_hi)] = id_lo;
  std::vector<int> work{id_hi};
  while (!work.empty()) {
    const int f = work.back();
    work.pop_back();
    for (int y = 0; y < hi.size(); ++y) {
      const int g = *ghi.index_of(compose(ghi.element(f), symmetry(hi, y)));
      const Permutation image = compose(glo.element(phi[static_cast<size_t>(f)]),
                                        symmetry(lo, t[static_cast<size_t>(y)]));
      const auto cand = glo.index_of(image);
      if (!cand)
        throw WellDefinednessFailure(
            "induced image escapes the lower inner group at level " +
            std::to_string(level));
      if (phi[static_cast<size_t>(g)] == -1) {
        phi[static_cast<size_t>(g)] = *cand;
        work.push_back(g);
      } else if (phi[static_cast<size_t>(g)] != *cand) {
        throw WellDefinednessFailure(
            "transition at level " + std::to_string(level) +
            " induces conflicting images for one inner automorphism");
      }
    }
  }
  for (int v : phi)
    if (v < 0)
      throw InvariantFailure("inner group not generated by the symmetries");
  return phi;
}

} // namespace

GroupTower inn_tower(const QuandleTower &t, long order_bound) {
  check_shape(t);
  GroupTower out;
  for (const auto &q : t.levels) out.levels.push_back(inn(q, order_bound));
  for (size_t k = 0; k + 1 < t.levels.size(); ++k) {
    auto phi = induced_inn_map(t.levels[k + 1], out.levels[k + 1], t.levels[k],
                               out.levels[k], t.transitions[k],
                               static_cast<int>(k));
    // finite shadow of density: the induced transition is onto
    std::vector<bool> hit(static_cast<size_t>(out.levels[k].order()), false);
    for (int v : phi) hit[static_cast<size_t>(v)] = true;
    for (size_t i = 0; i < hit.size(); ++i)
      if (!hit[i])
        throw InvariantFailure("induced inner transition at level " +
                               std::to_string(k) + " is not surjective");
    out.transitions.push_back(std::move(phi));
  }
  return out;
}

void levelwise_action_check(const QuandleTower &t, long order_bound) {
  check_shape(t);
  std::vector<PermGroup> groups;
  for (const auto &q : t.levels) groups.push_back(inn(q, order_bound));
  for (size_t k = 0; k + 1 < t.levels.size(); ++k) {
    const auto phi = induced_inn_map(t.levels[k + 1], groups[k + 1],
                                     t.levels[k], groups[k], t.transitions[k],
                                     static_cast<int>(k));
    const auto &map = t.transitions[k];
    for (long g = 0; g < groups[k + 1].order(); ++g) {
      const Permutation &act_hi = groups[k + 1].element(static_cast<int>(g));
      const Permutation &act_lo =
          groups[k].element(phi[static_cast<size_t>(g)]);
      for (int x = 0; x < t.levels[k + 1].size(); ++x)
        if (map[static_cast<size_t>(act_hi(x))] !=
            act_lo(map[static_cast<size_t>(x)]))
          throw EquivarianceFailure(
              "projection fails equivariance at level " + std::to_string(k) +
              ", element " + std::to_string(x) + ", inner automorphism " +
              std::to_string(g));
    }
  }
}

QuandleTower constant_tower(const FiniteQuandle &q, int depth) {
  if (depth < 1) throw InvalidSpec("tower needs depth >= 1");
  QuandleTower out;
  std::vector<int> id(static_cast<size_t>(q.size()));
  for (int i = 0; i < q.size(); ++i) id[static_cast<size_t>(i)] = i;
  for (int k = 0; k < depth; ++k) out.levels.push_back(q);
  for (int k = 0; k + 1 < depth; ++k) out.transitions.push_back(id);
  return out;
}

GroupTower zp_group_tower(int p, int depth) {
  if (depth < 1) throw InvalidSpec("tower needs depth >= 1");
  if (p < 2) throw NotPrime(std::to_string(p) + " is not prime");
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) throw NotPrime(std::to_string(p) + " is not prime");
  GroupTower out;
  long mod = 1;
  std::vector<long> mods;
  for (int k = 0; k < depth; ++k) {
    mod *= p;
    mods.push_back(mod);
    out.levels.push_back(regular_representation(cyclic_group(static_cast<int>(mod))));
  }
  for (int k = 0; k + 1 < depth; ++k) {
    std::vector<int> map(static_cast<size_t>(mods[static_cast<size_t>(k + 1)]));
    for (long x = 0; x < mods[static_cast<size_t>(k + 1)]; ++x)
      map[static_cast<size_t>(x)] = static_cast<int>(x % mods[static_cast<size_t>(k)]);
    out.transitions.push_back(std::move(map));
  }
  return out;
}

GroupTower zhat_tower(int depth) {
  if (depth < 1) throw InvalidSpec("tower needs depth >= 1");
  GroupTower out;
  long fact = 1;
  std::vector<long> facts;
  for (int k = 1; k <= depth; ++k) {
    fact *= k;
    facts.push_back(fact);
    out.levels.push_back(regular_representation(cyclic_group(static_cast<int>(fact))));
  }
  for (int k = 0; k + 1 < depth; ++k) {
    std::vector<int> map(static_cast<size_t>(facts[static_cast<size_t>(k + 1)]));
    for (long x = 0; x < facts[static_cast<size_t>(k + 1)]; ++x)
      map[static_cast<size_t>(x)] = static_cast<int>(x % facts[static_cast<size_t>(k)]);
    out.transitions.push_back(std::move(map));
  }
  return out;
}

namespace {

QuandleTower functor_tower(const GroupTower &gt,
                           FiniteQuandle (*construct)(const FiniteGroup &)) {
  validate_group_tower(gt);
  QuandleTower out;
  for (const auto &g : gt.levels) out.levels.push_back(construct(to_cayley(g)));
  out.transitions = gt.transitions; // same carriers, same maps
  validate_tower(out);
  return out;
}

} // namespace

QuandleTower tak_tower(const GroupTower &gt) {
  for (const auto &g : gt.levels)
    if (!to_cayley(g).is_abelian())
      throw NotAbelian("takasaki tower requires abelian levels");
  return functor_tower(gt, tak_quandle);
}

QuandleTower conj_tower(const GroupTower &gt) {
  return functor_tower(gt, conj_quandle);
}

QuandleTower m_product_tower(int depth) {
  if (depth < 1) throw InvalidSpec("tower needs depth >= 1");
  // the top carrier is prod C(n,2) for n = 2..depth+1; its table is the
  // square of that, so explicit levels stop being desk scale past depth 5
  if (depth > 5)
    throw SizeBound("explicit two-cycle product towers limited to depth 5");
  QuandleTower out;
  FiniteQuandle acc = two_cycle_quandle(2);
  out.levels.push_back(acc);
  for (int k = 1; k < depth; ++k) {
    const FiniteQuandle next = two_cycle_quandle(k + 2);
    acc = product_quandle(acc, next);
    out.levels.push_back(acc);
    std::vector<int> map(static_cast<size_t>(acc.size()));
    for (int x = 0; x < acc.size(); ++x)
      map[static_cast<size_t>(x)] = x / next.size();
    out.transitions.push_back(std::move(map));
  }
  return out;
}

QuandleTower coset_tower(const GroupTower &gt,
                         const std::vector<PermGroup> &subgroups,
                         const std::vector<Permutation> &centrals) {
  if (subgroups.size() != gt.levels.size() ||
      centrals.size() != gt.levels.size())
    throw InvalidSpec("coset tower needs one subgroup and one central element per level");
  // compatibility: transition images of (H_{k+1}, h_{k+1}) are (H_k, h_k)
  for (size_t k = 0; k + 1 < gt.levels.size(); ++k) {
    const auto &map = gt.transitions[k];
    std::vector<Permutation> image;
    for (const auto &e : subgroups[k + 1].elements()) {
      const auto idx = gt.levels[k + 1].index_of(e);
      if (!idx) throw IncompatibleChain("subgroup escapes its level group");
      image.push_back(gt.levels[k].element(map[static_cast<size_t>(*idx)]));
    }
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    std::vector<Permutation> expected = subgroups[k].elements();
    std::sort(expected.begin(), expected.end());
    if (image != expected)
      throw IncompatibleChain("subgroup chain is not transition-compatible at level " +
                              std::to_string(k));
    const auto hc_idx = gt.levels[k + 1].index_of(centrals[k + 1]);
    if (!hc_idx) throw IncompatibleChain("central element escapes its level group");
    if (gt.levels[k].element(map[static_cast<size_t>(*hc_idx)]) != centrals[k])
      throw IncompatibleChain("central chain is not transition-compatible at level " +
                              std::to_string(k));
  }

  std::vector<CosetQuandle> built;
  for (size_t k = 0; k < gt.levels.size(); ++k)
    built.push_back(coset_quandle(
        CosetQuandleSpec{gt.levels[k], subgroups[k], centrals[k]}));

  QuandleTower out;
  for (auto &c : built) out.levels.push_back(c.q);
  for (size_t k = 0; k + 1 < gt.levels.size(); ++k) {
    const auto &map = gt.transitions[k];
    std::vector<int> qmap;
    qmap.reserve(built[k + 1].cosets.size());
    for (const auto &c : built[k + 1].cosets)
      qmap.push_back(built[k].coset_of[static_cast<size_t>(map[static_cast<size_t>(c.rep)])]);
    out.transitions.push_back(std::move(qmap));
  }
  validate_tower(out);
  return out;
}

} // namespace pfq
