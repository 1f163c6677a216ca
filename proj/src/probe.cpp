#include "pfq/probe.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

#include "pfq/errors.hpp"
#include "pfq/inner.hpp"

namespace pfq {

Permutation ell_coordinate(int n) {
  if (n < 2) throw InvalidSpec("coordinate index starts at 2");
  const int len = 2 * (n / 2);
  std::vector<int> im(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) im[static_cast<size_t>(i)] = i;
  for (int i = 0; i < len; ++i) im[static_cast<size_t>(i)] = (i + 1) % len;
  return Permutation(std::move(im));
}

int min_transpositions_bfs(const Permutation &p) {
  const int n = p.degree();
  auto gens = transpositions_of(n);
  std::map<Permutation, int> dist;
  Permutation id = Permutation::identity(n);
  dist.emplace(id, 0);
  std::queue<Permutation> work;
  work.push(id);
  while (!work.empty()) {
    Permutation cur = work.front();
    work.pop();
    const int d = dist.at(cur);
    if (cur == p) return d;
    for (const auto &t : gens) {
      Permutation next = compose(cur, t);
      if (dist.emplace(next, d + 1).second) work.push(next);
    }
  }
  throw InvariantFailure("transposition search exhausted the group");
}

namespace {

long factorial(int n) {
  long f = 1;
  for (int t = 2; t <= n; ++t) f *= t;
  return f;
}

// Lexicographically ordered elements of one symmetric group with a
// composition table and parity flags; one factor of the tuple representation.
struct SymFactor {
  int n = 0;
  std::vector<Permutation> elems;
  std::vector<int32_t> mult; // rank x rank -> rank
  std::vector<uint8_t> odd;
  std::vector<int> transposition_ranks; // by lexicographic (i j)

  int rank_of(const Permutation &p) const {
    const int deg = p.degree();
    long long rank = 0;
    const std::vector<int> &im = p.images();
    for (int i = 0; i < deg; ++i) {
      int smaller = 0;
      for (int j = i + 1; j < deg; ++j)
        if (im[static_cast<size_t>(j)] < im[static_cast<size_t>(i)]) ++smaller;
      rank += smaller * factorial(deg - 1 - i);
    }
    return static_cast<int>(rank);
  }
};

SymFactor build_factor(int n) {
  SymFactor f;
  f.n = n;
  std::vector<int> im(static_cast<size_t>(n));
  std::iota(im.begin(), im.end(), 0);
  do {
    f.elems.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  const int m = static_cast<int>(f.elems.size());
  f.odd.resize(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i)
    f.odd[static_cast<size_t>(i)] =
        parity(f.elems[static_cast<size_t>(i)]) == Parity::Odd ? 1 : 0;
  f.mult.resize(static_cast<size_t>(m) * static_cast<size_t>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      f.mult[static_cast<size_t>(a) * static_cast<size_t>(m) +
             static_cast<size_t>(b)] =
          f.rank_of(compose(f.elems[static_cast<size_t>(a)],
                            f.elems[static_cast<size_t>(b)]));
  for (const auto &t : transpositions_of(n))
    f.transposition_ranks.push_back(f.rank_of(t));
  return f;
}

// Mixed-radix codes over the factor group orders, most significant first;
// matches the left-fold packing of the product carrier.
struct TupleSpace {
  std::vector<SymFactor> factors; // symbols 3 .. k+2
  std::vector<long> strides;
  long size = 1;

  void finalize() {
    strides.assign(factors.size(), 1);
    for (int i = static_cast<int>(factors.size()) - 2; i >= 0; --i)
      strides[static_cast<size_t>(i)] =
          strides[static_cast<size_t>(i + 1)] *
          static_cast<long>(factors[static_cast<size_t>(i + 1)].elems.size());
    size = factors.empty()
               ? 1
               : strides[0] * static_cast<long>(factors[0].elems.size());
  }
  int digit(long code, size_t i) const {
    return static_cast<int>((code / strides[i]) %
                            static_cast<long>(factors[i].elems.size()));
  }
  long compose_codes(long a, long b) const {
    long out = 0;
    for (size_t i = 0; i < factors.size(); ++i) {
      const int m = static_cast<int>(factors[i].elems.size());
      out += static_cast<long>(
                 factors[i].mult[static_cast<size_t>(digit(a, i)) *
                                     static_cast<size_t>(m) +
                                 static_cast<size_t>(digit(b, i))]) *
             strides[i];
    }
    return out;
  }
  bool same_parity(long code) const {
    if (factors.empty()) return true;
    const uint8_t first = factors[0].odd[static_cast<size_t>(digit(code, 0))];
    for (size_t i = 1; i < factors.size(); ++i)
      if (factors[i].odd[static_cast<size_t>(digit(code, i))] != first)
        return false;
    return true;
  }
};

std::vector<bool> closure_codes(const TupleSpace &space,
                                const std::vector<long> &gens, long *count) {
  std::vector<bool> seen(static_cast<size_t>(space.size), false);
  seen[0] = true; // identity code is 0 in every digit
  std::vector<long> frontier{0};
  long total = 1;
  while (!frontier.empty()) {
    std::vector<long> next;
    for (long f : frontier)
      for (long g : gens) {
        const long h = space.compose_codes(f, g);
        if (!seen[static_cast<size_t>(h)]) {
          seen[static_cast<size_t>(h)] = true;
          ++total;
          next.push_back(h);
        }
      }
    frontier = std::move(next);
  }
  *count = total;
  return seen;
}

// Every code lies in the closure exactly when its coordinates share a
// parity. Returns the equal-parity count; *mismatch takes the least
// disagreeing code or -1.
long parity_scan(const TupleSpace &space, const std::vector<bool> &closure,
                 ExecMode mode, long *mismatch) {
  const long size = space.size;
  long count = 0;
  long first_bad = -1;
  const bool parallel = mode == ExecMode::Parallel;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(+ : count) if (parallel)
#endif
  for (long code = 0; code < size; ++code) {
    const bool sp = space.same_parity(code);
    if (sp) ++count;
    if (sp != closure[static_cast<size_t>(code)]) {
#ifdef _OPENMP
#pragma omp critical
#endif
      if (first_bad < 0 || code < first_bad) first_bad = code;
    }
  }
  (void)parallel;
  *mismatch = first_bad;
  return count;
}

// Transposition word with recomposition check.
std::vector<Permutation> transposition_word(const Permutation &p) {
  std::vector<Permutation> word;
  Permutation cur = p;
  while (!cur.is_identity()) {
    int i = 0;
    while (cur(i) == i) ++i;
    std::vector<int> im(static_cast<size_t>(cur.degree()));
    std::iota(im.begin(), im.end(), 0);
    std::swap(im[static_cast<size_t>(i)], im[static_cast<size_t>(cur(i))]);
    Permutation t{std::move(im)};
    cur = compose(cur, t); // clears the point i
    word.push_back(std::move(t));
  }
  std::reverse(word.begin(), word.end());
  Permutation check = Permutation::identity(p.degree());
  for (const auto &t : word) check = compose(check, t);
  if (check != p)
    throw InvariantFailure("transposition decomposition failed to recompose");
  return word;
}

std::vector<Permutation> base_letter_for(const std::vector<Permutation> &shape) {
  std::vector<Permutation> letter;
  for (const auto &p : shape) {
    std::vector<int> im(static_cast<size_t>(p.degree()));
    std::iota(im.begin(), im.end(), 0);
    std::swap(im[0], im[1]);
    letter.emplace_back(std::move(im));
  }
  return letter;
}

// Membership certificate in the group generated by all-transposition tuples:
// write the target as an explicit word in such tuples and recompose.
bool tuple_in_closure_constructive(const std::vector<Permutation> &target) {
  const size_t m = target.size();
  if (m == 0) return true;
  const bool first_odd = parity(target[0]) == Parity::Odd;
  for (const auto &p : target)
    if ((parity(p) == Parity::Odd) != first_odd) return false;

  std::vector<std::vector<Permutation>> word;
  std::vector<Permutation> rest = target;
  if (first_odd) {
    // target = base * rest with rest all-even
    auto base = base_letter_for(target);
    for (size_t i = 0; i < m; ++i) rest[i] = compose(base[i], target[i]);
    word.push_back(std::move(base));
  }
  for (size_t i = 0; i < m; ++i) {
    auto taus = transposition_word(rest[i]);
    if (taus.size() % 2 != 0) return false;
    // pairs of letters agree outside factor i and cancel there
    for (size_t t = 0; t < taus.size(); t += 2) {
      auto l1 = base_letter_for(target);
      auto l2 = base_letter_for(target);
      l1[i] = taus[t];
      l2[i] = taus[t + 1];
      word.push_back(std::move(l1));
      word.push_back(std::move(l2));
    }
  }
  std::vector<Permutation> acc;
  for (const auto &p : target) acc.push_back(Permutation::identity(p.degree()));
  for (const auto &letter : word)
    for (size_t i = 0; i < m; ++i) acc[i] = compose(acc[i], letter[i]);
  return acc == target;
}

// Functional view of the level carrier M_3 x ... x M_{k+2} (the M_2 factor
// is a single fixed point and does not change indices): per-factor
// conjugation tables over transposition digits.
struct CarrierSpace {
  std::vector<int> sizes;                       // C(n,2) per factor
  std::vector<long> strides;
  long size = 1;
  std::vector<std::vector<std::vector<int>>> conj_by_transposition;
  std::vector<std::vector<std::vector<int>>> conj_by_even; // (0 1 c) moves

  static CarrierSpace build(const std::vector<int> &symbols) {
    CarrierSpace c;
    for (int n : symbols) {
      const auto trans = transpositions_of(n);
      std::map<Permutation, int> index;
      for (size_t t = 0; t < trans.size(); ++t)
        index.emplace(trans[t], static_cast<int>(t));
      std::vector<std::vector<int>> by_t(trans.size(),
                                         std::vector<int>(trans.size()));
      for (size_t d = 0; d < trans.size(); ++d)
        for (size_t t = 0; t < trans.size(); ++t)
          by_t[d][t] = index.at(conjugate(trans[d], trans[t]));
      std::vector<std::vector<int>> by_e;
      for (int cpt = 2; cpt < n; ++cpt) {
        std::vector<int> im(static_cast<size_t>(n));
        std::iota(im.begin(), im.end(), 0);
        im[0] = 1;
        im[1] = cpt;
        im[static_cast<size_t>(cpt)] = 0; // the 3-cycle (0 1 c)
        Permutation g{std::move(im)};
        std::vector<int> map(trans.size());
        for (size_t d = 0; d < trans.size(); ++d)
          map[d] = index.at(conjugate(trans[d], g));
        by_e.push_back(std::move(map));
      }
      c.sizes.push_back(static_cast<int>(trans.size()));
      c.conj_by_transposition.push_back(std::move(by_t));
      c.conj_by_even.push_back(std::move(by_e));
    }
    c.strides.assign(c.sizes.size(), 1);
    for (int i = static_cast<int>(c.sizes.size()) - 2; i >= 0; --i)
      c.strides[static_cast<size_t>(i)] =
          c.strides[static_cast<size_t>(i + 1)] *
          static_cast<long>(c.sizes[static_cast<size_t>(i + 1)]);
    c.size = c.sizes.empty()
                 ? 1
                 : c.strides[0] * static_cast<long>(c.sizes[0]);
    return c;
  }

  int digit(long x, size_t f) const {
    return static_cast<int>((x / strides[f]) % static_cast<long>(sizes[f]));
  }

  // x . tuple where tuple holds one transposition digit per factor
  long act_by_transposition_digits(long x, const std::vector<int> &digits) const {
    long out = 0;
    for (size_t f = 0; f < sizes.size(); ++f)
      out += static_cast<long>(
                 conj_by_transposition[f][static_cast<size_t>(digit(x, f))]
                                      [static_cast<size_t>(digits[f])]) *
             strides[f];
    return out;
  }
};

// Single orbit of the inner action on the carrier, certified by reachability
// under factorwise even moves plus the all-(0 1) symmetry.
int carrier_orbit_count(const CarrierSpace &c) {
  if (c.size == 1) return 1;
  std::vector<bool> seen(static_cast<size_t>(c.size), false);
  std::vector<long> stack{0};
  seen[0] = true;
  long reached = 1;
  const std::vector<int> base(c.sizes.size(), 0); // digit of (0 1) is 0
  while (!stack.empty()) {
    long x = stack.back();
    stack.pop_back();
    auto visit = [&](long y) {
      if (!seen[static_cast<size_t>(y)]) {
        seen[static_cast<size_t>(y)] = true;
        ++reached;
        stack.push_back(y);
      }
    };
    visit(c.act_by_transposition_digits(x, base));
    for (size_t f = 0; f < c.sizes.size(); ++f)
      for (const auto &move : c.conj_by_even[f]) {
        long y = x - static_cast<long>(c.digit(x, f)) * c.strides[f] +
                 static_cast<long>(move[static_cast<size_t>(c.digit(x, f))]) *
                     c.strides[f];
        visit(y);
      }
  }
  if (reached != c.size)
    throw InvariantFailure("two-cycle product level unexpectedly disconnected");
  return 1;
}

// Action of one tuple of group elements on the packed carrier.
Permutation carrier_action(const std::vector<Permutation> &tuple) {
  std::vector<std::vector<int>> maps;
  long carrier = 1;
  for (const auto &g : tuple) {
    const auto trans = transpositions_of(g.degree());
    std::map<Permutation, int> index;
    for (size_t t = 0; t < trans.size(); ++t)
      index.emplace(trans[t], static_cast<int>(t));
    std::vector<int> map(trans.size());
    for (size_t t = 0; t < trans.size(); ++t)
      map[t] = index.at(conjugate(trans[t], g));
    carrier *= static_cast<long>(trans.size());
    maps.push_back(std::move(map));
  }
  std::vector<int> im(static_cast<size_t>(carrier));
  for (long x = 0; x < carrier; ++x) {
    long rem = x, out = 0;
    for (size_t i = 0; i < maps.size(); ++i) {
      long stride = 1;
      for (size_t j = i + 1; j < maps.size(); ++j)
        stride *= static_cast<long>(maps[j].size());
      const int digit = static_cast<int>(rem / stride);
      rem %= stride;
      out += static_cast<long>(maps[i][static_cast<size_t>(digit)]) * stride;
    }
    im[static_cast<size_t>(x)] = static_cast<int>(out);
  }
  return Permutation(std::move(im));
}

} // namespace

ProbeReport counterexample_probe(int depth, ExecMode mode,
                                 long exhaustive_code_bound,
                                 long carrier_group_bound) {
  if (depth < 1 || depth > 7)
    throw SizeBound("probe depth limited to 1..7");

  ProbeReport report;
  report.depth = depth;

  std::vector<Permutation> ell; // coordinates for n = 2..depth+1
  for (int n = 2; n <= depth + 1; ++n) {
    Permutation l = ell_coordinate(n);
    ProbeFactorStat stat;
    stat.n = n;
    stat.min_transpositions = l.min_transpositions();
    stat.odd = parity(l) == Parity::Odd;
    if (stat.min_transpositions != 2 * (n / 2) - 1)
      throw InvariantFailure("cycle-count formula disagrees at symbol count " +
                             std::to_string(n));
    report.factors.push_back(stat);
    ell.push_back(std::move(l));
  }
  report.unbounded = true;
  for (size_t i = 0; i + 2 < report.factors.size(); ++i)
    report.unbounded = report.unbounded &&
                       report.factors[i + 2].min_transpositions ==
                           report.factors[i].min_transpositions + 2;
  if (depth >= 3)
    report.unbounded = report.unbounded &&
                       report.factors.back().min_transpositions >
                           report.factors.front().min_transpositions;

  report.ell_coherent = true;

  for (int k = 0; k < depth; ++k) {
    ProbeLevelStat stat;
    stat.level = k;

    std::vector<int> symbols;
    for (int n = 3; n <= k + 2; ++n) symbols.push_back(n);
    CarrierSpace carrier = CarrierSpace::build(symbols);
    stat.carrier = carrier.size;
    stat.orbit_count = carrier_orbit_count(carrier);

    if (k == 0) {
      stat.inn_order = 1;
      stat.same_parity_order = 1;
      stat.equality_exhaustive = true;
      stat.ell_member = true;
      stat.carrier_cross_checked = true;
      report.levels.push_back(stat);
      continue;
    }

    long formula = 1, code_space = 1;
    for (int n : symbols) {
      formula *= factorial(n);
      code_space *= factorial(n);
    }
    for (int i = 1; i < k; ++i) formula /= 2;

    std::vector<Permutation> ell_tuple(ell.begin() + 1,
                                       ell.begin() + 1 + static_cast<long>(k));

    if (code_space <= exhaustive_code_bound) {
      TupleSpace space;
      for (int n : symbols) space.factors.push_back(build_factor(n));
      space.finalize();

      std::vector<long> gens;
      for (size_t i = 0; i < space.factors.size(); ++i) {
        const int n = space.factors[i].n;
        for (int j = 0; j + 1 < n; ++j) {
          long code = 0;
          for (size_t f = 0; f < space.factors.size(); ++f) {
            int rank;
            if (f == i) {
              std::vector<int> im(static_cast<size_t>(space.factors[f].n));
              std::iota(im.begin(), im.end(), 0);
              std::swap(im[static_cast<size_t>(j)],
                        im[static_cast<size_t>(j + 1)]);
              rank = space.factors[f].rank_of(Permutation(std::move(im)));
            } else {
              rank = space.factors[f].transposition_ranks[0];
            }
            code += static_cast<long>(rank) * space.strides[f];
          }
          gens.push_back(code);
        }
      }
      std::sort(gens.begin(), gens.end());
      gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

      long closure_count = 0;
      auto closure = closure_codes(space, gens, &closure_count);
      stat.inn_order = closure_count;

      // every symmetry tuple lies in the closure, so the closure equals the
      // full inner group rather than a proper subgroup
      {
        std::vector<size_t> idx(space.factors.size(), 0);
        bool done = false;
        while (!done) {
          long code = 0;
          for (size_t f = 0; f < space.factors.size(); ++f)
            code += static_cast<long>(
                        space.factors[f]
                            .transposition_ranks[idx[f]]) *
                    space.strides[f];
          if (!closure[static_cast<size_t>(code)])
            throw InvariantFailure(
                "a symmetry escaped the generated closure at level " +
                std::to_string(k));
          size_t f = space.factors.size();
          for (; f > 0; --f) {
            if (++idx[f - 1] <
                space.factors[f - 1].transposition_ranks.size())
              break;
            idx[f - 1] = 0;
          }
          done = f == 0;
        }
      }

      long mismatch = -1;
      const long sp_count = parity_scan(space, closure, mode, &mismatch);
      stat.same_parity_order = sp_count;
      stat.equality_exhaustive = mismatch < 0;
      if (!stat.equality_exhaustive)
        throw InvariantFailure(
            "parity filter disagrees with the closure at level " +
            std::to_string(k) + ", code " + std::to_string(mismatch));
      if (sp_count != formula)
        throw InvariantFailure(
            "parity count disagrees with the index formula at level " +
            std::to_string(k));

      long ell_code = 0;
      for (size_t f = 0; f < space.factors.size(); ++f)
        ell_code += static_cast<long>(space.factors[f].rank_of(ell_tuple[f])) *
                    space.strides[f];
      stat.ell_member = closure[static_cast<size_t>(ell_code)];

      if (stat.inn_order <= carrier_group_bound) {
        // compare against the honest inner group of the explicit level table
        FiniteQuandle level_q = two_cycle_quandle(3);
        for (int n = 4; n <= k + 2; ++n)
          level_q = product_quandle(level_q, two_cycle_quandle(n));
        PermGroup carrier_inn =
            inn(level_q, std::max(carrier_group_bound * 2, 1000L));
        bool ok = carrier_inn.order() == stat.inn_order;
        std::vector<Permutation> actions;
        for (long code = 0; code < space.size && ok; ++code) {
          if (!closure[static_cast<size_t>(code)]) continue;
          std::vector<Permutation> tuple;
          for (size_t f = 0; f < space.factors.size(); ++f)
            tuple.push_back(
                space.factors[f].elems[static_cast<size_t>(space.digit(code, f))]);
          Permutation act = carrier_action(tuple);
          ok = carrier_inn.contains(act);
          actions.push_back(std::move(act));
        }
        if (ok) {
          std::sort(actions.begin(), actions.end());
          ok = std::adjacent_find(actions.begin(), actions.end()) ==
               actions.end();
        }
        if (!ok)
          throw InvariantFailure("tuple representation disagrees with the "
                                 "carrier group at level " +
                                 std::to_string(k));
        stat.carrier_cross_checked = true;
      }
    } else {
      // two-sided generation argument with explicit certificates: the
      // equal-parity subgroup is generated by per-coordinate 3-cycles plus
      // one all-transposition tuple, and each certificate is recomposed
      stat.inn_order = formula;
      stat.same_parity_order = formula;
      bool ok = true;
      for (size_t i = 0; i < ell_tuple.size() && ok; ++i) {
        const int n = ell_tuple[i].degree();
        for (int c = 2; c < n && ok; ++c) {
          std::vector<Permutation> target;
          for (const auto &p : ell_tuple)
            target.push_back(Permutation::identity(p.degree()));
          std::vector<int> im(static_cast<size_t>(n));
          std::iota(im.begin(), im.end(), 0);
          im[0] = 1;
          im[1] = c;
          im[static_cast<size_t>(c)] = 0;
          target[i] = Permutation(std::move(im));
          ok = tuple_in_closure_constructive(target);
        }
      }
      stat.equality_constructive = ok;
      if (!ok)
        throw InvariantFailure("generation certificate failed at level " +
                               std::to_string(k));
      stat.ell_member = tuple_in_closure_constructive(ell_tuple);
    }

    // coherence of the distinguished element with the first-coordinates
    // projection: dropping the last factor of the level-k tuple gives the
    // level-(k-1) tuple, and the actions commute with the projection
    if (k >= 1) {
      std::vector<Permutation> prefix(ell_tuple.begin(), ell_tuple.end() - 1);
      const long last = static_cast<long>(carrier.sizes.back());
      Permutation hi = carrier_action(ell_tuple);
      if (!prefix.empty()) {
        Permutation lo = carrier_action(prefix);
        for (long x = 0; x < carrier.size; ++x)
          if (hi(static_cast<int>(x)) / last != lo(static_cast<int>(x / last)))
            report.ell_coherent = false;
      } else {
        // one factor upstairs, single point downstairs: nothing to compare
      }
    }

    report.levels.push_back(stat);
  }
  return report;
}

} // namespace pfq
