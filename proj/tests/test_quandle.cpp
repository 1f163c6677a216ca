#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "pfq/errors.hpp"
#include "pfq/inner.hpp"
#include "pfq/iso.hpp"
#include "pfq/quandle.hpp"
#include "pfq/subquandle.hpp"

using namespace pfq;

TEST_CASE("tait table is a quandle and single-cell edits are not") {
  const auto tait = tait_quandle();
  CHECK(tait.size() == 3);
  CHECK(tait.is_kei());
  CHECK(tait.rows_one_indexed() ==
        std::vector<std::vector<int>>{{1, 3, 2}, {3, 2, 1}, {2, 1, 3}});

  int rejected = 0;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      for (int v = 0; v < 3; ++v) {
        if (v == tait.op(x, y)) continue;
        auto rows = tait.rows();
        rows[static_cast<size_t>(x)][static_cast<size_t>(y)] = v;
        CHECK_THROWS_AS(FiniteQuandle::validate(rows), AxiomViolation);
        ++rejected;
      }
  CHECK(rejected == 18);

  // the off-diagonal edit from the examples trips the column check at y = 1
  auto rows = tait.rows();
  rows[0][1] = 0;
  try {
    FiniteQuandle::validate(rows);
    CHECK(false);
  } catch (const AxiomViolation &e) {
    CHECK(e.axiom == Axiom::Q2);
    CHECK(e.y == 1);
  }
}

TEST_CASE("degenerate carriers") {
  CHECK(FiniteQuandle::validate({{0}}).size() == 1);
  CHECK(trivial_quandle(0).size() == 0); // vacuously valid
  CHECK(trivial_quandle(1).rows() == std::vector<std::vector<int>>{{0}});
  CHECK(trivial_quandle(3).rows() ==
        std::vector<std::vector<int>>{{0, 0, 0}, {1, 1, 1}, {2, 2, 2}});
}

TEST_CASE("conjugation quandles") {
  CHECK(conj_quandle(cyclic_group(5)) == trivial_quandle(5));
  CHECK(conj_quandle(trivial_group()).size() == 1);

  // restricting conj of the symmetric group on 3 symbols to its three
  // transpositions gives the tait quandle
  const auto s3 = symmetric_group_table(3);
  const auto conj = conj_quandle(s3);
  // locate the three order-2 elements of the table
  ElemSet transpositions;
  for (int a = 0; a < s3.order(); ++a)
    if (a != s3.id() && s3.mul(a, a) == s3.id()) transpositions.push_back(a);
  REQUIRE(transpositions.size() == 3);
  REQUIRE(is_subquandle(conj, transpositions));
  std::vector<std::vector<int>> table(3, std::vector<int>(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const int v = conj.op(transpositions[static_cast<size_t>(i)],
                            transpositions[static_cast<size_t>(j)]);
      table[static_cast<size_t>(i)][static_cast<size_t>(j)] = static_cast<int>(
          std::find(transpositions.begin(), transpositions.end(), v) -
          transpositions.begin());
    }
  CHECK(are_isomorphic(FiniteQuandle::validate(table), tait_quandle()));
}

TEST_CASE("takasaki quandles") {
  const auto z3 = tak_quandle(cyclic_group(3));
  CHECK(z3.op(0, 1) == 2);
  CHECK(z3 == tait_quandle()); // same table, not merely isomorphic
  CHECK(tak_quandle(cyclic_group(2)) == trivial_quandle(2));
  CHECK(tak_quandle(abelian_group({2, 2})) == trivial_quandle(4));
  CHECK_THROWS_AS(tak_quandle(symmetric_group_table(3)), NotAbelian);
  for (const auto &[name, g] : abelian_groups_up_to(12))
    CHECK(tak_quandle(g).is_kei());
}

TEST_CASE("core quandles") {
  // on abelian groups core agrees with tak cell for cell
  for (int n = 2; n <= 7; ++n)
    CHECK(core_quandle(cyclic_group(n)) == tak_quandle(cyclic_group(n)));
  CHECK(core_quandle(trivial_group()).size() == 1);
  const auto core_s3 = core_quandle(symmetric_group_table(3));
  CHECK(core_s3.size() == 6);
  CHECK(core_s3.is_kei());
}

TEST_CASE("products") {
  CHECK(product_quandle(trivial_quandle(2), trivial_quandle(3)) ==
        trivial_quandle(6));
  CHECK(are_isomorphic(product_quandle(tait_quandle(), trivial_quandle(1)),
                       tait_quandle()));

  const auto tt = product_quandle(tait_quandle(), tait_quandle());
  CHECK(tt.size() == 9);
  // orbit count by the reachability oracle and through the inner group
  const auto orbits = reachability_orbits(tt);
  CHECK(orbits.size() == inn(tt).orbits().size());
  CHECK(orbits.size() == 1);

  // coordinate projections are homs
  std::vector<int> left(9), right(9);
  for (int i = 0; i < 9; ++i) {
    left[static_cast<size_t>(i)] = i / 3;
    right[static_cast<size_t>(i)] = i % 3;
  }
  CHECK(is_hom(tt, tait_quandle(), left));
  CHECK(is_hom(tt, tait_quandle(), right));
}

TEST_CASE("disjoint unions") {
  CHECK(disjoint_union_quandle(trivial_quandle(1), trivial_quandle(1)) ==
        trivial_quandle(2));
  const auto u = disjoint_union_quandle(tait_quandle(), trivial_quandle(1));
  CHECK(u.size() == 4);
  CHECK(reachability_orbits(u).size() == 2);
  CHECK(disjoint_union_quandle(tait_quandle(), tait_quandle()).size() == 6);

  // summand operations are preserved and cross terms are projections
  const auto a = tait_quandle(), b = trivial_quandle(2);
  const auto ab = disjoint_union_quandle(a, b);
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < a.size(); ++y) CHECK(ab.op(x, y) == a.op(x, y));
  for (int x = 0; x < b.size(); ++x)
    for (int y = 0; y < b.size(); ++y)
      CHECK(ab.op(a.size() + x, a.size() + y) == a.size() + b.op(x, y));
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < b.size(); ++y) {
      CHECK(ab.op(x, a.size() + y) == x);
      CHECK(ab.op(a.size() + y, x) == a.size() + y);
    }
}

TEST_CASE("davis quotients") {
  const auto d1 = davis_quotient(1);
  CHECK(d1.size() == 3);
  CHECK(symmetry(d1, 2).is_identity()); // single residue maps to itself

  const auto d3 = davis_quotient(3);
  CHECK(d3.size() == 5);
  const auto s = symmetry(d3, 4);
  CHECK(s.to_cycle_string() == "(0 1 2)"); // cycles residues, fixes inf and s
  CHECK(s(3) == 3);
  CHECK(s(4) == 4);
  for (int y = 0; y < 4; ++y) CHECK(symmetry(d3, y).is_identity());

  CHECK(davis_quotient(2).size() == 4); // validates on construction
}

TEST_CASE("hom checks") {
  const auto tait = tait_quandle();
  std::vector<int> id{0, 1, 2};
  CHECK(is_hom(tait, tait, id));
  std::vector<int> constant{0, 0, 0};
  CHECK(is_hom(tait, trivial_quandle(1), constant));
  CHECK_FALSE(find_isomorphism(tait, trivial_quandle(3)).has_value());
}

TEST_CASE("generated subquandles and closure laws") {
  const auto tait = tait_quandle();
  CHECK(generated_subquandle(tait, {}) == ElemSet{});
  CHECK(generated_subquandle(tait, {0}) == ElemSet{0});
  CHECK(generated_subquandle(tait, {0, 1}) == ElemSet{0, 1, 2});

  std::mt19937_64 rng(3);
  const auto corpus = {tait_quandle(), davis_quotient(3),
                       disjoint_union_quandle(tait_quandle(), trivial_quandle(2)),
                       tak_quandle(cyclic_group(6))};
  for (const auto &q : corpus) {
    for (int trial = 0; trial < 30; ++trial) {
      ElemSet seed, extra;
      for (int x = 0; x < q.size(); ++x) {
        if (rng() % 3 == 0) seed.push_back(x);
        if (rng() % 4 == 0) extra.push_back(x);
      }
      const auto closed = generated_subquandle(q, seed);
      // extensive
      CHECK(std::includes(closed.begin(), closed.end(), seed.begin(), seed.end()));
      // idempotent
      CHECK(generated_subquandle(q, closed) == closed);
      // monotone
      ElemSet bigger = seed;
      bigger.insert(bigger.end(), extra.begin(), extra.end());
      const auto closed_bigger = generated_subquandle(q, bigger);
      CHECK(std::includes(closed_bigger.begin(), closed_bigger.end(),
                          closed.begin(), closed.end()));
      CHECK(is_subquandle(q, closed));
    }
  }
}

TEST_CASE("subquandle lattice of the tait quandle") {
  const auto tait = tait_quandle();
  const auto subs = all_subquandles(tait);
  CHECK(subs == std::vector<ElemSet>{{}, {0}, {1}, {2}, {0, 1, 2}});

  CHECK(find_complement(tait, {0}) == ElemSet{1});
  CHECK(find_complement(tait, {}) == ElemSet{0, 1, 2});
  CHECK(find_complement(tait, {0, 1, 2}) == ElemSet{});
  CHECK(meet({0, 1}, {1, 2}) == ElemSet{1});
  CHECK(join(tait, {0}, {1}) == ElemSet{0, 1, 2});
}

TEST_CASE("complements in a trivial quandle are set complements") {
  const auto t3 = trivial_quandle(3);
  CHECK(all_subquandles(t3).size() == 8);
  CHECK(find_complement(t3, {0}) == ElemSet{1, 2});
  CHECK_THROWS_AS(all_subquandles(trivial_quandle(9)), SizeBound);
}

TEST_CASE("isomorphism search finds witnesses and respects structure") {
  const auto tait = tait_quandle();
  auto self = find_isomorphism(tait, tait);
  REQUIRE(self.has_value());
  CHECK(self->map == std::vector<int>{0, 1, 2}); // least witness is the identity

  // symmetry: inverting a found witness gives a hom back
  const auto m3 = two_cycle_quandle(3);
  auto fwd = find_isomorphism(m3, tait);
  REQUIRE(fwd.has_value());
  std::vector<int> back(fwd->map.size());
  for (size_t i = 0; i < fwd->map.size(); ++i)
    back[static_cast<size_t>(fwd->map[i])] = static_cast<int>(i);
  CHECK(is_hom(tait, m3, back));
}
