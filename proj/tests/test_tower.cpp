#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pfq/errors.hpp"
#include "pfq/iso.hpp"
#include "pfq/tower.hpp"

using namespace pfq;

namespace {

QuandleTower tak_z2_depth3() { return tak_tower(zp_group_tower(2, 3)); }

} // namespace

TEST_CASE("validation accepts the corpus and pinpoints defects") {
  CHECK_NOTHROW(validate_tower(constant_tower(tait_quandle(), 3)));
  CHECK_NOTHROW(validate_tower(tak_z2_depth3()));

  // constant non-surjective map
  QuandleTower bad;
  bad.levels = {trivial_quandle(2), trivial_quandle(2)};
  bad.transitions = {{0, 0}};
  try {
    validate_tower(bad);
    CHECK(false);
  } catch (const NotSurjective &e) {
    CHECK(e.level == 0);
  }

  // surjective but not a hom
  QuandleTower skew;
  skew.levels = {tak_quandle(cyclic_group(4)), tak_quandle(cyclic_group(4))};
  skew.transitions = {{0, 1, 2, 3}};
  skew.transitions[0] = {0, 1, 3, 2}; // swaps two elements, breaks 2y - x
  CHECK_THROWS_AS(validate_tower(skew), NotHom);
}

TEST_CASE("limit operations work coordinatewise") {
  const auto t = tak_z2_depth3();
  const auto elems = all_elements(t);
  CHECK(elems.size() == 8); // bijective with the top level

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto &a = elems[rng() % elems.size()];
    const auto &b = elems[rng() % elems.size()];
    CHECK(limit_op(t, a, a) == a);
    CHECK(limit_inv_op(t, limit_op(t, a, b), b) == a);
    CHECK(limit_op(t, limit_inv_op(t, a, b), b) == a);
  }

  const auto t2 = tak_tower(zp_group_tower(2, 2));
  CHECK(limit_op(t2, {1, 1}, {0, 2}) == TruncatedElement{1, 3});
  CHECK_THROWS_AS(limit_op(t2, {1, 1}, {0, 1}), TowerMismatch); // incoherent
  CHECK_THROWS_AS(limit_op(t2, {1, 1}, {0}), TowerMismatch);    // wrong depth
}

TEST_CASE("lifts and the slim basis") {
  const auto c = constant_tower(tait_quandle(), 2);
  CHECK(lift(c, 0, 1) == std::vector<int>{1}); // identity transitions

  const auto t = tak_z2_depth3();
  for (int x = 0; x < 4; ++x)
    CHECK(lift(t, 1, x).size() == 2); // mod-4 reduction is two-to-one
  CHECK_THROWS_AS(lift(t, 2, 0), IndexOutOfRange);

  const auto elems = all_elements(t);
  for (const auto &e : elems) {
    CHECK(in_open(e, {0, e[0]}));
    CHECK(in_open(e, {2, e[2]}));
    CHECK((e[1] == 0 || !in_open(e, {1, 0})));
  }
  // refinement: the deeper open through e sits inside any intersection
  for (const auto &e : elems)
    for (int xa = 0; xa < 2; ++xa)
      for (int xb = 0; xb < 4; ++xb) {
        const SlimBasicOpen u{0, xa}, v{1, xb};
        if (!in_open(e, u) || !in_open(e, v)) continue;
        const SlimBasicOpen w{1, e[1]};
        CHECK(in_open(e, w));
        for (const auto &f : elems)
          if (in_open(f, w)) {
            CHECK(in_open(f, u));
            CHECK(in_open(f, v));
          }
      }
}

TEST_CASE("product and union towers") {
  const auto t = tak_z2_depth3();
  const auto point = constant_tower(trivial_quandle(1), 3);

  const auto p = product_tower(t, point);
  for (int k = 0; k < p.depth(); ++k)
    CHECK(are_isomorphic(p.levels[static_cast<size_t>(k)],
                         t.levels[static_cast<size_t>(k)]));

  const auto tait3 = constant_tower(tait_quandle(), 3);
  const auto big = product_tower(tait3, t);
  CHECK(big.levels[2].size() == 3 * 8);
  CHECK_NOTHROW(validate_tower(big));

  const auto u = disjoint_union_tower(t, point);
  CHECK_NOTHROW(validate_tower(u));
  CHECK(all_elements(u).size() == all_elements(t).size() + 1);
  for (const auto &e : all_elements(u)) {
    const bool left = e[0] < t.levels[0].size();
    for (int k = 0; k < u.depth(); ++k)
      CHECK((e[static_cast<size_t>(k)] < t.levels[static_cast<size_t>(k)].size()) ==
            left);
  }
}

TEST_CASE("projection subtowers close the seeds") {
  const auto t = tak_z2_depth3();
  const auto elems = all_elements(t);

  // everything reproduces the tower itself
  const auto full = projection_subtower(t, elems);
  for (int k = 0; k < t.depth(); ++k)
    CHECK(static_cast<int>(full.carrier[static_cast<size_t>(k)].size()) ==
          t.levels[static_cast<size_t>(k)].size());

  // a single element generates singleton levels in a takasaki tower
  const auto one = projection_subtower(t, {elems.front()});
  for (int k = 0; k < t.depth(); ++k)
    CHECK(one.carrier[static_cast<size_t>(k)].size() == 1);

  // the two diagonal constants generate every level
  const auto diag = projection_subtower(t, {{0, 0, 0}, {1, 1, 1}});
  for (int k = 0; k < t.depth(); ++k)
    CHECK(static_cast<int>(diag.carrier[static_cast<size_t>(k)].size()) ==
          t.levels[static_cast<size_t>(k)].size());

  CHECK(density_check(t, {{0, 0, 0}, {1, 1, 1}}).dense);
  CHECK_FALSE(density_check(t, {{0, 0, 0}}).dense);
  CHECK_FALSE(density_check(t, {}).dense);
  CHECK(density_check(t, {}).level_images[0].empty());
  CHECK(density_check(t, elems).dense);
}

TEST_CASE("orbit subtowers") {
  const auto t = tak_tower(zp_group_tower(3, 2)); // levelwise connected
  const auto orb = orbit_subtower(t, {all_elements(t).front()});
  for (int k = 0; k < t.depth(); ++k)
    CHECK(static_cast<int>(orb.carrier[static_cast<size_t>(k)].size()) ==
          t.levels[static_cast<size_t>(k)].size());

  CHECK(orbit_subtower(t, {}).carrier[0].empty());

  // a union splits into orbit-closed sides
  const auto u = disjoint_union_tower(constant_tower(tait_quandle(), 2),
                                      constant_tower(trivial_quandle(1), 2));
  const auto left = orbit_subtower(u, {{0, 0}});
  CHECK(left.carrier[0] == std::vector<int>{0, 1, 2});
  const auto right = orbit_subtower(u, {{3, 3}});
  CHECK(right.carrier[0] == std::vector<int>{3});
}

TEST_CASE("levelwise connectedness") {
  CHECK(levelwise_connected(tak_tower(zp_group_tower(3, 2))));
  CHECK_FALSE(levelwise_connected(constant_tower(trivial_quandle(2), 2)));
  CHECK_FALSE(levelwise_connected(tak_z2_depth3())); // tak of Z/4 splits
}

TEST_CASE("inner towers and equivariance") {
  const auto c = constant_tower(tait_quandle(), 3);
  const auto gt = inn_tower(c);
  CHECK(gt.levels[0].order() == 6);
  CHECK(gt.levels[2].order() == 6);
  for (const auto &tr : gt.transitions)
    for (size_t i = 0; i < tr.size(); ++i)
      CHECK(tr[i] == static_cast<int>(i)); // identity transitions

  CHECK_NOTHROW(levelwise_action_check(c));
  CHECK_NOTHROW(levelwise_action_check(tak_z2_depth3()));

  const auto trivial3 = constant_tower(trivial_quandle(3), 2);
  CHECK(inn_tower(trivial3).levels[0].order() == 1);

  // negative control: a corrupted transition loses equivariance
  QuandleTower corrupt = tak_tower(zp_group_tower(2, 2));
  corrupt.transitions[0] = {0, 1, 0, 0}; // still surjective, no longer a hom
  CHECK_THROWS_AS(levelwise_action_check(corrupt), EquivarianceFailure);
}

TEST_CASE("group tower builders") {
  const auto zp = zp_group_tower(3, 2);
  CHECK(zp.levels[0].order() == 3);
  CHECK(zp.levels[1].order() == 9);
  CHECK(zp.transitions[0][4] == 1); // reduction mod 3
  CHECK_NOTHROW(validate_group_tower(zp));
  CHECK_THROWS_AS(zp_group_tower(4, 2), NotPrime);
  CHECK_THROWS_AS(zp_group_tower(9, 2), NotPrime);

  const auto zh = zhat_tower(3);
  CHECK(zh.levels[0].order() == 1);
  CHECK(zh.levels[1].order() == 2);
  CHECK(zh.levels[2].order() == 6);
  CHECK_NOTHROW(validate_tower(tak_tower(zh)));

  CHECK_THROWS_AS(tak_tower(GroupTower{
                      {PermGroup::generate(transpositions_of(3), 3)}, {}}),
                  NotAbelian);

  const auto mp = m_product_tower(3);
  CHECK(mp.levels[0].size() == 1);
  CHECK(mp.levels[1].size() == 3);
  CHECK(mp.levels[2].size() == 18);
  CHECK_NOTHROW(validate_tower(mp));
  CHECK_THROWS_AS(m_product_tower(6), SizeBound);

  const auto cj = conj_tower(zp_group_tower(2, 2));
  CHECK(cj.levels[1] == trivial_quandle(4)); // conjugation in an abelian group
}

TEST_CASE("coset towers over a constant chain") {
  const PermGroup s3 = PermGroup::generate(transpositions_of(3), 3);
  const PermGroup h = PermGroup::generate({Permutation::from_cycles("(1 2)", 3)}, 3);
  const Permutation hc = Permutation::from_cycles("(1 2)", 3);
  GroupTower gt;
  std::vector<int> id_map(static_cast<size_t>(s3.order()));
  for (long i = 0; i < s3.order(); ++i) id_map[static_cast<size_t>(i)] = static_cast<int>(i);
  gt.levels = {s3, s3, s3};
  gt.transitions = {id_map, id_map};

  const auto ct = coset_tower(gt, {h, h, h}, {hc, hc, hc});
  CHECK(ct.depth() == 3);
  for (const auto &lvl : ct.levels) CHECK(are_isomorphic(lvl, tait_quandle()));
  CHECK(levelwise_connected(ct));

  // incompatible subgroup chain: the transition image of H_1 must be H_0
  const PermGroup other =
      PermGroup::generate({Permutation::from_cycles("(0 1)", 3)}, 3);
  CHECK_THROWS_AS(coset_tower(gt, {other, h, h}, {hc, hc, hc}),
                  IncompatibleChain);
  const Permutation bad_center = Permutation::from_cycles("(0 1)", 3);
  CHECK_THROWS_AS(coset_tower(gt, {h, h, h}, {bad_center, hc, hc}),
                  IncompatibleChain);
}
