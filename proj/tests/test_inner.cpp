#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pfq/errors.hpp"
#include "pfq/inner.hpp"
#include "pfq/iso.hpp"
#include "pfq/quandle.hpp"
#include "pfq/suite.hpp"

using namespace pfq;

TEST_CASE("symmetries") {
  for (int y = 0; y < 3; ++y) CHECK(symmetry(trivial_quandle(3), y).is_identity());
  CHECK(symmetry(tait_quandle(), 0).to_cycle_string() == "(1 2)");
  // idempotency restated: the symmetry at y fixes y
  for (const auto &[name, q] : corpus_quandles())
    for (int y = 0; y < q.size(); ++y) CHECK(symmetry(q, y)(y) == y);
}

TEST_CASE("inner groups and connectedness") {
  const auto g = inn(tait_quandle());
  CHECK(g.order() == 6);
  CHECK(g.is_transitive());
  CHECK(is_connected(tait_quandle()));

  for (int k = 2; k <= 5; ++k) {
    CHECK(inn(trivial_quandle(k)).order() == 1);
    CHECK_FALSE(is_connected(trivial_quandle(k)));
  }
  CHECK(aut(trivial_quandle(3)).order() == 6);
  CHECK_THROWS_AS(aut(trivial_quandle(9)), SizeBound);
}

TEST_CASE("inner group is normal in the automorphism group") {
  for (const auto &[name, q] : corpus_quandles()) {
    if (q.size() > 8) continue;
    const auto in = inn(q);
    const auto full = aut(q);
    CHECK(is_subgroup(in, full));
    for (const auto &a : full.elements())
      for (const auto &s : in.generators())
        CHECK(in.contains(conjugate(s, a)));
  }
}

TEST_CASE("inner orbits equal reachability classes") {
  for (const auto &[name, q] : corpus_quandles()) {
    if (q.size() == 0) continue;
    CHECK(inn(q).orbits() == reachability_orbits(q));
  }
}

TEST_CASE("two-cycle quandles") {
  CHECK(two_cycle_quandle(2).size() == 1);
  CHECK(are_isomorphic(two_cycle_quandle(3), tait_quandle()));
  CHECK(inn(two_cycle_quandle(4)).order() == 24);
  CHECK(two_cycle_quandle(4).size() == 6);
  CHECK_THROWS_AS(two_cycle_quandle(1), InvalidSpec);
}

TEST_CASE("decomposition at a base point") {
  const auto data = ehrman_decompose(tait_quandle(), 0);
  CHECK(data.g.order() == 6);
  CHECK(data.h_stab.order() == 2);
  CHECK(data.h.to_cycle_string() == "(1 2)");
  CHECK(data.cosets.size() == 3);

  const auto singleton = ehrman_decompose(trivial_quandle(1), 0);
  CHECK(singleton.g.order() == 1);
  CHECK(singleton.h.is_identity());

  const auto tak5 = ehrman_decompose(tak_quandle(cyclic_group(5)), 0);
  CHECK(tak5.g.order() == 10);
  CHECK(tak5.g.order() / tak5.h_stab.order() == 5);

  CHECK_THROWS_AS(ehrman_decompose(trivial_quandle(2), 0), NotConnected);
  CHECK_THROWS_AS(ehrman_decompose(tait_quandle(), 7), IndexOutOfRange);
}

TEST_CASE("right coset quandles") {
  const PermGroup s3 = PermGroup::generate(transpositions_of(3), 3);
  const PermGroup h = PermGroup::generate({Permutation::from_cycles("(1 2)", 3)}, 3);
  const Permutation hc = Permutation::from_cycles("(1 2)", 3);

  const auto cq = coset_quandle({s3, h, hc});
  CHECK(cq.q.size() == 3);
  CHECK(are_isomorphic(cq.q, tait_quandle()));

  // whole group: one coset
  CHECK(coset_quandle({s3, s3, Permutation::identity(3)}).q.size() == 1);
  // identity element: trivial quandle on the coset space
  CHECK(coset_quandle({s3, h, Permutation::identity(3)}).q ==
        trivial_quandle(3));

  // non-central element rejected
  const PermGroup big = PermGroup::generate(transpositions_of(4), 4);
  const PermGroup sub =
      PermGroup::generate({Permutation::from_cycles("(0 1)", 4),
                           Permutation::from_cycles("(2 3)", 4)},
                          4);
  CHECK_THROWS_AS(
      coset_quandle({big, big, Permutation::from_cycles("(0 1)", 4)}),
      InvalidSpec);
  CHECK_THROWS_AS(coset_quandle({h, s3, hc}), InvalidSpec); // H not inside G
  (void)sub;
}

TEST_CASE("sampled coset quandles validate") {
  std::mt19937_64 rng(kDefaultSeed);
  const PermGroup s4 = PermGroup::generate(transpositions_of(4), 4);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Permutation> gens{s4.element(static_cast<int>(rng() % s4.order()))};
    PermGroup h = PermGroup::generate(gens, 4);
    PermGroup z = h.center();
    Permutation hc = z.element(static_cast<int>(rng() % z.order()));
    const auto cq = coset_quandle({s4, h, hc});
    CHECK_NOTHROW(FiniteQuandle::validate(cq.q.rows()));
  }
}

TEST_CASE("induced maps between coset quandles") {
  const PermGroup s3 = PermGroup::generate(transpositions_of(3), 3);
  const PermGroup h = PermGroup::generate({Permutation::from_cycles("(1 2)", 3)}, 3);
  const Permutation hc = Permutation::from_cycles("(1 2)", 3);
  const CosetQuandleSpec spec{s3, h, hc};

  SUBCASE("identity map induces the identity hom") {
    GroupHom id;
    for (long i = 0; i < s3.order(); ++i) id.image.push_back(static_cast<int>(i));
    const auto ind = induced_coset_hom(spec, s3, id);
    CHECK(ind.hom.map == std::vector<int>{0, 1, 2});
  }

  SUBCASE("sign map collapses onto a singleton") {
    const PermGroup z2 = regular_representation(cyclic_group(2));
    GroupHom sign;
    for (long i = 0; i < s3.order(); ++i)
      sign.image.push_back(s3.element(static_cast<int>(i)).is_even() ? 0 : 1);
    const auto ind = induced_coset_hom(spec, z2, sign);
    CHECK(ind.downstairs.q.size() == 1); // phi(H) is everything downstairs
    CHECK(ind.upstairs.q.size() == 3);
  }

  SUBCASE("mod-2 reduction of the cyclic group of order 4") {
    const PermGroup z4 = regular_representation(cyclic_group(4));
    const PermGroup h2 = PermGroup::from_elements(
        {z4.element(0), z4.element(2)}, 4); // the subgroup {0, 2}
    const CosetQuandleSpec s{z4, h2, z4.element(2)};
    const PermGroup z2 = regular_representation(cyclic_group(2));
    GroupHom phi;
    for (int i = 0; i < 4; ++i) phi.image.push_back(i % 2);
    const auto ind = induced_coset_hom(s, z2, phi);
    CHECK(ind.upstairs.q == trivial_quandle(2));
    CHECK(ind.downstairs.q == trivial_quandle(2));
    CHECK(is_hom(ind.hom));
  }

  SUBCASE("non-surjective maps are rejected") {
    const PermGroup z4 = regular_representation(cyclic_group(4));
    GroupHom into; // everything to the identity inside Z4
    for (int i = 0; i < 6; ++i) into.image.push_back(0);
    CHECK_THROWS_AS(induced_coset_hom(spec, z4, into), NotSurjective);
  }

  SUBCASE("composition of induced maps matches the induced composition") {
    // S3 ->> Z2 ->> 1
    const PermGroup z2 = regular_representation(cyclic_group(2));
    const PermGroup one = regular_representation(cyclic_group(1));
    GroupHom sign;
    for (long i = 0; i < s3.order(); ++i)
      sign.image.push_back(s3.element(static_cast<int>(i)).is_even() ? 0 : 1);
    GroupHom crush;
    crush.image = {0, 0};
    GroupHom both;
    for (long i = 0; i < s3.order(); ++i) both.image.push_back(0);

    const auto first = induced_coset_hom(spec, z2, sign);
    const CosetQuandleSpec mid{z2, first.downstairs.cosets.empty()
                                       ? z2
                                       : z2, // phi(H) = Z2 from the sign map
                               z2.element(0)};
    const auto second = induced_coset_hom(mid, one, crush);
    const auto direct = induced_coset_hom(spec, one, both);
    // both routes land in the singleton quandle with the same assignment
    std::vector<int> composed;
    for (int v : first.hom.map)
      composed.push_back(second.hom.map[static_cast<size_t>(v)]);
    CHECK(composed == direct.hom.map);
  }
}

TEST_CASE("connected enumeration and the round trip") {
  const int expected[5] = {1, 0, 1, 1, 3};
  for (int n = 1; n <= 4; ++n) {
    const auto found = enumerate_connected(n);
    CHECK(static_cast<int>(found.size()) == expected[n - 1]);
    const auto brute = kernels::enumerate_tables_bruteforce(n, true, ExecMode::Parallel);
    CHECK(brute.size() == found.size());
    for (const auto &q : found) {
      CHECK(is_connected(q));
      CHECK(ehrman_roundtrip(q));
      // base-point independence
      for (int base = 0; base < q.size(); ++base) {
        const auto data = ehrman_decompose(q, base);
        const auto rebuilt = coset_quandle({data.g, data.h_stab, data.h});
        CHECK(are_isomorphic(q, rebuilt.q));
      }
    }
  }
  CHECK(enumerate_connected(5).size() == 3);
  CHECK_THROWS_AS(enumerate_connected(7), SizeBound);
}
