#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "pfq/errors.hpp"
#include "pfq/group.hpp"
#include "pfq/inner.hpp"
#include "pfq/permgroup.hpp"

using namespace pfq;

namespace {

Permutation cyc(const std::string &s, int degree) {
  return Permutation::from_cycles(s, degree);
}

// every permutation of the given degree, for small brute-force work
std::vector<Permutation> all_perms(int degree) {
  std::vector<int> im(static_cast<size_t>(degree));
  for (int i = 0; i < degree; ++i) im[static_cast<size_t>(i)] = i;
  std::vector<Permutation> out;
  do {
    out.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

} // namespace

TEST_CASE("composition is left to right") {
  // fixes the action convention: (a*b)(x) = b(a(x))
  const auto a = cyc("(0 1)", 3), b = cyc("(1 2)", 3);
  CHECK(compose(a, b)(0) == 2);
  CHECK(compose(b, a)(0) == 1);
}

TEST_CASE("min transpositions from the cycle count") {
  CHECK(Permutation::identity(4).min_transpositions() == 0);
  CHECK(Permutation::identity(4).is_even());

  const auto four_cycle = cyc("(0 1 2 3)", 4);
  CHECK(four_cycle.min_transpositions() == 3);
  CHECK(parity(four_cycle) == Parity::Odd);
  // brute force: no product of <= 2 transpositions equals a 4-cycle
  bool found_short = false;
  for (const auto &t1 : transpositions_of(4))
    for (const auto &t2 : transpositions_of(4))
      if (compose(t1, t2) == four_cycle) found_short = true;
  CHECK_FALSE(found_short);

  const auto double_swap = cyc("(0 1)(2 3)", 4);
  CHECK(double_swap.min_transpositions() == 2);
  CHECK(double_swap.is_even());
}

TEST_CASE("cycle notation parses and prints") {
  CHECK(cyc("(0 1)(2 4)", 5).to_cycle_string() == "(0 1)(2 4)");
  CHECK(Permutation::identity(4).to_cycle_string() == "()");
  CHECK(cyc("()", 3) == Permutation::identity(3));
  CHECK(cyc("(2 0 1)", 3).to_cycle_string() == "(0 1 2)");
  CHECK_THROWS_AS(cyc("(0 5)", 3), ParseError);
  CHECK_THROWS_AS(cyc("(0 1", 3), ParseError);
  CHECK_THROWS_AS(cyc("(0 0)", 3), ParseError);
}

TEST_CASE("breadth-first generation") {
  CHECK(PermGroup::generate({cyc("(0 1)", 2)}, 2).order() == 2);
  CHECK(PermGroup::generate({cyc("(0 1)", 3), cyc("(1 2)", 3)}, 3).order() == 6);
  CHECK(PermGroup::generate({}, 3).order() == 1);
  CHECK_THROWS_AS(PermGroup::generate({cyc("(0 1)", 3), cyc("(1 2)", 3)}, 3, 5),
                  OrderBoundExceeded);
  CHECK_THROWS_AS(PermGroup::generate({cyc("(0 1)", 2)}, 3), DegreeMismatch);
}

TEST_CASE("generation does not depend on generator order") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const int degree = 4 + static_cast<int>(rng() % 4);
    auto pool = all_perms(degree);
    std::vector<Permutation> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(pool[rng() % pool.size()]);
    auto g1 = PermGroup::generate(gens, degree);
    std::reverse(gens.begin(), gens.end());
    auto g2 = PermGroup::generate(gens, degree);
    CHECK(same_element_set(g1, g2));
    CHECK(g1.elements() == g2.elements()); // even the listing order agrees
  }
}

TEST_CASE("orbits and transitivity") {
  const auto trivial = PermGroup::generate({}, 3);
  CHECK(trivial.orbits().size() == 3);
  CHECK_FALSE(trivial.is_transitive());

  const auto s3 = PermGroup::generate({cyc("(0 1)", 3), cyc("(1 2)", 3)}, 3);
  CHECK(s3.is_transitive());

  const auto g = PermGroup::generate({cyc("(0 1)", 4)}, 4);
  CHECK(g.orbits() == std::vector<std::vector<int>>{{0, 1}, {2}, {3}});
}

TEST_CASE("stabilizer, center, cosets") {
  const auto s3 = PermGroup::generate({cyc("(0 1)", 3), cyc("(1 2)", 3)}, 3);
  const auto stab = s3.stabilizer(0);
  CHECK(stab.order() == 2);
  CHECK(stab.contains(cyc("(1 2)", 3)));
  CHECK(verify_closure(stab));
  CHECK(s3.center().order() == 1);

  const auto h = PermGroup::generate({cyc("(1 2)", 3)}, 3);
  const auto cosets = right_cosets(s3, h);
  CHECK(cosets.size() == 3);
  // partition: disjoint classes of size |H| covering G
  std::set<int> seen;
  for (const auto &c : cosets) {
    CHECK(c.members.size() == 2);
    CHECK(c.rep == c.members.front());
    for (int m : c.members) CHECK(seen.insert(m).second);
  }
  CHECK(static_cast<long>(seen.size()) == s3.order());

  const auto wrong = PermGroup::generate({cyc("(0 1)(2 3)", 4)}, 4);
  CHECK_THROWS_AS(right_cosets(s3, wrong), NotSubgroup);
}

TEST_CASE("orbit-stabilizer across small groups") {
  std::vector<PermGroup> corpus;
  corpus.push_back(PermGroup::generate({cyc("(0 1)", 3), cyc("(1 2)", 3)}, 3));
  corpus.push_back(PermGroup::generate({cyc("(0 1 2 3)", 4)}, 4));
  corpus.push_back(PermGroup::generate({cyc("(0 1 2 3 4)", 5), cyc("(1 4)(2 3)", 5)}, 5));
  for (const auto &g : corpus)
    for (int x = 0; x < g.degree(); ++x)
      CHECK(static_cast<long>(g.orbit(x).size()) * g.stabilizer(x).order() ==
            g.order());
}

TEST_CASE("parity is multiplicative and transposition counts are subadditive") {
  std::mt19937_64 rng(11);
  auto pool = all_perms(6);
  for (int trial = 0; trial < 200; ++trial) {
    const auto &a = pool[rng() % pool.size()];
    const auto &b = pool[rng() % pool.size()];
    const auto ab = compose(a, b);
    CHECK(ab.min_transpositions() <=
          a.min_transpositions() + b.min_transpositions());
    CHECK((ab.min_transpositions() % 2) ==
          (a.min_transpositions() + b.min_transpositions()) % 2);
  }
}

TEST_CASE("cayley tables validate and classify") {
  const auto groups = groups_up_to_order_12();
  CHECK(groups.size() == 24);
  int order_counts[13] = {0};
  for (const auto &[name, g] : groups) {
    CHECK(g.order() <= 12);
    ++order_counts[g.order()];
    // inverse and identity behave
    for (int a = 0; a < g.order(); ++a) {
      CHECK(g.mul(a, g.inv(a)) == g.id());
      CHECK(g.mul(g.id(), a) == a);
    }
  }
  const int expected[13] = {0, 1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5};
  for (int n = 1; n <= 12; ++n) CHECK(order_counts[n] == expected[n]);

  CHECK_THROWS_AS(FiniteGroup::validate({{0, 1}, {1, 1}}), InvalidSpec);
}

TEST_CASE("abelian catalogue by invariant factors") {
  const auto abelians = abelian_groups_up_to(16);
  CHECK(abelians.size() == 25);
  for (const auto &[name, g] : abelians) CHECK(g.is_abelian());
}

TEST_CASE("regular representation") {
  const auto z3 = regular_representation(cyclic_group(3));
  CHECK(z3.order() == 3);
  CHECK(z3.degree() == 3);
  CHECK(regular_representation(trivial_group()).order() == 1);
  const auto s3 = regular_representation(symmetric_group_table(3));
  CHECK(s3.order() == 6);
  CHECK(s3.degree() == 6);
  // round trip through the Cayley table preserves structure
  const auto back = to_cayley(z3);
  CHECK(back.order() == 3);
  CHECK(back.is_abelian());
}
