// The OpenMP kernels against their serial references: identical witnesses,
// identical result sets.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pfq/group.hpp"
#include "pfq/kernels.hpp"
#include "pfq/quandle.hpp"
#include "pfq/suite.hpp"

using namespace pfq;
using namespace pfq::kernels;

TEST_CASE("distributivity scan: serial and parallel agree on the first witness") {
  std::mt19937_64 rng(23);
  for (const auto &[name, q] : corpus_quandles()) {
    const auto a = distributivity_violation(q.table(), q.size(), ExecMode::Serial);
    const auto b = distributivity_violation(q.table(), q.size(), ExecMode::Parallel);
    CHECK_FALSE(a.has_value());
    CHECK_FALSE(b.has_value());

    // corrupt a random cell and compare witnesses exactly
    if (q.size() < 2) continue;
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<int> flat(q.table().begin(), q.table().end());
      const int cell = static_cast<int>(rng() % flat.size());
      flat[static_cast<size_t>(cell)] =
          static_cast<int>(rng() % static_cast<uint64_t>(q.size()));
      const auto s = distributivity_violation(flat, q.size(), ExecMode::Serial);
      const auto p = distributivity_violation(flat, q.size(), ExecMode::Parallel);
      CHECK(s.has_value() == p.has_value());
      if (s && p) {
        CHECK(s->x == p->x);
        CHECK(s->y == p->y);
        CHECK(s->z == p->z);
      }
    }
  }
}

TEST_CASE("automorphism search: serial and parallel agree element for element") {
  for (const auto &[name, q] : corpus_quandles()) {
    if (q.size() > 6) continue;
    const auto s = automorphism_images(q.table(), q.size(), ExecMode::Serial);
    const auto p = automorphism_images(q.table(), q.size(), ExecMode::Parallel);
    CHECK(s == p);
    CHECK(!s.empty()); // identity at least
  }
}

TEST_CASE("table enumeration: modes and strategies agree") {
  for (int n = 1; n <= 4; ++n) {
    const auto serial = enumerate_tables(n, true, ExecMode::Serial);
    const auto parallel = enumerate_tables(n, true, ExecMode::Parallel);
    CHECK(serial == parallel);
    const auto brute_serial = enumerate_tables_bruteforce(n, true, ExecMode::Serial);
    const auto brute_parallel = enumerate_tables_bruteforce(n, true, ExecMode::Parallel);
    CHECK(brute_serial == brute_parallel);
    CHECK(serial == brute_serial);

    const auto all_search = enumerate_tables(n, false, ExecMode::Parallel);
    const auto all_brute = enumerate_tables_bruteforce(n, false, ExecMode::Serial);
    CHECK(all_search == all_brute);
  }
}

TEST_CASE("canonical forms are relabeling invariants") {
  std::mt19937_64 rng(29);
  const auto quandles = {tait_quandle(), trivial_quandle(4),
                         tak_quandle(cyclic_group(5)),
                         disjoint_union_quandle(tait_quandle(), trivial_quandle(1))};
  for (const auto &q : quandles) {
    const auto canon = canonical_table(q.table(), q.size());
    CHECK(canonical_table(canon, q.size()) == canon); // idempotent
    for (int trial = 0; trial < 10; ++trial) {
      // random relabeling
      std::vector<int> sigma(static_cast<size_t>(q.size()));
      for (int i = 0; i < q.size(); ++i) sigma[static_cast<size_t>(i)] = i;
      for (int i = q.size() - 1; i > 0; --i)
        std::swap(sigma[static_cast<size_t>(i)],
                  sigma[static_cast<size_t>(rng() % static_cast<uint64_t>(i + 1))]);
      std::vector<int> relabeled(static_cast<size_t>(q.size()) *
                                 static_cast<size_t>(q.size()));
      for (int x = 0; x < q.size(); ++x)
        for (int y = 0; y < q.size(); ++y)
          relabeled[static_cast<size_t>(sigma[static_cast<size_t>(x)] * q.size() +
                                        sigma[static_cast<size_t>(y)])] =
              sigma[static_cast<size_t>(q.op(x, y))];
      CHECK(canonical_table(relabeled, q.size()) == canon);
    }
  }
}
