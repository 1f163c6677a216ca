#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "pfq/abelian.hpp"
#include "pfq/errors.hpp"
#include "pfq/inner.hpp"
#include "pfq/quandle.hpp"

using namespace pfq;

namespace {

// Independent oracle: the product d_1...d_k of the invariant factors equals
// the gcd of all k x k minors.
BigInt minor_gcd(const IntMatrix &m, int k) {
  std::vector<int> rows(static_cast<size_t>(k)), cols(static_cast<size_t>(k));
  BigInt g = 0;
  std::vector<int> row_choice, col_choice;

  std::vector<int> ridx(static_cast<size_t>(m.rows()));
  std::iota(ridx.begin(), ridx.end(), 0);
  std::vector<int> cidx(static_cast<size_t>(m.cols()));
  std::iota(cidx.begin(), cidx.end(), 0);

  std::vector<int> rsel(static_cast<size_t>(k)), csel(static_cast<size_t>(k));
  std::function<void(int, int)> pick_cols = [&](int ci, int start) {
    if (ci == k) {
      IntMatrix sub(k, k);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
          sub.at(i, j) = m.at(rsel[static_cast<size_t>(i)], csel[static_cast<size_t>(j)]);
      BigInt d = determinant(sub);
      if (d < 0) d = -d;
      g = boost::multiprecision::gcd(g, d);
      return;
    }
    for (int c = start; c < m.cols(); ++c) {
      csel[static_cast<size_t>(ci)] = c;
      pick_cols(ci + 1, c + 1);
    }
  };
  std::function<void(int, int)> pick_rows = [&](int ri, int start) {
    if (ri == k) {
      pick_cols(0, 0);
      return;
    }
    for (int r = start; r < m.rows(); ++r) {
      rsel[static_cast<size_t>(ri)] = r;
      pick_rows(ri + 1, r + 1);
    }
  };
  pick_rows(0, 0);
  return g;
}

} // namespace

TEST_CASE("normal form of small matrices") {
  const auto id = smith_normal_form(IntMatrix::identity(2));
  CHECK(id.s == IntMatrix::identity(2));

  const auto row = smith_normal_form(IntMatrix::from_rows({{2, -2}}));
  CHECK(row.s.at(0, 0) == 2);
  CHECK(row.s.at(0, 1) == 0);

  const auto m = IntMatrix::from_rows({{2, 4}, {6, 8}});
  const auto r = smith_normal_form(m);
  CHECK(r.s.at(0, 0) == 2);
  CHECK(r.s.at(1, 1) == 4);
  CHECK(multiply(multiply(r.u, m), r.v) == r.s);
  CHECK(multiply(multiply(r.u_inv, r.s), r.v_inv) == m);
}

TEST_CASE("normal form invariants on random matrices, with the minor oracle") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 4);
    const int cols = 1 + static_cast<int>(rng() % 4);
    IntMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        m.at(i, j) = static_cast<long>(rng() % 21) - 10;

    const auto r = smith_normal_form(m);
    CHECK(multiply(multiply(r.u, m), r.v) == r.s);
    CHECK(multiply(multiply(r.u_inv, r.s), r.v_inv) == m);
    const BigInt du = determinant(r.u), dv = determinant(r.v);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));

    const auto d = r.invariant_factors();
    for (size_t i = 0; i + 1 < d.size(); ++i) CHECK(d[i + 1] % d[i] == 0);

    // determinantal divisors: prod of the first k factors = gcd of k-minors
    BigInt prod = 1;
    for (size_t k = 1; k <= d.size(); ++k) {
      prod *= d[k - 1];
      CHECK(minor_gcd(m, static_cast<int>(k)) == prod);
    }
    if (static_cast<int>(d.size()) < std::min(rows, cols))
      CHECK(minor_gcd(m, static_cast<int>(d.size()) + 1) == 0);
  }
}

TEST_CASE("abelianized kei invariants") {
  CHECK(adtak(trivial_quandle(1)).to_string() == "Z");
  CHECK(adtak(trivial_quandle(2)).to_string() == "Z x Z/2");
  CHECK(adtak(trivial_quandle(3)).to_string() == "Z x Z/2 x Z/2");
  CHECK(adtak(tak_quandle(cyclic_group(3))).to_string() == "Z x Z/3");

  // the conjugation quandle of the symmetric group is not involutory
  CHECK_FALSE(conj_quandle(symmetric_group_table(3)).is_kei());
  CHECK_THROWS_AS(adtak(conj_quandle(symmetric_group_table(3))), NotKei);
}

TEST_CASE("the invariant does not depend on the labeling") {
  const auto base = tak_quandle(cyclic_group(5));
  const auto value = adtak(base);
  // relabel by a rotation
  std::vector<int> sigma{2, 3, 4, 0, 1};
  std::vector<std::vector<int>> rows(5, std::vector<int>(5));
  for (int x = 0; x < 5; ++x)
    for (int y = 0; y < 5; ++y)
      rows[static_cast<size_t>(sigma[static_cast<size_t>(x)])]
          [static_cast<size_t>(sigma[static_cast<size_t>(y)])] =
              sigma[static_cast<size_t>(base.op(x, y))];
  CHECK(adtak(FiniteQuandle::validate(rows)) == value);
}

TEST_CASE("disjoint unions, frozen regression values") {
  // cross relations x + x - 2y tie the summands together, so the union's
  // group is not the direct sum of the parts; these are the computed values
  CHECK(adtak(disjoint_union_quandle(trivial_quandle(2),
                                     tak_quandle(cyclic_group(3))))
            .to_string() == "Z x Z/2 x Z/2");
  CHECK(adtak(disjoint_union_quandle(trivial_quandle(1), trivial_quandle(1)))
            .to_string() == "Z x Z/2");
  CHECK(adtak(disjoint_union_quandle(tait_quandle(), tait_quandle()))
            .to_string() == "Z x Z/2");
  CHECK(adtak(disjoint_union_quandle(tait_quandle(), trivial_quandle(1)))
            .to_string() == "Z x Z/2");
}

TEST_CASE("augmented quandle verification") {
  // natural augmentation through the inner group
  for (const auto &q : {tait_quandle(), trivial_quandle(3), davis_quotient(2),
                        tak_quandle(cyclic_group(5))})
    CHECK_NOTHROW(verify_augmented(inn_augmentation(q)));

  // trivial quandle, trivial group, constant augmentation
  AugmentedQuandle plain;
  plain.q = trivial_quandle(3);
  plain.g = trivial_group();
  plain.action = {{0}, {1}, {2}};
  plain.aug = {0, 0, 0};
  CHECK_NOTHROW(verify_augmented(plain));

  // identity augmentation on a nontrivial quandle misses the operation
  AugmentedQuandle broken = inn_augmentation(tait_quandle());
  const int id_index = broken.g.id();
  for (auto &v : broken.aug) v = id_index;
  CHECK_THROWS_AS(verify_augmented(broken), AugmentationFailure);
  try {
    verify_augmented(broken);
  } catch (const AugmentationFailure &e) {
    CHECK(e.which == AugCheck::Operation);
  }

  // a non-action is caught before the augmentation identities
  AugmentedQuandle skewed = plain;
  skewed.action = {{1}, {0}, {2}}; // identity element must act trivially
  CHECK_THROWS_AS(verify_augmented(skewed), AugmentationFailure);
}

TEST_CASE("matrix helpers") {
  CHECK(determinant(IntMatrix::identity(3)) == 1);
  CHECK(determinant(IntMatrix::from_rows({{2, 0}, {0, 3}})) == 6);
  CHECK(determinant(IntMatrix::from_rows({{1, 2}, {2, 4}})) == 0);
  CHECK_THROWS_AS(determinant(IntMatrix(2, 3)), InvalidSpec);
  CHECK_THROWS_AS(multiply(IntMatrix(2, 3), IntMatrix(2, 3)), InvalidSpec);
}
