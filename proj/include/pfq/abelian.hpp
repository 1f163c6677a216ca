#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "pfq/group.hpp"
#include "pfq/permgroup.hpp"
#include "pfq/quandle.hpp"

namespace pfq {

using BigInt = boost::multiprecision::cpp_int;

// Dense matrix over arbitrary-precision integers. Intermediate entries of a
// normal-form reduction overflow 64 bits even for modest inputs.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols),
      a_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {}
  static IntMatrix identity(int n);
  static IntMatrix from_rows(const std::vector<std::vector<long long>> &rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  BigInt &at(int r, int c) { return a_[static_cast<size_t>(r * cols_ + c)]; }
  const BigInt &at(int r, int c) const { return a_[static_cast<size_t>(r * cols_ + c)]; }

  friend bool operator==(const IntMatrix &, const IntMatrix &) = default;

private:
  int rows_ = 0, cols_ = 0;
  std::vector<BigInt> a_;
};

IntMatrix multiply(const IntMatrix &a, const IntMatrix &b);
// Fraction-free Bareiss determinant.
BigInt determinant(const IntMatrix &m);

// u * m * v = s with u, v unimodular, s diagonal with d1 | d2 | ... and the
// inverse factors maintained alongside (u_inv * s * v_inv = m).
struct SmithResult {
  IntMatrix u, s, v;
  IntMatrix u_inv, v_inv;
  std::vector<BigInt> invariant_factors() const; // nonzero diagonal, in order
};

SmithResult smith_normal_form(const IntMatrix &m);

// Finitely generated abelian group in invariant-factor form.
struct FGAbelianGroup {
  int free_rank = 0;
  std::vector<BigInt> torsion; // each >= 2, divisibility chain
  std::string to_string() const; // "Z^r x Z/d1 x ... x Z/dt"
  friend bool operator==(const FGAbelianGroup &, const FGAbelianGroup &) = default;
};

// Cokernel of the matrix whose rows span the relation lattice in Z^cols.
FGAbelianGroup cokernel(const IntMatrix &relations);

// Left adjoint of the Takasaki construction on a finite kei: the free
// abelian group on the carrier modulo x + (x <| y) - 2y for all pairs.
FGAbelianGroup adtak(const FiniteQuandle &kei);
IntMatrix adtak_relations(const FiniteQuandle &kei);

// Augmented quandle: carrier with a right G-action (by table) and an
// augmentation map into G.
struct AugmentedQuandle {
  FiniteQuandle q;
  FiniteGroup g;
  std::vector<std::vector<int>> action; // action[x][gi] = x . g_i
  std::vector<int> aug;                 // aug[x] in 0..|G|-1
};

// The action axioms, both augmentation identities, and agreement of the
// induced operation x <| y = x.|y| with the carrier's own table. Throws
// AugmentationFailure with a witness.
void verify_augmented(const AugmentedQuandle &a);

// Natural augmentation through the inner group: G = Inn(Q) as a Cayley
// table, action by evaluation, |y| = S_y.
AugmentedQuandle inn_augmentation(const FiniteQuandle &q,
                                  long order_bound = kDefaultOrderBound);

} // namespace pfq
