#pragma once

#include <span>
#include <vector>

#include "pfq/group.hpp"
#include "pfq/kernels.hpp"
#include "pfq/perm.hpp"

namespace pfq {

// A finite quandle as a validated n x n operation table over 0..n-1.
// op(x, y) = x <| y. The inverse table is materialized at validation time:
// columns are permutations, so inversion per column is a transposition of
// that column's index map.
class FiniteQuandle {
public:
  FiniteQuandle() = default; // the empty quandle
  static FiniteQuandle validate(const std::vector<std::vector<int>> &table,
                                ExecMode mode = ExecMode::Parallel);
  static FiniteQuandle validate_flat(std::vector<int> flat, int n,
                                     ExecMode mode = ExecMode::Parallel);
  // For tables whose distributivity is inherited from validated inputs
  // (products, disjoint unions): runs the quadratic checks and builds the
  // inverse table but skips the cubic scan.
  static FiniteQuandle from_trusted_flat(std::vector<int> flat, int n);

  int size() const { return n_; }
  int op(int x, int y) const { return op_[static_cast<size_t>(x * n_ + y)]; }
  int inv_op(int x, int y) const { return inv_[static_cast<size_t>(x * n_ + y)]; }
  std::span<const int> table() const { return op_; }

  bool is_kei() const; // every column an involution
  std::vector<std::vector<int>> rows() const;
  // The same table with every entry and index shifted by one, for display.
  std::vector<std::vector<int>> rows_one_indexed() const;

  friend bool operator==(const FiniteQuandle &, const FiniteQuandle &) = default;
  friend auto operator<=>(const FiniteQuandle &a, const FiniteQuandle &b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.op_ <=> b.op_;
  }

private:
  int n_ = 0;
  std::vector<int> op_;
  std::vector<int> inv_;
};

// A quandle map f: src -> dst with f(x <| y) = f(x) <| f(y).
struct QuandleHom {
  FiniteQuandle src;
  FiniteQuandle dst;
  std::vector<int> map;
};

bool is_hom(const FiniteQuandle &src, const FiniteQuandle &dst,
            std::span<const int> map);
bool is_hom(const QuandleHom &h);

FiniteQuandle trivial_quandle(int n);
FiniteQuandle tait_quandle();

// x <| y = y^-1 x y
FiniteQuandle conj_quandle(const FiniteGroup &g);
// x <| y = 2y - x on an abelian group
FiniteQuandle tak_quandle(const FiniteGroup &a);
// x <| y = y x^-1 y; restricts to tak on abelian groups
FiniteQuandle core_quandle(const FiniteGroup &g);

// carrier Q x S with row-major pairing (q, s) -> q*|S| + s
FiniteQuandle product_quandle(const FiniteQuandle &q, const FiniteQuandle &s);
// carrier Q then S; cross terms act trivially
FiniteQuandle disjoint_union_quandle(const FiniteQuandle &q, const FiniteQuandle &s);

// Carrier Z/n ++ {inf} ++ {s} (indices 0..n-1, n, n+1). Everything acts
// trivially except residues under s: [x] <| s = [x+1].
FiniteQuandle davis_quotient(int n);

// S_y: x -> x <| y, a permutation of the carrier.
Permutation symmetry(const FiniteQuandle &q, int y);

} // namespace pfq
