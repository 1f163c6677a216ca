#pragma once

#include <string>
#include <vector>

#include "pfq/perm.hpp"

namespace pfq {

// Finite group as a validated Cayley table over element indices 0..n-1.
// mul(a, b) is "a then b" so that the right regular action x.g = mul(x, g)
// is a genuine right action.
class FiniteGroup {
public:
  FiniteGroup() = default; // trivial placeholder; use a builder
  static FiniteGroup validate(std::vector<std::vector<int>> table);
  // For tables produced by an associative construction (permutation closure,
  // direct products of validated groups): recomputes identity and inverses
  // but skips the O(n^3) associativity sweep.
  static FiniteGroup from_trusted_flat(std::vector<int> mul, int n);

  int order() const { return n_; }
  int id() const { return id_; }
  int mul(int a, int b) const { return mul_[static_cast<size_t>(a * n_ + b)]; }
  int inv(int a) const { return inv_[static_cast<size_t>(a)]; }
  int conj(int x, int g) const { return mul(mul(inv(g), x), g); }

  bool is_abelian() const;
  std::vector<int> center() const;

  friend bool operator==(const FiniteGroup &, const FiniteGroup &) = default;

private:
  int n_ = 0;
  int id_ = 0;
  std::vector<int> mul_; // row-major
  std::vector<int> inv_;
};

// Standard builders. Together these cover every group of order <= 12 up to
// isomorphism and all abelian groups by invariant factors.
FiniteGroup cyclic_group(int n);
FiniteGroup direct_product(const FiniteGroup &a, const FiniteGroup &b);
FiniteGroup dihedral_group(int n);    // order 2n, n >= 1
FiniteGroup dicyclic_group(int n);    // order 4n, n >= 1; n = 2 is Q8
FiniteGroup symmetric_group_table(int n);
FiniteGroup alternating_group_table(int n);
FiniteGroup trivial_group();

// Abelian group with the given invariant factors d1 | d2 | ... (each >= 1).
FiniteGroup abelian_group(const std::vector<int> &factors);

// Every group of order <= 12 up to isomorphism, with display names.
struct NamedGroup {
  std::string name;
  FiniteGroup group;
};
std::vector<NamedGroup> groups_up_to_order_12();

// Every abelian group of order in [1, max_order] up to isomorphism.
std::vector<NamedGroup> abelian_groups_up_to(int max_order);

} // namespace pfq
