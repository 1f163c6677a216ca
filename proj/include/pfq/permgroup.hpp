#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "pfq/group.hpp"
#include "pfq/perm.hpp"

namespace pfq {

inline constexpr long kDefaultOrderBound = 200'000;

// A permutation group given by its exhaustive element list. No stabilizer
// chains: the element sets this project needs stay at desk scale, and a flat
// list gives deterministic iteration everywhere.
class PermGroup {
public:
  PermGroup() = default; // trivial group on zero points
  // Breadth-first closure of the generators. Elements are listed level by
  // level with each level sorted, so the order does not depend on the order
  // in which generators were supplied.
  static PermGroup generate(std::vector<Permutation> gens, int degree,
                            long order_bound = kDefaultOrderBound);
  // Wraps an explicit element list (must already be a group); keeps its order.
  static PermGroup from_elements(std::vector<Permutation> elems, int degree);

  int degree() const { return degree_; }
  long order() const { return static_cast<long>(elems_.size()); }
  const std::vector<Permutation> &elements() const { return elems_; }
  const std::vector<Permutation> &generators() const { return gens_; }
  const Permutation &element(int i) const { return elems_[static_cast<size_t>(i)]; }

  bool contains(const Permutation &p) const;
  std::optional<int> index_of(const Permutation &p) const;

  std::vector<int> orbit(int x) const;
  std::vector<std::vector<int>> orbits() const;
  bool is_transitive() const;

  PermGroup stabilizer(int x) const;
  PermGroup center() const;

private:
  void build_index();
  int degree_ = 0;
  std::vector<Permutation> gens_;
  std::vector<Permutation> elems_;
  std::unordered_map<Permutation, int, PermHash> index_;
};

bool is_subgroup(const PermGroup &h, const PermGroup &g);
bool same_element_set(const PermGroup &a, const PermGroup &b);
// Quadratic closure sweep, for tests; from_elements itself only runs the
// linear checks.
bool verify_closure(const PermGroup &g);

struct Coset {
  int rep;                  // index into the parent group's element list
  std::vector<int> members; // ascending indices into the parent's element list
};

// Right cosets Hg, ordered by least member; throws NotSubgroup.
std::vector<Coset> right_cosets(const PermGroup &g, const PermGroup &h);

// Right regular action x -> x*a of each group element on the element set.
// Element a of the table corresponds to elements()[a] of the result.
PermGroup regular_representation(const FiniteGroup &g);

// Cayley table over the group's element order; mul(i, j) = index of
// element(i) * element(j).
FiniteGroup to_cayley(const PermGroup &g);

} // namespace pfq
