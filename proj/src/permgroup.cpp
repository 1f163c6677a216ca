#include "pfq/permgroup.hpp"

#include <algorithm>
#include <unordered_set>

#include "pfq/errors.hpp"

namespace pfq {

void PermGroup::build_index() {
  index_.clear();
  index_.reserve(elems_.size());
  for (size_t i = 0; i < elems_.size(); ++i)
    index_.emplace(elems_[i], static_cast<int>(i));
}

PermGroup PermGroup::generate(std::vector<Permutation> gens, int degree,
                              long order_bound) {
  for (const auto &g : gens)
    if (g.degree() != degree)
      throw DegreeMismatch("generator degree " + std::to_string(g.degree()) +
                           " does not match group degree " +
                           std::to_string(degree));
  PermGroup out;
  out.degree_ = degree;
  out.gens_ = std::move(gens);

  out.elems_.push_back(Permutation::identity(degree));
  out.index_.emplace(out.elems_[0], 0);
  size_t level_begin = 0;
  while (level_begin < out.elems_.size()) {
    const size_t level_end = out.elems_.size();
    std::unordered_set<Permutation, PermHash> fresh;
    for (size_t i = level_begin; i < level_end; ++i) {
      for (const auto &g : out.gens_) {
        Permutation h = compose(out.elems_[i], g);
        if (out.index_.find(h) == out.index_.end()) fresh.insert(std::move(h));
      }
    }
    std::vector<Permutation> next(fresh.begin(), fresh.end());
    std::sort(next.begin(), next.end());
    for (auto &h : next) {
      if (static_cast<long>(out.elems_.size()) >= order_bound)
        throw OrderBoundExceeded("group closure exceeds order bound " +
                                 std::to_string(order_bound));
      out.index_.emplace(h, static_cast<int>(out.elems_.size()));
      out.elems_.push_back(std::move(h));
    }
    level_begin = level_end;
  }
  return out;
}

PermGroup PermGroup::from_elements(std::vector<Permutation> elems, int degree) {
  PermGroup out;
  out.degree_ = degree;
  out.elems_ = std::move(elems);
  out.build_index();
  if (out.index_.size() != out.elems_.size())
    throw InvalidSpec("element list contains duplicates");
  bool has_id = false;
  for (const auto &e : out.elems_) {
    if (e.degree() != degree)
      throw DegreeMismatch("element degree does not match group degree");
    has_id = has_id || e.is_identity();
  }
  if (!has_id) throw InvalidSpec("element list lacks the identity");
  // Callers hand over sets that are groups by construction (stabilizers,
  // centers, hom images, automorphism sets); only the O(n) checks run here.
  // verify_closure does the quadratic sweep where a test wants it.
  for (const auto &a : out.elems_)
    if (out.index_.find(a.inverse()) == out.index_.end())
      throw InvalidSpec("element list not closed under inverse");
  out.gens_ = out.elems_;
  return out;
}

bool verify_closure(const PermGroup &g) {
  for (const auto &a : g.elements())
    for (const auto &b : g.elements())
      if (!g.contains(compose(a, b))) return false;
  return true;
}

bool PermGroup::contains(const Permutation &p) const {
  return index_.find(p) != index_.end();
}

std::optional<int> PermGroup::index_of(const Permutation &p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> PermGroup::orbit(int x) const {
  if (x < 0 || x >= degree_)
    throw IndexOutOfRange("orbit point out of range");
  std::vector<bool> seen(static_cast<size_t>(degree_), false);
  std::vector<int> out{x}, stack{x};
  seen[static_cast<size_t>(x)] = true;
  while (!stack.empty()) {
    int p = stack.back();
    stack.pop_back();
    for (const auto &g : gens_) {
      int q = g(p);
      if (!seen[static_cast<size_t>(q)]) {
        seen[static_cast<size_t>(q)] = true;
        out.push_back(q);
        stack.push_back(q);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> PermGroup::orbits() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> covered(static_cast<size_t>(degree_), false);
  for (int x = 0; x < degree_; ++x) {
    if (covered[static_cast<size_t>(x)]) continue;
    auto orb = orbit(x);
    for (int p : orb) covered[static_cast<size_t>(p)] = true;
    out.push_back(std::move(orb));
  }
  return out;
}

bool PermGroup::is_transitive() const {
  return degree_ > 0 && static_cast<int>(orbit(0).size()) == degree_;
}

PermGroup PermGroup::stabilizer(int x) const {
  if (x < 0 || x >= degree_)
    throw IndexOutOfRange("stabilizer point out of range");
  std::vector<Permutation> sub;
  for (const auto &e : elems_)
    if (e(x) == x) sub.push_back(e);
  return from_elements(std::move(sub), degree_);
}

PermGroup PermGroup::center() const {
  std::vector<Permutation> sub;
  for (const auto &e : elems_) {
    bool central = true;
    for (const auto &g : gens_)
      if (compose(e, g) != compose(g, e)) { central = false; break; }
    if (central) sub.push_back(e);
  }
  return from_elements(std::move(sub), degree_);
}

bool is_subgroup(const PermGroup &h, const PermGroup &g) {
  if (h.degree() != g.degree()) return false;
  for (const auto &e : h.elements())
    if (!g.contains(e)) return false;
  return true;
}

bool same_element_set(const PermGroup &a, const PermGroup &b) {
  return a.order() == b.order() && is_subgroup(a, b);
}

std::vector<Coset> right_cosets(const PermGroup &g, const PermGroup &h) {
  if (!is_subgroup(h, g))
    throw NotSubgroup("coset decomposition requires H <= G");
  std::vector<Coset> out;
  std::vector<bool> assigned(static_cast<size_t>(g.order()), false);
  for (int i = 0; i < g.order(); ++i) {
    if (assigned[static_cast<size_t>(i)]) continue;
    Coset c;
    c.rep = i;
    for (const auto &hh : h.elements()) {
      int j = *g.index_of(compose(hh, g.element(i)));
      if (!assigned[static_cast<size_t>(j)]) {
        assigned[static_cast<size_t>(j)] = true;
        c.members.push_back(j);
      }
    }
    std::sort(c.members.begin(), c.members.end());
    out.push_back(std::move(c));
  }
  return out;
}

PermGroup regular_representation(const FiniteGroup &g) {
  std::vector<Permutation> elems;
  elems.reserve(static_cast<size_t>(g.order()));
  for (int a = 0; a < g.order(); ++a) {
    std::vector<int> im(static_cast<size_t>(g.order()));
    for (int x = 0; x < g.order(); ++x) im[static_cast<size_t>(x)] = g.mul(x, a);
    elems.emplace_back(std::move(im));
  }
  return PermGroup::from_elements(std::move(elems), g.order());
}

FiniteGroup to_cayley(const PermGroup &g) {
  const int n = static_cast<int>(g.order());
  std::vector<int> mul(static_cast<size_t>(n) * static_cast<size_t>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      mul[static_cast<size_t>(a * n + b)] =
          *g.index_of(compose(g.element(a), g.element(b)));
  return FiniteGroup::from_trusted_flat(std::move(mul), n);
}

} // namespace pfq
