#include "pfq/group.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "pfq/errors.hpp"

namespace pfq {

FiniteGroup FiniteGroup::validate(std::vector<std::vector<int>> table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw InvalidSpec("group table must be nonempty");
  std::vector<int> flat;
  flat.reserve(static_cast<size_t>(n) * static_cast<size_t>(n));
  for (const auto &row : table) {
    if (static_cast<int>(row.size()) != n)
      throw InvalidSpec("group table is not square");
    for (int v : row) {
      if (v < 0 || v >= n) throw InvalidSpec("group table entry out of range");
      flat.push_back(v);
    }
  }
  auto mul = [&](int a, int b) { return flat[static_cast<size_t>(a * n + b)]; };

  // two-sided identity
  int id = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      ok = mul(e, a) == a && mul(a, e) == a;
    if (ok) { id = e; break; }
  }
  if (id < 0) throw InvalidSpec("group table has no identity");

  std::vector<int> inv(static_cast<size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (mul(a, b) == id && mul(b, a) == id) { inv[static_cast<size_t>(a)] = b; break; }
    }
    if (inv[static_cast<size_t>(a)] < 0)
      throw InvalidSpec("element " + std::to_string(a) + " has no inverse");
  }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw InvalidSpec("associativity fails at (" + std::to_string(a) +
                            "," + std::to_string(b) + "," + std::to_string(c) + ")");

  FiniteGroup g;
  g.n_ = n;
  g.id_ = id;
  g.mul_ = std::move(flat);
  g.inv_ = std::move(inv);
  return g;
}

FiniteGroup FiniteGroup::from_trusted_flat(std::vector<int> mul, int n) {
  if (static_cast<int>(mul.size()) != n * n || n <= 0)
    throw InvalidSpec("trusted group table has wrong size");
  auto at = [&](int a, int b) { return mul[static_cast<size_t>(a * n + b)]; };
  int id = -1;
  for (int e = 0; e < n && id < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = at(e, a) == a && at(a, e) == a;
    if (ok) id = e;
  }
  if (id < 0) throw InvalidSpec("trusted group table has no identity");
  std::vector<int> inv(static_cast<size_t>(n), -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (at(a, b) == id && at(b, a) == id) { inv[static_cast<size_t>(a)] = b; break; }
  for (int a = 0; a < n; ++a)
    if (inv[static_cast<size_t>(a)] < 0)
      throw InvalidSpec("trusted group table lacks an inverse");
  FiniteGroup g;
  g.n_ = n;
  g.id_ = id;
  g.mul_ = std::move(mul);
  g.inv_ = std::move(inv);
  return g;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<int> FiniteGroup::center() const {
  std::vector<int> out;
  for (int z = 0; z < n_; ++z) {
    bool central = true;
    for (int a = 0; a < n_ && central; ++a)
      central = mul(z, a) == mul(a, z);
    if (central) out.push_back(z);
  }
  return out;
}

FiniteGroup cyclic_group(int n) {
  if (n < 1) throw InvalidSpec("cyclic group needs n >= 1");
  std::vector<std::vector<int>> t(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      t[static_cast<size_t>(a)][static_cast<size_t>(b)] = (a + b) % n;
  return FiniteGroup::validate(std::move(t));
}

FiniteGroup trivial_group() { return cyclic_group(1); }

FiniteGroup direct_product(const FiniteGroup &a, const FiniteGroup &b) {
  const int n = a.order() * b.order();
  std::vector<std::vector<int>> t(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  auto pack = [&](int x, int y) { return x * b.order() + y; };
  for (int x1 = 0; x1 < a.order(); ++x1)
    for (int y1 = 0; y1 < b.order(); ++y1)
      for (int x2 = 0; x2 < a.order(); ++x2)
        for (int y2 = 0; y2 < b.order(); ++y2)
          t[static_cast<size_t>(pack(x1, y1))][static_cast<size_t>(pack(x2, y2))] =
              pack(a.mul(x1, x2), b.mul(y1, y2));
  return FiniteGroup::validate(std::move(t));
}

// elements r^i s^j, index i + n*j
FiniteGroup dihedral_group(int n) {
  if (n < 1) throw InvalidSpec("dihedral group needs n >= 1");
  const int m = 2 * n;
  std::vector<std::vector<int>> t(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m)));
  auto pack = [&](int i, int j) { return ((i % n + n) % n) + n * (j & 1); };
  for (int i1 = 0; i1 < n; ++i1)
    for (int j1 = 0; j1 < 2; ++j1)
      for (int i2 = 0; i2 < n; ++i2)
        for (int j2 = 0; j2 < 2; ++j2) {
          // (r^i1 s^j1)(r^i2 s^j2) = r^(i1 + i2*(-1)^j1) s^(j1+j2)
          int i = j1 ? i1 - i2 : i1 + i2;
          t[static_cast<size_t>(pack(i1, j1))][static_cast<size_t>(pack(i2, j2))] =
              pack(i, j1 + j2);
        }
  return FiniteGroup::validate(std::move(t));
}

// elements a^i b^j with a^(2n) = 1, b^2 = a^n, b^-1 a b = a^-1; index i + 2n*j
FiniteGroup dicyclic_group(int n) {
  if (n < 1) throw InvalidSpec("dicyclic group needs n >= 1");
  const int two_n = 2 * n;
  const int m = 4 * n;
  std::vector<std::vector<int>> t(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m)));
  auto pack = [&](int i, int j) { return ((i % two_n + two_n) % two_n) + two_n * (j & 1); };
  for (int i1 = 0; i1 < two_n; ++i1)
    for (int j1 = 0; j1 < 2; ++j1)
      for (int i2 = 0; i2 < two_n; ++i2)
        for (int j2 = 0; j2 < 2; ++j2) {
          // (a^i1 b^j1)(a^i2 b^j2): move b^j1 past a^i2, then fold b^2 = a^n.
          int i = j1 ? i1 - i2 : i1 + i2;
          int j = j1 + j2;
          if (j == 2) { i += n; j = 0; }
          t[static_cast<size_t>(pack(i1, j1))][static_cast<size_t>(pack(i2, j2))] =
              pack(i, j);
        }
  return FiniteGroup::validate(std::move(t));
}

namespace {

FiniteGroup group_from_perms(std::vector<Permutation> elems) {
  std::sort(elems.begin(), elems.end());
  std::map<Permutation, int> index;
  for (size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);
  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> t(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      t[static_cast<size_t>(a)][static_cast<size_t>(b)] =
          index.at(compose(elems[static_cast<size_t>(a)], elems[static_cast<size_t>(b)]));
  return FiniteGroup::validate(std::move(t));
}

} // namespace

FiniteGroup symmetric_group_table(int n) {
  if (n < 1) throw InvalidSpec("symmetric group needs n >= 1");
  std::vector<int> im(static_cast<size_t>(n));
  std::iota(im.begin(), im.end(), 0);
  std::vector<Permutation> elems;
  do {
    elems.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return group_from_perms(std::move(elems));
}

FiniteGroup alternating_group_table(int n) {
  if (n < 1) throw InvalidSpec("alternating group needs n >= 1");
  std::vector<int> im(static_cast<size_t>(n));
  std::iota(im.begin(), im.end(), 0);
  std::vector<Permutation> elems;
  do {
    Permutation p(im);
    if (p.is_even()) elems.push_back(std::move(p));
  } while (std::next_permutation(im.begin(), im.end()));
  return group_from_perms(std::move(elems));
}

FiniteGroup abelian_group(const std::vector<int> &factors) {
  FiniteGroup g = trivial_group();
  for (int d : factors) g = direct_product(g, cyclic_group(d));
  return g;
}

std::vector<NamedGroup> groups_up_to_order_12() {
  std::vector<NamedGroup> out;
  auto add = [&](std::string name, FiniteGroup g) {
    out.push_back({std::move(name), std::move(g)});
  };
  add("C1", cyclic_group(1));
  add("C2", cyclic_group(2));
  add("C3", cyclic_group(3));
  add("C4", cyclic_group(4));
  add("C2xC2", abelian_group({2, 2}));
  add("C5", cyclic_group(5));
  add("C6", cyclic_group(6));
  add("S3", symmetric_group_table(3));
  add("C7", cyclic_group(7));
  add("C8", cyclic_group(8));
  add("C4xC2", abelian_group({2, 4}));
  add("C2xC2xC2", abelian_group({2, 2, 2}));
  add("D4", dihedral_group(4));
  add("Q8", dicyclic_group(2));
  add("C9", cyclic_group(9));
  add("C3xC3", abelian_group({3, 3}));
  add("C10", cyclic_group(10));
  add("D5", dihedral_group(5));
  add("C11", cyclic_group(11));
  add("C12", cyclic_group(12));
  add("C6xC2", abelian_group({2, 6}));
  add("D6", dihedral_group(6));
  add("A4", alternating_group_table(4));
  add("Dic3", dicyclic_group(3));
  return out;
}

std::vector<NamedGroup> abelian_groups_up_to(int max_order) {
  std::vector<NamedGroup> out;
  // Invariant factor chains d1 | d2 | ... | dk with product <= max_order.
  std::vector<int> chain;
  auto emit = [&] {
    std::string name;
    for (size_t i = 0; i < chain.size(); ++i) {
      if (i) name += "x";
      name += "C" + std::to_string(chain[i]);
    }
    if (chain.empty()) name = "C1";
    out.push_back({name, abelian_group(chain)});
  };
  std::function<void(int, int)> rec = [&](int min_d, int budget) {
    emit();
    for (int d = std::max(2, min_d); d <= budget; ++d) {
      if (!chain.empty() && d % chain.back() != 0) continue;
      chain.push_back(d);
      rec(d, budget / d);
      chain.pop_back();
    }
  };
  rec(2, max_order);
  std::sort(out.begin(), out.end(), [](const NamedGroup &a, const NamedGroup &b) {
    if (a.group.order() != b.group.order()) return a.group.order() < b.group.order();
    return a.name < b.name;
  });
  return out;
}

} // namespace pfq
