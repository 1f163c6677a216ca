#include "pfq/quandle.hpp"

#include <algorithm>

#include "pfq/errors.hpp"

namespace pfq {

FiniteQuandle FiniteQuandle::validate(const std::vector<std::vector<int>> &table,
                                      ExecMode mode) {
  const int n = static_cast<int>(table.size());
  std::vector<int> flat;
  flat.reserve(static_cast<size_t>(n) * static_cast<size_t>(n));
  for (const auto &row : table) {
    if (static_cast<int>(row.size()) != n)
      throw InvalidSpec("operation table is not square");
    for (int v : row) flat.push_back(v);
  }
  return validate_flat(std::move(flat), n, mode);
}

FiniteQuandle FiniteQuandle::from_trusted_flat(std::vector<int> flat, int n) {
  if (static_cast<int>(flat.size()) != n * n)
    throw InvalidSpec("operation table has wrong size");
  for (int v : flat)
    if (v < 0 || v >= n) throw InvalidSpec("table entry out of range");

  auto at = [&](int x, int y) { return flat[static_cast<size_t>(x * n + y)]; };

  // Q1: diagonal
  for (int x = 0; x < n; ++x)
    if (at(x, x) != x) throw AxiomViolation(Axiom::Q1, x, x);

  // Q2: every column is a bijection
  std::vector<int> inv(static_cast<size_t>(n) * static_cast<size_t>(n), -1);
  for (int y = 0; y < n; ++y) {
    std::vector<bool> hit(static_cast<size_t>(n), false);
    for (int x = 0; x < n; ++x) {
      const int t = at(x, y);
      if (hit[static_cast<size_t>(t)]) throw AxiomViolation(Axiom::Q2, x, y);
      hit[static_cast<size_t>(t)] = true;
      inv[static_cast<size_t>(t * n + y)] = x; // t <|-1 y = x
    }
  }

  FiniteQuandle q;
  q.n_ = n;
  q.op_ = std::move(flat);
  q.inv_ = std::move(inv);
  return q;
}

FiniteQuandle FiniteQuandle::validate_flat(std::vector<int> flat, int n,
                                           ExecMode mode) {
  FiniteQuandle q = from_trusted_flat(std::move(flat), n);
  if (auto w = kernels::distributivity_violation(q.op_, n, mode))
    throw AxiomViolation(Axiom::Q3, w->x, w->y, w->z);
  return q;
}

bool FiniteQuandle::is_kei() const {
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y)
      if (op(op(x, y), y) != x) return false;
  return true;
}

std::vector<std::vector<int>> FiniteQuandle::rows() const {
  std::vector<std::vector<int>> out(static_cast<size_t>(n_));
  for (int x = 0; x < n_; ++x) {
    out[static_cast<size_t>(x)].assign(op_.begin() + static_cast<long>(x) * n_,
                                       op_.begin() + static_cast<long>(x + 1) * n_);
  }
  return out;
}

std::vector<std::vector<int>> FiniteQuandle::rows_one_indexed() const {
  auto out = rows();
  for (auto &row : out)
    for (auto &v : row) ++v;
  return out;
}

bool is_hom(const FiniteQuandle &src, const FiniteQuandle &dst,
            std::span<const int> map) {
  if (static_cast<int>(map.size()) != src.size()) return false;
  for (int v : map)
    if (v < 0 || v >= dst.size()) return false;
  for (int x = 0; x < src.size(); ++x)
    for (int y = 0; y < src.size(); ++y)
      if (map[static_cast<size_t>(src.op(x, y))] !=
          dst.op(map[static_cast<size_t>(x)], map[static_cast<size_t>(y)]))
        return false;
  return true;
}

bool is_hom(const QuandleHom &h) { return is_hom(h.src, h.dst, h.map); }

FiniteQuandle trivial_quandle(int n) {
  if (n < 0) throw InvalidSpec("trivial quandle needs n >= 0");
  std::vector<int> flat(static_cast<size_t>(n) * static_cast<size_t>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) flat[static_cast<size_t>(x * n + y)] = x;
  return FiniteQuandle::validate_flat(std::move(flat), n);
}

FiniteQuandle tait_quandle() {
  return FiniteQuandle::validate({{0, 2, 1}, {2, 1, 0}, {1, 0, 2}});
}

FiniteQuandle conj_quandle(const FiniteGroup &g) {
  const int n = g.order();
  std::vector<int> flat(static_cast<size_t>(n) * static_cast<size_t>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      flat[static_cast<size_t>(x * n + y)] = g.conj(x, y);
  return FiniteQuandle::validate_flat(std::move(flat), n);
}

FiniteQuandle tak_quandle(const FiniteGroup &a) {
  if (!a.is_abelian())
    throw NotAbelian("takasaki quandle requires an abelian group");
  const int n = a.order();
  std::vector<int> flat(static_cast<size_t>(n) * static_cast<size_t>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      flat[static_cast<size_t>(x * n + y)] = a.mul(a.mul(y, y), a.inv(x));
  return FiniteQuandle::validate_flat(std::move(flat), n);
}

FiniteQuandle core_quandle(const FiniteGroup &g) {
  const int n = g.order();
  std::vector<int> flat(static_cast<size_t>(n) * static_cast<size_t>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      flat[static_cast<size_t>(x * n + y)] = g.mul(g.mul(y, g.inv(x)), y);
  return FiniteQuandle::validate_flat(std::move(flat), n);
}

FiniteQuandle product_quandle(const FiniteQuandle &q, const FiniteQuandle &s) {
  const int n = q.size() * s.size();
  std::vector<int> flat(static_cast<size_t>(n) * static_cast<size_t>(n));
  auto pack = [&](int a, int b) { return a * s.size() + b; };
  for (int a1 = 0; a1 < q.size(); ++a1)
    for (int b1 = 0; b1 < s.size(); ++b1)
      for (int a2 = 0; a2 < q.size(); ++a2)
        for (int b2 = 0; b2 < s.size(); ++b2)
          flat[static_cast<size_t>(pack(a1, b1) * n + pack(a2, b2))] =
              pack(q.op(a1, a2), s.op(b1, b2));
  // distributivity holds coordinatewise
  return FiniteQuandle::from_trusted_flat(std::move(flat), n);
}

FiniteQuandle disjoint_union_quandle(const FiniteQuandle &q, const FiniteQuandle &s) {
  const int n = q.size() + s.size();
  std::vector<int> flat(static_cast<size_t>(n) * static_cast<size_t>(n));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      int v;
      const bool xq = x < q.size(), yq = y < q.size();
      if (xq && yq) v = q.op(x, y);
      else if (!xq && !yq) v = q.size() + s.op(x - q.size(), y - q.size());
      else v = x; // cross terms act trivially
      flat[static_cast<size_t>(x * n + y)] = v;
    }
  }
  // distributivity holds within summands and cross terms are projections
  return FiniteQuandle::from_trusted_flat(std::move(flat), n);
}

FiniteQuandle davis_quotient(int n) {
  if (n < 1) throw InvalidSpec("davis quotient needs n >= 1");
  const int m = n + 2; // residues, then inf = n, s = n + 1
  std::vector<int> flat(static_cast<size_t>(m) * static_cast<size_t>(m));
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      flat[static_cast<size_t>(x * m + y)] =
          (x < n && y == n + 1) ? (x + 1) % n : x;
  return FiniteQuandle::validate_flat(std::move(flat), m);
}

Permutation symmetry(const FiniteQuandle &q, int y) {
  if (y < 0 || y >= q.size())
    throw IndexOutOfRange("symmetry base " + std::to_string(y) +
                          " out of range for quandle of size " +
                          std::to_string(q.size()));
  std::vector<int> im(static_cast<size_t>(q.size()));
  for (int x = 0; x < q.size(); ++x) im[static_cast<size_t>(x)] = q.op(x, y);
  return Permutation(std::move(im));
}

} // namespace pfq
