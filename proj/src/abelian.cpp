#include "pfq/abelian.hpp"

#include <algorithm>

#include "pfq/errors.hpp"
#include "pfq/inner.hpp"

namespace pfq {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>> &rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != c)
      throw InvalidSpec("matrix rows have unequal lengths");
    for (int j = 0; j < c; ++j)
      m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
  }
  return m;
}

IntMatrix multiply(const IntMatrix &a, const IntMatrix &b) {
  if (a.cols() != b.rows()) throw InvalidSpec("matrix shape mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const BigInt &aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j) out.at(i, j) += aik * b.at(k, j);
    }
  return out;
}

BigInt determinant(const IntMatrix &m) {
  if (m.rows() != m.cols()) throw InvalidSpec("determinant needs a square matrix");
  const int n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  BigInt sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k) == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (a.at(i, k) != 0) { swap_row = i; break; }
      if (swap_row < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(swap_row, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

namespace {

struct SmithWork {
  IntMatrix s, u, v, u_inv, v_inv;

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < s.cols(); ++c) std::swap(s.at(i, c), s.at(j, c));
    for (int c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
    for (int r = 0; r < u_inv.rows(); ++r) std::swap(u_inv.at(r, i), u_inv.at(r, j));
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < s.rows(); ++r) std::swap(s.at(r, i), s.at(r, j));
    for (int r = 0; r < v.rows(); ++r) std::swap(v.at(r, i), v.at(r, j));
    for (int c = 0; c < v_inv.cols(); ++c) std::swap(v_inv.at(i, c), v_inv.at(j, c));
  }
  // row i -= q * row j
  void add_row(int i, int j, const BigInt &q) {
    if (q == 0) return;
    for (int c = 0; c < s.cols(); ++c) s.at(i, c) -= q * s.at(j, c);
    for (int c = 0; c < u.cols(); ++c) u.at(i, c) -= q * u.at(j, c);
    for (int r = 0; r < u_inv.rows(); ++r) u_inv.at(r, j) += q * u_inv.at(r, i);
  }
  // col i -= q * col j
  void add_col(int i, int j, const BigInt &q) {
    if (q == 0) return;
    for (int r = 0; r < s.rows(); ++r) s.at(r, i) -= q * s.at(r, j);
    for (int r = 0; r < v.rows(); ++r) v.at(r, i) -= q * v.at(r, j);
    for (int c = 0; c < v_inv.cols(); ++c) v_inv.at(j, c) += q * v_inv.at(i, c);
  }
  void negate_row(int i) {
    for (int c = 0; c < s.cols(); ++c) s.at(i, c) = -s.at(i, c);
    for (int c = 0; c < u.cols(); ++c) u.at(i, c) = -u.at(i, c);
    for (int r = 0; r < u_inv.rows(); ++r) u_inv.at(r, i) = -u_inv.at(r, i);
  }
};

} // namespace

SmithResult smith_normal_form(const IntMatrix &m) {
  const int rows = m.rows(), cols = m.cols();
  SmithWork w{m, IntMatrix::identity(rows), IntMatrix::identity(cols),
              IntMatrix::identity(rows), IntMatrix::identity(cols)};

  const int steps = std::min(rows, cols);
  for (int t = 0; t < steps; ++t) {
    for (;;) {
      // deterministic pivot: least absolute nonzero, ties by position
      int pr = -1, pc = -1;
      BigInt best = 0;
      for (int i = t; i < rows; ++i)
        for (int j = t; j < cols; ++j) {
          const BigInt &x = w.s.at(i, j);
          if (x == 0) continue;
          BigInt ax = abs(x);
          if (pr < 0 || ax < best) { best = std::move(ax); pr = i; pc = j; }
        }
      if (pr < 0) { pr = -1; break; } // submatrix is zero
      w.swap_rows(t, pr);
      w.swap_cols(t, pc);
      if (w.s.at(t, t) < 0) w.negate_row(t);

      bool reduced = true;
      for (int i = t + 1; i < rows; ++i) {
        if (w.s.at(i, t) == 0) continue;
        BigInt q = w.s.at(i, t) / w.s.at(t, t);
        w.add_row(i, t, q);
        if (w.s.at(i, t) != 0) reduced = false;
      }
      for (int j = t + 1; j < cols; ++j) {
        if (w.s.at(t, j) == 0) continue;
        BigInt q = w.s.at(t, j) / w.s.at(t, t);
        w.add_col(j, t, q);
        if (w.s.at(t, j) != 0) reduced = false;
      }
      if (!reduced) continue;

      // pivot must divide the rest of the submatrix
      int bad_r = -1, bad_c = -1;
      for (int i = t + 1; i < rows && bad_r < 0; ++i)
        for (int j = t + 1; j < cols; ++j)
          if (w.s.at(i, j) % w.s.at(t, t) != 0) { bad_r = i; bad_c = j; break; }
      if (bad_r < 0) break;
      // pull the offending column into column t and loop
      w.add_col(t, bad_c, BigInt(-1));
    }
    if (w.s.at(t, t) == 0) break;
  }

  return SmithResult{std::move(w.u), std::move(w.s), std::move(w.v),
                     std::move(w.u_inv), std::move(w.v_inv)};
}

std::vector<BigInt> SmithResult::invariant_factors() const {
  std::vector<BigInt> out;
  const int k = std::min(s.rows(), s.cols());
  for (int i = 0; i < k; ++i)
    if (s.at(i, i) != 0) out.push_back(s.at(i, i));
  return out;
}

std::string FGAbelianGroup::to_string() const {
  std::vector<std::string> parts;
  if (free_rank == 1) parts.push_back("Z");
  else if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
  for (const auto &d : torsion) parts.push_back("Z/" + d.str());
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) out += " x " + parts[i];
  return out;
}

FGAbelianGroup cokernel(const IntMatrix &relations) {
  SmithResult snf = smith_normal_form(relations);
  FGAbelianGroup out;
  auto factors = snf.invariant_factors();
  out.free_rank = relations.cols() - static_cast<int>(factors.size());
  for (auto &d : factors)
    if (d >= 2) out.torsion.push_back(std::move(d));
  return out;
}

IntMatrix adtak_relations(const FiniteQuandle &kei) {
  const int n = kei.size();
  IntMatrix rel(n * n, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int r = x * n + y;
      rel.at(r, x) += 1;
      rel.at(r, kei.op(x, y)) += 1;
      rel.at(r, y) -= 2;
    }
  return rel;
}

FGAbelianGroup adtak(const FiniteQuandle &kei) {
  if (!kei.is_kei())
    throw NotKei("the construction needs an involutory quandle");
  return cokernel(adtak_relations(kei));
}

void verify_augmented(const AugmentedQuandle &a) {
  const int n = a.q.size();
  const int m = a.g.order();
  if (static_cast<int>(a.action.size()) != n ||
      static_cast<int>(a.aug.size()) != n)
    throw InvalidSpec("augmented quandle tables have wrong shape");
  for (const auto &row : a.action)
    if (static_cast<int>(row.size()) != m)
      throw InvalidSpec("action table has wrong shape");
  for (int v : a.aug)
    if (v < 0 || v >= m) throw InvalidSpec("augmentation index out of range");

  auto act = [&](int x, int g) { return a.action[static_cast<size_t>(x)][static_cast<size_t>(g)]; };

  // right action: identity acts trivially, composition law holds
  for (int x = 0; x < n; ++x)
    if (act(x, a.g.id()) != x)
      throw AugmentationFailure(AugCheck::Action,
                                "identity moves element " + std::to_string(x));
  for (int x = 0; x < n; ++x)
    for (int g = 0; g < m; ++g)
      for (int h = 0; h < m; ++h)
        if (act(x, a.g.mul(g, h)) != act(act(x, g), h))
          throw AugmentationFailure(
              AugCheck::Action, "action fails composition at (x=" +
                                    std::to_string(x) + ", g=" + std::to_string(g) +
                                    ", h=" + std::to_string(h) + ")");
  // each group element acts by a quandle automorphism
  for (int g = 0; g < m; ++g) {
    std::vector<int> im(static_cast<size_t>(n));
    std::vector<bool> hit(static_cast<size_t>(n), false);
    for (int x = 0; x < n; ++x) {
      im[static_cast<size_t>(x)] = act(x, g);
      if (hit[static_cast<size_t>(act(x, g))])
        throw AugmentationFailure(AugCheck::Action,
                                  "element " + std::to_string(g) +
                                      " does not act bijectively");
      hit[static_cast<size_t>(act(x, g))] = true;
    }
    if (!is_hom(a.q, a.q, im))
      throw AugmentationFailure(AugCheck::Action,
                                "element " + std::to_string(g) +
                                    " does not act by an automorphism");
  }

  // AQ1: q.|q| = q
  for (int x = 0; x < n; ++x)
    if (act(x, a.aug[static_cast<size_t>(x)]) != x)
      throw AugmentationFailure(AugCheck::AQ1,
                                "q.|q| != q at q=" + std::to_string(x));
  // AQ2: |q.g| = g^-1 |q| g
  for (int x = 0; x < n; ++x)
    for (int g = 0; g < m; ++g) {
      const int lhs = a.aug[static_cast<size_t>(act(x, g))];
      const int rhs = a.g.mul(a.g.mul(a.g.inv(g), a.aug[static_cast<size_t>(x)]), g);
      if (lhs != rhs)
        throw AugmentationFailure(AugCheck::AQ2,
                                  "|q.g| != g^-1|q|g at (q=" + std::to_string(x) +
                                      ", g=" + std::to_string(g) + ")");
    }
  // induced operation reproduces the carrier's table
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (act(x, a.aug[static_cast<size_t>(y)]) != a.q.op(x, y))
        throw AugmentationFailure(AugCheck::Operation,
                                  "x.|y| != x <| y at (x=" + std::to_string(x) +
                                      ", y=" + std::to_string(y) + ")");
}

AugmentedQuandle inn_augmentation(const FiniteQuandle &q, long order_bound) {
  PermGroup g = inn(q, order_bound);
  AugmentedQuandle out;
  out.q = q;
  out.g = to_cayley(g);
  out.action.assign(static_cast<size_t>(q.size()),
                    std::vector<int>(static_cast<size_t>(g.order())));
  for (int x = 0; x < q.size(); ++x)
    for (int i = 0; i < g.order(); ++i)
      out.action[static_cast<size_t>(x)][static_cast<size_t>(i)] = g.element(i)(x);
  out.aug.reserve(static_cast<size_t>(q.size()));
  for (int y = 0; y < q.size(); ++y)
    out.aug.push_back(*g.index_of(symmetry(q, y)));
  return out;
}

} // namespace pfq
