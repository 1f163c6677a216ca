#include "pfq/kernels.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pfq/errors.hpp"

namespace pfq::kernels {

namespace {

inline int cell(std::span<const int> op, int n, int x, int y) {
  return op[static_cast<size_t>(x) * static_cast<size_t>(n) + static_cast<size_t>(y)];
}

// Least violating (y,z) pair for a fixed x, scanning in order.
std::optional<TripleWitness> row_violation(std::span<const int> op, int n, int x) {
  for (int y = 0; y < n; ++y) {
    const int xy = cell(op, n, x, y);
    for (int z = 0; z < n; ++z) {
      const int lhs = cell(op, n, xy, z);
      const int rhs = cell(op, n, cell(op, n, x, z), cell(op, n, y, z));
      if (lhs != rhs) return TripleWitness{x, y, z};
    }
  }
  return std::nullopt;
}

bool columns_act_transitively(std::span<const int> op, int n) {
  if (n <= 1) return true;
  // reachability of 0 under x -> x <| y and its inverse
  std::vector<bool> seen(static_cast<size_t>(n), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 1;
  // inverse edges: z -> x when op[x][y] == z for some y
  std::vector<int> inv_edge(static_cast<size_t>(n) * static_cast<size_t>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      inv_edge[static_cast<size_t>(cell(op, n, x, y)) * static_cast<size_t>(n) +
               static_cast<size_t>(y)] = x;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y = 0; y < n; ++y) {
      for (int t : {cell(op, n, x, y),
                    inv_edge[static_cast<size_t>(x) * static_cast<size_t>(n) +
                             static_cast<size_t>(y)]}) {
        if (!seen[static_cast<size_t>(t)]) {
          seen[static_cast<size_t>(t)] = true;
          ++reached;
          stack.push_back(t);
        }
      }
    }
  }
  return reached == n;
}

std::vector<std::vector<int>> column_candidates(int n, int fixed_point) {
  std::vector<int> rest;
  for (int i = 0; i < n; ++i)
    if (i != fixed_point) rest.push_back(i);
  std::vector<std::vector<int>> out;
  std::sort(rest.begin(), rest.end());
  do {
    std::vector<int> col(static_cast<size_t>(n));
    col[static_cast<size_t>(fixed_point)] = fixed_point;
    size_t k = 0;
    for (int i = 0; i < n; ++i)
      if (i != fixed_point) col[static_cast<size_t>(i)] = rest[k++];
    out.push_back(std::move(col));
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

// Q3 triples that become checkable once columns 0..c are assigned and that
// involve column c. x ranges over all rows.
bool check_new_triples(std::span<const int> op, int n, int c) {
  for (int y = 0; y <= c; ++y) {
    for (int z = 0; z <= c; ++z) {
      const int w = cell(op, n, y, z);
      if (w > c) continue;
      if (y != c && z != c && w != c) continue;
      for (int x = 0; x < n; ++x) {
        const int lhs = cell(op, n, cell(op, n, x, y), z);
        const int rhs = cell(op, n, cell(op, n, x, z), w);
        if (lhs != rhs) return false;
      }
    }
  }
  return true;
}

struct TableSearch {
  int n;
  bool connected_only;
  const std::vector<std::vector<std::vector<int>>> &candidates; // per column
  std::vector<int> op; // row-major scratch
  std::set<std::vector<int>> found;

  void place_column(int c, const std::vector<int> &col) {
    for (int x = 0; x < n; ++x)
      op[static_cast<size_t>(x) * static_cast<size_t>(n) + static_cast<size_t>(c)] =
          col[static_cast<size_t>(x)];
  }

  void rec(int c) {
    if (c == n) {
      if (!connected_only || columns_act_transitively(op, n))
        found.insert(canonical_table(op, n));
      return;
    }
    for (const auto &col : candidates[static_cast<size_t>(c)]) {
      place_column(c, col);
      if (check_new_triples(op, n, c)) rec(c + 1);
    }
  }
};

std::vector<std::vector<int>> merge_sorted(std::vector<std::set<std::vector<int>>> parts) {
  std::vector<std::vector<int>> all;
  for (auto &p : parts) all.insert(all.end(), p.begin(), p.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

} // namespace

std::optional<TripleWitness> distributivity_violation(std::span<const int> op,
                                                      int n, ExecMode mode) {
  if (mode == ExecMode::Serial) {
    for (int x = 0; x < n; ++x)
      if (auto w = row_violation(op, n, x)) return w;
    return std::nullopt;
  }
  std::vector<std::optional<TripleWitness>> per_row(static_cast<size_t>(n));
  int best = n;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) shared(best)
#endif
  for (int x = 0; x < n; ++x) {
    int b;
#ifdef _OPENMP
#pragma omp atomic read
#endif
    b = best;
    if (x > b) continue;
    auto w = row_violation(op, n, x);
    if (w) {
      per_row[static_cast<size_t>(x)] = w;
#ifdef _OPENMP
#pragma omp critical
#endif
      best = std::min(best, x);
    }
  }
  for (int x = 0; x < n; ++x)
    if (per_row[static_cast<size_t>(x)]) return per_row[static_cast<size_t>(x)];
  return std::nullopt;
}

namespace {

struct AutSearch {
  std::span<const int> op;
  int n;
  std::vector<int> img;
  std::vector<bool> used;
  std::vector<std::vector<int>> out;

  bool consistent(int k) {
    for (int i = 0; i <= k; ++i) {
      for (int j = 0; j <= k; ++j) {
        const int t = cell(op, n, i, j);
        if (i != k && j != k && t != k) continue;
        if (t > k) continue;
        if (cell(op, n, img[static_cast<size_t>(i)], img[static_cast<size_t>(j)]) !=
            img[static_cast<size_t>(t)])
          return false;
      }
    }
    return true;
  }

  void rec(int k) {
    if (k == n) {
      out.push_back(img);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[static_cast<size_t>(v)]) continue;
      img[static_cast<size_t>(k)] = v;
      used[static_cast<size_t>(v)] = true;
      if (consistent(k)) rec(k + 1);
      used[static_cast<size_t>(v)] = false;
    }
  }
};

} // namespace

std::vector<std::vector<int>> automorphism_images(std::span<const int> op,
                                                  int n, ExecMode mode) {
  if (n == 0) return {{}};
  if (mode == ExecMode::Serial) {
    AutSearch s{op, n, std::vector<int>(static_cast<size_t>(n), -1),
                std::vector<bool>(static_cast<size_t>(n), false), {}};
    s.rec(0);
    return s.out;
  }
  std::vector<std::vector<std::vector<int>>> per_branch(static_cast<size_t>(n));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
  for (int v0 = 0; v0 < n; ++v0) {
    AutSearch s{op, n, std::vector<int>(static_cast<size_t>(n), -1),
                std::vector<bool>(static_cast<size_t>(n), false), {}};
    s.img[0] = v0;
    s.used[static_cast<size_t>(v0)] = true;
    if (s.consistent(0)) s.rec(1);
    per_branch[static_cast<size_t>(v0)] = std::move(s.out);
  }
  std::vector<std::vector<int>> out;
  for (auto &b : per_branch) out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::vector<int> canonical_table(std::span<const int> op, int n) {
  if (n > 8) throw SizeBound("canonical form limited to tables of size <= 8");
  std::vector<int> sigma(static_cast<size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<int> best(op.begin(), op.end());
  std::vector<int> cur(static_cast<size_t>(n) * static_cast<size_t>(n));
  std::vector<int> inv(static_cast<size_t>(n));
  do {
    for (int i = 0; i < n; ++i) inv[static_cast<size_t>(sigma[static_cast<size_t>(i)])] = i;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        cur[static_cast<size_t>(x) * static_cast<size_t>(n) + static_cast<size_t>(y)] =
            sigma[static_cast<size_t>(
                cell(op, n, inv[static_cast<size_t>(x)], inv[static_cast<size_t>(y)]))];
    if (cur < best) best = cur;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return best;
}

std::vector<std::vector<int>> enumerate_tables(int n, bool connected_only,
                                               ExecMode mode) {
  if (n == 0) return connected_only ? std::vector<std::vector<int>>{}
                                    : std::vector<std::vector<int>>{{}};
  std::vector<std::vector<std::vector<int>>> candidates;
  candidates.reserve(static_cast<size_t>(n));
  for (int y = 0; y < n; ++y) candidates.push_back(column_candidates(n, y));

  const auto &first = candidates[0];
  std::vector<std::set<std::vector<int>>> parts(first.size());
  const bool parallel = mode == ExecMode::Parallel;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
#endif
  for (size_t b = 0; b < first.size(); ++b) {
    TableSearch s{n, connected_only, candidates,
                  std::vector<int>(static_cast<size_t>(n) * static_cast<size_t>(n), 0),
                  {}};
    s.place_column(0, first[b]);
    if (check_new_triples(s.op, n, 0)) s.rec(1);
    parts[b] = std::move(s.found);
  }
  (void)parallel;
  return merge_sorted(std::move(parts));
}

std::vector<std::vector<int>> enumerate_tables_bruteforce(int n,
                                                          bool connected_only,
                                                          ExecMode mode) {
  if (n == 0) return connected_only ? std::vector<std::vector<int>>{}
                                    : std::vector<std::vector<int>>{{}};
  std::vector<std::vector<std::vector<int>>> candidates;
  candidates.reserve(static_cast<size_t>(n));
  for (int y = 0; y < n; ++y) candidates.push_back(column_candidates(n, y));

  const auto &first = candidates[0];
  std::vector<std::set<std::vector<int>>> parts(first.size());
  const bool parallel = mode == ExecMode::Parallel;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
#endif
  for (size_t b = 0; b < first.size(); ++b) {
    std::vector<int> op(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
    auto place = [&](int c, const std::vector<int> &col) {
      for (int x = 0; x < n; ++x)
        op[static_cast<size_t>(x) * static_cast<size_t>(n) + static_cast<size_t>(c)] =
            col[static_cast<size_t>(x)];
    };
    place(0, first[b]);
    // odometer over the remaining columns
    std::vector<size_t> idx(static_cast<size_t>(n), 0);
    bool done = false;
    while (!done) {
      for (int c = 1; c < n; ++c) place(c, candidates[static_cast<size_t>(c)][idx[static_cast<size_t>(c)]]);
      bool ok = true;
      for (int x = 0; x < n && ok; ++x)
        ok = !row_violation(op, n, x).has_value();
      if (ok && (!connected_only || columns_act_transitively(op, n)))
        parts[b].insert(canonical_table(op, n));
      // increment
      int c = n - 1;
      for (; c >= 1; --c) {
        if (++idx[static_cast<size_t>(c)] < candidates[static_cast<size_t>(c)].size()) break;
        idx[static_cast<size_t>(c)] = 0;
      }
      done = c == 0;
      if (n == 1) done = true;
    }
  }
  (void)parallel;
  return merge_sorted(std::move(parts));
}

} // namespace pfq::kernels
