#include "pfq/iso.hpp"

#include <algorithm>
#include <map>

namespace pfq {

namespace {

// (orbit size of x, cycle type of S_x) - preserved by any isomorphism.
struct Profile {
  int orbit_size;
  std::vector<int> cycle_type;
  auto operator<=>(const Profile &) const = default;
};

std::vector<Profile> profiles(const FiniteQuandle &q) {
  const int n = q.size();
  // orbits by reachability under all symmetries and their inverses
  std::vector<int> orbit_id(static_cast<size_t>(n), -1);
  std::vector<int> orbit_size;
  for (int start = 0; start < n; ++start) {
    if (orbit_id[static_cast<size_t>(start)] >= 0) continue;
    const int id = static_cast<int>(orbit_size.size());
    std::vector<int> stack{start};
    orbit_id[static_cast<size_t>(start)] = id;
    int count = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y = 0; y < n; ++y) {
        for (int t : {q.op(x, y), q.inv_op(x, y)}) {
          if (orbit_id[static_cast<size_t>(t)] < 0) {
            orbit_id[static_cast<size_t>(t)] = id;
            ++count;
            stack.push_back(t);
          }
        }
      }
    }
    orbit_size.push_back(count);
  }
  std::vector<Profile> out(static_cast<size_t>(n));
  for (int x = 0; x < n; ++x) {
    Profile p;
    p.orbit_size = orbit_size[static_cast<size_t>(orbit_id[static_cast<size_t>(x)])];
    auto cycles = symmetry(q, x).cycles();
    for (const auto &c : cycles) p.cycle_type.push_back(static_cast<int>(c.size()));
    std::sort(p.cycle_type.begin(), p.cycle_type.end());
    out[static_cast<size_t>(x)] = std::move(p);
  }
  return out;
}

struct IsoSearch {
  const FiniteQuandle &q, &s;
  const std::vector<Profile> &pq, &ps;
  std::vector<int> img;
  std::vector<bool> used;

  bool consistent(int k) const {
    for (int i = 0; i <= k; ++i) {
      for (int j = 0; j <= k; ++j) {
        const int t = q.op(i, j);
        if (i != k && j != k && t != k) continue;
        if (t > k) continue;
        if (s.op(img[static_cast<size_t>(i)], img[static_cast<size_t>(j)]) !=
            img[static_cast<size_t>(t)])
          return false;
      }
    }
    return true;
  }

  bool rec(int k) {
    if (k == q.size()) return true;
    for (int v = 0; v < q.size(); ++v) {
      if (used[static_cast<size_t>(v)]) continue;
      if (pq[static_cast<size_t>(k)] != ps[static_cast<size_t>(v)]) continue;
      img[static_cast<size_t>(k)] = v;
      used[static_cast<size_t>(v)] = true;
      if (consistent(k) && rec(k + 1)) return true;
      used[static_cast<size_t>(v)] = false;
    }
    return false;
  }
};

} // namespace

std::optional<QuandleHom> find_isomorphism(const FiniteQuandle &q,
                                           const FiniteQuandle &s) {
  if (q.size() != s.size()) return std::nullopt;
  if (q.size() == 0) return QuandleHom{q, s, {}};
  const auto pq = profiles(q);
  const auto ps = profiles(s);
  // multiset comparison before any search
  std::map<Profile, int> count;
  for (const auto &p : pq) ++count[p];
  for (const auto &p : ps) --count[p];
  for (const auto &[p, c] : count)
    if (c != 0) return std::nullopt;

  IsoSearch search{q, s, pq, ps,
                   std::vector<int>(static_cast<size_t>(q.size()), -1),
                   std::vector<bool>(static_cast<size_t>(q.size()), false)};
  if (!search.rec(0)) return std::nullopt;
  return QuandleHom{q, s, std::move(search.img)};
}

bool are_isomorphic(const FiniteQuandle &q, const FiniteQuandle &s) {
  return find_isomorphism(q, s).has_value();
}

} // namespace pfq
