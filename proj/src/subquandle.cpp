#include "pfq/subquandle.hpp"

#include <algorithm>

#include "pfq/errors.hpp"

namespace pfq {

bool is_subquandle(const FiniteQuandle &q, const ElemSet &elems) {
  std::vector<bool> in(static_cast<size_t>(q.size()), false);
  for (int e : elems) {
    if (e < 0 || e >= q.size()) return false;
    in[static_cast<size_t>(e)] = true;
  }
  for (int x : elems)
    for (int y : elems)
      if (!in[static_cast<size_t>(q.op(x, y))] ||
          !in[static_cast<size_t>(q.inv_op(x, y))])
        return false;
  return true;
}

ElemSet generated_subquandle(const FiniteQuandle &q, const ElemSet &seed) {
  std::vector<bool> in(static_cast<size_t>(q.size()), false);
  std::vector<int> work;
  for (int e : seed) {
    if (e < 0 || e >= q.size())
      throw IndexOutOfRange("seed element " + std::to_string(e) +
                            " out of range");
    if (!in[static_cast<size_t>(e)]) {
      in[static_cast<size_t>(e)] = true;
      work.push_back(e);
    }
  }
  // worklist: close the new element against everything already present
  std::vector<int> members = work;
  while (!work.empty()) {
    const int x = work.back();
    work.pop_back();
    const size_t snapshot = members.size();
    for (size_t i = 0; i < snapshot; ++i) {
      const int y = members[i];
      for (int t : {q.op(x, y), q.inv_op(x, y), q.op(y, x), q.inv_op(y, x)}) {
        if (!in[static_cast<size_t>(t)]) {
          in[static_cast<size_t>(t)] = true;
          members.push_back(t);
          work.push_back(t);
        }
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<ElemSet> all_subquandles(const FiniteQuandle &q, int max_n) {
  if (q.size() > max_n)
    throw SizeBound("subquandle enumeration limited to size " +
                    std::to_string(max_n));
  std::vector<ElemSet> out;
  const unsigned limit = 1u << q.size();
  for (unsigned mask = 0; mask < limit; ++mask) {
    ElemSet elems;
    for (int i = 0; i < q.size(); ++i)
      if (mask & (1u << i)) elems.push_back(i);
    if (is_subquandle(q, elems)) out.push_back(std::move(elems));
  }
  std::sort(out.begin(), out.end(), [](const ElemSet &a, const ElemSet &b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

ElemSet meet(const ElemSet &a, const ElemSet &b) {
  ElemSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

ElemSet join(const FiniteQuandle &q, const ElemSet &a, const ElemSet &b) {
  ElemSet u;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
  return generated_subquandle(q, u);
}

std::optional<ElemSet> find_complement(const FiniteQuandle &q, const ElemSet &a,
                                       int max_n) {
  for (const auto &b : all_subquandles(q, max_n)) {
    if (!meet(a, b).empty()) continue;
    if (static_cast<int>(join(q, a, b).size()) == q.size()) return b;
  }
  return std::nullopt;
}

} // namespace pfq
