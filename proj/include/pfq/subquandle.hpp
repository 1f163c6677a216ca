#pragma once

#include <optional>
#include <vector>

#include "pfq/quandle.hpp"

namespace pfq {

// Subquandles are sorted duplicate-free element sets closed under the
// operation and its inverse. The empty set is the lattice bottom.
using ElemSet = std::vector<int>;

bool is_subquandle(const FiniteQuandle &q, const ElemSet &elems);

// Least subquandle containing seed: worklist closure under <| and <|^-1.
ElemSet generated_subquandle(const FiniteQuandle &q, const ElemSet &seed);

// All subquandles ordered by (size, lexicographic). Guarded: 2^n subsets.
std::vector<ElemSet> all_subquandles(const FiniteQuandle &q, int max_n = 8);

ElemSet meet(const ElemSet &a, const ElemSet &b);
ElemSet join(const FiniteQuandle &q, const ElemSet &a, const ElemSet &b);

// First B in all_subquandles order with meet(A,B) empty and join(A,B) = Q.
std::optional<ElemSet> find_complement(const FiniteQuandle &q, const ElemSet &a,
                                       int max_n = 8);

} // namespace pfq
