#pragma once

#include <optional>

#include "pfq/quandle.hpp"

namespace pfq {

// Bijective hom Q -> S with the lexicographically least image vector, found
// by backtracking after comparing cheap invariants (orbit-size multiset and
// symmetry cycle types).
std::optional<QuandleHom> find_isomorphism(const FiniteQuandle &q,
                                           const FiniteQuandle &s);

bool are_isomorphic(const FiniteQuandle &q, const FiniteQuandle &s);

} // namespace pfq
