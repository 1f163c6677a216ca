#pragma once

#include <string>
#include <vector>

#include "pfq/abelian.hpp"
#include "pfq/group.hpp"
#include "pfq/permgroup.hpp"
#include "pfq/quandle.hpp"
#include "pfq/tower.hpp"

namespace pfq {

// .qnd text format:
//   quandle <n>
//   <n rows of n 0-indexed entries, row x holding x <| 0 ... x <| n-1>
// '#' starts a comment. A leading '{' switches to the structured form
// {"n": int, "op": [[int]]}.
FiniteQuandle parse_quandle(const std::string &text,
                            ExecMode mode = ExecMode::Parallel);
FiniteQuandle load_quandle(const std::string &path,
                           ExecMode mode = ExecMode::Parallel);
std::string to_qnd(const FiniteQuandle &q);
std::string quandle_json(const FiniteQuandle &q);

// Group input: Cayley table {"n": int, "mul": [[int]], "id": int} or
// permutation generators {"degree": int, "generators": ["(0 1)", ...]}.
// Cayley tables enter the permutation world through the regular
// representation.
PermGroup parse_perm_group(const std::string &text,
                           long order_bound = kDefaultOrderBound);
PermGroup load_perm_group(const std::string &path,
                          long order_bound = kDefaultOrderBound);
FiniteGroup parse_finite_group(const std::string &text);

// {"rows": int, "cols": int, "entries": [[int]]}
IntMatrix parse_matrix(const std::string &text);

// Tower descriptors:
//   {"builder": "tak_zp", "p": int, "depth": int}
//   {"builder": "conj", "sym": int, "depth": int}
//   {"builder": "m_product", "depth": int}
//   {"builder": "coset", "sym": int, "subgroup": [cycles...], "h": cycles,
//    "depth": int}
//   {"builder": "explicit", "levels": [<quandle json or .qnd path>...],
//    "transitions": [[int]...]}
// File references inside "levels" resolve relative to base_dir.
QuandleTower parse_tower(const std::string &text, const std::string &base_dir,
                         long order_bound = kDefaultOrderBound);
QuandleTower load_tower(const std::string &path,
                        long order_bound = kDefaultOrderBound);

std::string read_file(const std::string &path);

} // namespace pfq
