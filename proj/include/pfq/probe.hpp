#pragma once

#include <vector>

#include "pfq/kernels.hpp"
#include "pfq/perm.hpp"
#include "pfq/tower.hpp"

namespace pfq {

// Per-symbol data for the distinguished limit element l, whose n-th
// coordinate is the cycle (0 1 ... 2*floor(n/2)-1) of the symmetric group on
// n symbols.
struct ProbeFactorStat {
  int n = 0;
  int min_transpositions = 0; // = 2*floor(n/2) - 1
  bool odd = false;
};

// One level of the tower M_2 <- M_2xM_3 <- ... The level's inner group is
// computed as a closure in the tuple representation (one small symmetric
// group per factor; the n = 2 factor acts trivially and is dropped) and
// compared against the independently filtered equal-parity subgroup of the
// product of symmetric groups.
struct ProbeLevelStat {
  int level = 0;
  long carrier = 0;
  long inn_order = 0;
  long same_parity_order = 0;
  bool equality_exhaustive = false;  // code-by-code set comparison ran & passed
  bool equality_constructive = false; // two-sided generation argument verified
  bool ell_member = false;
  int orbit_count = 0;
  bool carrier_cross_checked = false; // matched against the carrier-level group
};

struct ProbeReport {
  int depth = 0;
  std::vector<ProbeFactorStat> factors; // n = 2 .. depth+1
  std::vector<ProbeLevelStat> levels;
  bool ell_coherent = false;
  bool unbounded = false; // the min-transposition sequence grows without bound
};

// Exhaustive set comparison runs while the tuple code space stays within
// exhaustive_code_bound; beyond it the two-sided generation certificates are
// verified instead. Carrier-level cross checks run while the level's inner
// group order stays within carrier_group_bound.
ProbeReport counterexample_probe(int depth, ExecMode mode = ExecMode::Parallel,
                                 long exhaustive_code_bound = 20'000'000,
                                 long carrier_group_bound = 20'000);

// The n-th coordinate of l.
Permutation ell_coordinate(int n);

// Shortest transposition-word length by breadth-first search over the Cayley
// graph; the independent check for min_transpositions at small degree.
int min_transpositions_bfs(const Permutation &p);

} // namespace pfq
