#pragma once

#include <vector>

#include "pfq/inner.hpp"
#include "pfq/permgroup.hpp"
#include "pfq/quandle.hpp"

namespace pfq {

// A truncated inverse system: a finite chain of finite quandles
// Q_0 <- Q_1 <- ... <- Q_{N-1} with surjective transition homs
// t_k : Q_{k+1} -> Q_k. Index posets are restricted to chains; every
// countable directed poset has a cofinal chain, so nothing is lost at
// truncation depth.
struct QuandleTower {
  std::vector<FiniteQuandle> levels;
  std::vector<std::vector<int>> transitions; // transitions[k][x] in Q_k
  int depth() const { return static_cast<int>(levels.size()); }
};

// Chain of permutation groups with element-index transition maps.
struct GroupTower {
  std::vector<PermGroup> levels;
  std::vector<std::vector<int>> transitions;
  int depth() const { return static_cast<int>(levels.size()); }
};

// Surjectivity and the hom property of every transition, with the failing
// level and witness pair in the error.
void validate_tower(const QuandleTower &t);
void validate_group_tower(const GroupTower &t);

// A depth-N approximation of a limit element: one coordinate per level,
// coherent under the transitions.
using TruncatedElement = std::vector<int>;

bool is_coherent(const QuandleTower &t, const TruncatedElement &e);
void require_element(const QuandleTower &t, const TruncatedElement &e);

TruncatedElement limit_op(const QuandleTower &t, const TruncatedElement &a,
                          const TruncatedElement &b);
TruncatedElement limit_inv_op(const QuandleTower &t, const TruncatedElement &a,
                              const TruncatedElement &b);

// Preimage of x under t_k, a subset of Q_{k+1}; nonempty by surjectivity.
std::vector<int> lift(const QuandleTower &t, int k, int x);

// Every coherent tuple, in bijection with the top level; sorted.
std::vector<TruncatedElement> all_elements(const QuandleTower &t);

// Basic open of the slim basis: the coherent tuples whose coordinate at
// `level` equals `x`.
struct SlimBasicOpen {
  int level;
  int x;
};

bool in_open(const TruncatedElement &e, const SlimBasicOpen &u);

QuandleTower product_tower(const QuandleTower &a, const QuandleTower &b);
QuandleTower disjoint_union_tower(const QuandleTower &a, const QuandleTower &b);

// A subtower presented on a subset of each level's carrier.
struct SubTower {
  QuandleTower tower;                    // reindexed to 0..|carrier|-1
  std::vector<std::vector<int>> carrier; // sorted original indices per level
};

// Level k = subquandle generated by the k-th coordinates of the seeds, with
// restricted transitions. Realizes the closure of the generated subquandle
// at truncation depth.
SubTower projection_subtower(const QuandleTower &t,
                             const std::vector<TruncatedElement> &seeds);

struct DensityReport {
  bool dense = false;
  std::vector<std::vector<int>> level_images; // closure carrier per level
  std::vector<bool> full;                     // per level
};

// Dense at truncation depth: the closed projections fill every level.
DensityReport density_check(const QuandleTower &t,
                            const std::vector<TruncatedElement> &seeds);

// Union of the inner-group orbits of the seeds' coordinates, levelwise.
SubTower orbit_subtower(const QuandleTower &t,
                        const std::vector<TruncatedElement> &seeds);

bool levelwise_connected(const QuandleTower &t);

// Levelwise inner groups with the induced transition maps. The induced map
// is built by extending S_y -> S_{t(y)} multiplicatively over the whole
// element set; any single-valuedness conflict raises WellDefinednessFailure
// and surjectivity of the result is asserted.
GroupTower inn_tower(const QuandleTower &t,
                     long order_bound = kDefaultOrderBound);

// Equivariance of the projections against the induced inner maps,
// exhaustively: t_k(x.g) = t_k(x).(induced g).
void levelwise_action_check(const QuandleTower &t,
                            long order_bound = kDefaultOrderBound);

// --- builders ---

QuandleTower constant_tower(const FiniteQuandle &q, int depth);

// Z/p <- Z/p^2 <- ... (regular representations, reduction maps)
GroupTower zp_group_tower(int p, int depth);
// Z/1! <- Z/2! <- ... <- Z/depth!
GroupTower zhat_tower(int depth);

QuandleTower tak_tower(const GroupTower &gt);  // abelian levels required
QuandleTower conj_tower(const GroupTower &gt);

// Level k = M_2 x ... x M_{k+2} with first-coordinates projections.
QuandleTower m_product_tower(int depth);

// Right coset quandles over a compatible chain of (G_k, H_k, h_k).
QuandleTower coset_tower(const GroupTower &gt,
                         const std::vector<PermGroup> &subgroups,
                         const std::vector<Permutation> &centrals);

} // namespace pfq
