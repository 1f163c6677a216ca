#pragma once

#include <optional>
#include <vector>

#include "pfq/permgroup.hpp"
#include "pfq/quandle.hpp"

namespace pfq {

// Inn(Q): closure of all symmetries S_y.
PermGroup inn(const FiniteQuandle &q, long order_bound = kDefaultOrderBound);

// Aut(Q) by exhaustive bijection search; capped because candidates grow as n!.
PermGroup aut(const FiniteQuandle &q, int max_n = 8,
              ExecMode mode = ExecMode::Parallel);

// Single orbit under the symmetries (and hence under Inn).
bool is_connected(const FiniteQuandle &q);

// Orbit partition by reachability under <| and <|^-1 chains; agrees with the
// orbit partition of inn(q) but never builds the group.
std::vector<std::vector<int>> reachability_orbits(const FiniteQuandle &q);

// The quandle M_n of all 2-cycles of the symmetric group on n symbols under
// conjugation. Carrier: transpositions (i j), i < j, in lexicographic order.
FiniteQuandle two_cycle_quandle(int n);
std::vector<Permutation> transpositions_of(int n);

// Connected decomposition data at a base point: G = Inn(Q), H its stabilizer,
// h the symmetry at the base, coset representatives, and the per-coset
// augmentations rep^-1 h rep.
struct EhrmanData {
  FiniteQuandle q;
  int base = 0;
  PermGroup g;
  PermGroup h_stab;
  Permutation h;
  std::vector<Coset> cosets;
  std::vector<Permutation> aug; // aug[i] for coset i
  std::vector<int> coset_element; // carrier element attached to coset i
};

// Checks and returns the full decomposition; every structural property is
// verified on the instance and a failure raises InvariantFailure.
EhrmanData ehrman_decompose(const FiniteQuandle &q, int base,
                            long order_bound = kDefaultOrderBound);

struct CosetQuandleSpec {
  PermGroup g;
  PermGroup h;     // subgroup of g
  Permutation hc;  // central element of h
};

struct CosetQuandle {
  FiniteQuandle q;                // carrier = right cosets of h in g
  std::vector<Coset> cosets;      // indices into g's element list
  std::vector<int> coset_of;      // g element index -> coset index
};

// Right coset quandle: Hg_i <| Hg_j = H g_i (g_j^-1 h g_j).
CosetQuandle coset_quandle(const CosetQuandleSpec &spec);

// Surjective group hom src -> dst given by the image of every element.
struct GroupHom {
  std::vector<int> image; // image[i] = index in dst of phi(src.element(i))
};

void validate_group_hom(const PermGroup &src, const PermGroup &dst,
                        const GroupHom &phi, bool require_surjective = true);

struct InducedCosetHom {
  CosetQuandle upstairs;
  CosetQuandle downstairs;
  QuandleHom hom;
};

// Push a coset quandle along phi: H g -> phi(H) phi(g). Verified surjective
// quandle hom.
InducedCosetHom induced_coset_hom(const CosetQuandleSpec &spec,
                                  const PermGroup &dst, const GroupHom &phi);

// All connected quandles of the given order up to isomorphism, in canonical
// table order.
std::vector<FiniteQuandle> enumerate_connected(int n, int max_n = 6,
                                               ExecMode mode = ExecMode::Parallel);
// Same search without the connectivity filter.
std::vector<FiniteQuandle> enumerate_all(int n, int max_n = 6,
                                         ExecMode mode = ExecMode::Parallel);

// decompose at base 0, rebuild the coset quandle, compare up to isomorphism
bool ehrman_roundtrip(const FiniteQuandle &q);

} // namespace pfq
