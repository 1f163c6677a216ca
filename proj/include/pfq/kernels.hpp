#pragma once

#include <optional>
#include <span>
#include <vector>

namespace pfq {

// Exhaustive inner loops come in two builds: a serial reference and an
// OpenMP version. Both return bit-identical results (first witness in
// lexicographic order, output sets merged in canonical order); tests compare
// them and bench/ measures them against each other.
enum class ExecMode { Serial, Parallel };

struct TripleWitness {
  int x, y, z;
};

namespace kernels {

// First (x,y,z) in lexicographic order violating
// op[op[x][y]][z] == op[op[x][z]][op[y][z]], or nullopt.
std::optional<TripleWitness> distributivity_violation(std::span<const int> op,
                                                      int n, ExecMode mode);

// All bijections f of 0..n-1 with f(x <| y) == f(x) <| f(y), as image vectors
// in lexicographic order.
std::vector<std::vector<int>> automorphism_images(std::span<const int> op,
                                                  int n, ExecMode mode);

// All n x n operation tables satisfying the three table axioms, each reduced
// to its canonical form (lexicographically least relabeling), deduplicated
// and sorted. connected_only restricts to tables whose column maps act with
// a single orbit.
std::vector<std::vector<int>> enumerate_tables(int n, bool connected_only,
                                               ExecMode mode);

// Reference path for enumerate_tables used by the acceptance oracle: filters
// the full (n-1)!^n space of column tuples instead of backtracking.
std::vector<std::vector<int>> enumerate_tables_bruteforce(int n,
                                                          bool connected_only,
                                                          ExecMode mode);

// Canonical form of a valid operation table: the lexicographically least
// table over all relabelings.
std::vector<int> canonical_table(std::span<const int> op, int n);

} // namespace kernels

} // namespace pfq
