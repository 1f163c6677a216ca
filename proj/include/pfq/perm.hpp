#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace pfq {

// A permutation of {0..m-1}. Composition is left-to-right:
// (a * b)(x) = b(a(x)), matching right actions x.g throughout the library.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int degree);
  // Cycle notation on a declared degree, e.g. "(0 1)(2 4)"; identity is "()".
  static Permutation from_cycles(const std::string &text, int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[static_cast<size_t>(x)]; }
  const std::vector<int> &images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;

  // Disjoint cycles, each rotated to start at its least point, sorted by
  // that point; fixed points omitted.
  std::vector<std::vector<int>> cycles() const;
  int cycle_count() const; // counts fixed points as 1-cycles

  // Least number of transpositions whose product is this permutation:
  // degree minus number of cycles.
  int min_transpositions() const;
  bool is_even() const { return min_transpositions() % 2 == 0; }

  std::string to_cycle_string() const;

  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend auto operator<=>(const Permutation &a, const Permutation &b) {
    return a.images_ <=> b.images_;
  }

  friend Permutation compose(const Permutation &a, const Permutation &b);

private:
  struct Unchecked {};
  Permutation(Unchecked, std::vector<int> images) : images_(std::move(images)) {}
  std::vector<int> images_;
};

Permutation compose(const Permutation &a, const Permutation &b);
inline Permutation operator*(const Permutation &a, const Permutation &b) {
  return compose(a, b);
}

// b^-1 * a * b
Permutation conjugate(const Permutation &a, const Permutation &b);

enum class Parity { Even, Odd };
Parity parity(const Permutation &p);

struct PermHash {
  size_t operator()(const Permutation &p) const;
};

} // namespace pfq
