#include "pfq/perm.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "pfq/errors.hpp"

namespace pfq {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= degree() || seen[static_cast<size_t>(v)])
      throw InvalidSpec("image list is not a bijection on 0.." +
                        std::to_string(degree() - 1));
    seen[static_cast<size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> im(static_cast<size_t>(degree));
  for (int i = 0; i < degree; ++i) im[static_cast<size_t>(i)] = i;
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[static_cast<size_t>(i)] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> im(images_.size());
  for (int i = 0; i < degree(); ++i) im[static_cast<size_t>(images_[static_cast<size_t>(i)])] = i;
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (int start = 0; start < degree(); ++start) {
    if (seen[static_cast<size_t>(start)]) continue;
    std::vector<int> cyc;
    int x = start;
    do {
      seen[static_cast<size_t>(x)] = true;
      cyc.push_back(x);
      x = images_[static_cast<size_t>(x)];
    } while (x != start);
    if (cyc.size() > 1) out.push_back(std::move(cyc));
  }
  return out;
}

int Permutation::cycle_count() const {
  int count = 0;
  std::vector<bool> seen(images_.size(), false);
  for (int start = 0; start < degree(); ++start) {
    if (seen[static_cast<size_t>(start)]) continue;
    ++count;
    int x = start;
    do {
      seen[static_cast<size_t>(x)] = true;
      x = images_[static_cast<size_t>(x)];
    } while (x != start);
  }
  return count;
}

int Permutation::min_transpositions() const { return degree() - cycle_count(); }

std::string Permutation::to_cycle_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto &cyc : cs) {
    os << '(';
    for (size_t i = 0; i < cyc.size(); ++i) {
      if (i) os << ' ';
      os << cyc[i];
    }
    os << ')';
  }
  return os.str();
}

Permutation Permutation::from_cycles(const std::string &text, int degree) {
  std::vector<int> im(static_cast<size_t>(degree));
  for (int i = 0; i < degree; ++i) im[static_cast<size_t>(i)] = i;
  std::vector<bool> used(static_cast<size_t>(degree), false);

  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw ParseError("expected '(' in cycle notation: " + text);
    ++pos;
    std::vector<int> cyc;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw ParseError("expected point or ')' in cycle notation: " + text);
      int v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + (text[pos] - '0');
        ++pos;
      }
      if (v >= degree)
        throw ParseError("point " + std::to_string(v) + " exceeds degree " +
                         std::to_string(degree));
      if (used[static_cast<size_t>(v)])
        throw ParseError("point " + std::to_string(v) + " repeated in cycles");
      used[static_cast<size_t>(v)] = true;
      cyc.push_back(v);
      skip_ws();
      if (pos < text.size() && text[pos] == ',') { ++pos; skip_ws(); }
    }
    if (pos >= text.size())
      throw ParseError("unterminated cycle in: " + text);
    ++pos; // ')'
    for (size_t i = 0; i < cyc.size(); ++i)
      im[static_cast<size_t>(cyc[i])] = cyc[(i + 1) % cyc.size()];
    skip_ws();
  }
  return Permutation(std::move(im));
}

Permutation compose(const Permutation &a, const Permutation &b) {
  if (a.degree() != b.degree())
    throw DegreeMismatch("compose: degrees " + std::to_string(a.degree()) +
                         " vs " + std::to_string(b.degree()));
  std::vector<int> im(static_cast<size_t>(a.degree()));
  for (int i = 0; i < a.degree(); ++i) im[static_cast<size_t>(i)] = b(a(i));
  return Permutation(Permutation::Unchecked{}, std::move(im));
}

Permutation conjugate(const Permutation &a, const Permutation &b) {
  return compose(compose(b.inverse(), a), b);
}

Parity parity(const Permutation &p) {
  return p.min_transpositions() % 2 == 0 ? Parity::Even : Parity::Odd;
}

size_t PermHash::operator()(const Permutation &p) const {
  size_t h = 0x9e3779b97f4a7c15ULL;
  for (int v : p.images())
    h = (h ^ static_cast<size_t>(v)) * 0x100000001b3ULL;
  return h;
}

} // namespace pfq
