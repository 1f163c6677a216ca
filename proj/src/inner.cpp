#include "pfq/inner.hpp"

#include <algorithm>
#include <map>

#include "pfq/errors.hpp"
#include "pfq/iso.hpp"
#include "pfq/kernels.hpp"

namespace pfq {

PermGroup inn(const FiniteQuandle &q, long order_bound) {
  std::vector<Permutation> gens;
  gens.reserve(static_cast<size_t>(q.size()));
  for (int y = 0; y < q.size(); ++y) gens.push_back(symmetry(q, y));
  return PermGroup::generate(std::move(gens), q.size(), order_bound);
}

PermGroup aut(const FiniteQuandle &q, int max_n, ExecMode mode) {
  if (q.size() > max_n)
    throw SizeBound("automorphism search limited to size " +
                    std::to_string(max_n));
  auto images = kernels::automorphism_images(q.table(), q.size(), mode);
  std::vector<Permutation> elems;
  elems.reserve(images.size());
  for (auto &im : images) elems.emplace_back(std::move(im));
  return PermGroup::from_elements(std::move(elems), q.size());
}

bool is_connected(const FiniteQuandle &q) {
  if (q.size() < 1)
    throw InvalidSpec("connectedness needs a nonempty carrier");
  std::vector<bool> seen(static_cast<size_t>(q.size()), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y = 0; y < q.size(); ++y) {
      for (int t : {q.op(x, y), q.inv_op(x, y)}) {
        if (!seen[static_cast<size_t>(t)]) {
          seen[static_cast<size_t>(t)] = true;
          ++reached;
          stack.push_back(t);
        }
      }
    }
  }
  return reached == q.size();
}

std::vector<std::vector<int>> reachability_orbits(const FiniteQuandle &q) {
  std::vector<std::vector<int>> out;
  std::vector<bool> covered(static_cast<size_t>(q.size()), false);
  for (int start = 0; start < q.size(); ++start) {
    if (covered[static_cast<size_t>(start)]) continue;
    std::vector<int> orbit{start}, stack{start};
    covered[static_cast<size_t>(start)] = true;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y = 0; y < q.size(); ++y)
        for (int t : {q.op(x, y), q.inv_op(x, y)})
          if (!covered[static_cast<size_t>(t)]) {
            covered[static_cast<size_t>(t)] = true;
            orbit.push_back(t);
            stack.push_back(t);
          }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

std::vector<Permutation> transpositions_of(int n) {
  std::vector<Permutation> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::vector<int> im(static_cast<size_t>(n));
      for (int k = 0; k < n; ++k) im[static_cast<size_t>(k)] = k;
      std::swap(im[static_cast<size_t>(i)], im[static_cast<size_t>(j)]);
      out.emplace_back(std::move(im));
    }
  return out;
}

FiniteQuandle two_cycle_quandle(int n) {
  if (n < 2) throw InvalidSpec("two-cycle quandle needs n >= 2");
  const auto trans = transpositions_of(n);
  const int m = static_cast<int>(trans.size());
  std::map<Permutation, int> index;
  for (int i = 0; i < m; ++i) index.emplace(trans[static_cast<size_t>(i)], i);
  std::vector<int> flat(static_cast<size_t>(m) * static_cast<size_t>(m));
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      flat[static_cast<size_t>(x * m + y)] = index.at(
          conjugate(trans[static_cast<size_t>(x)], trans[static_cast<size_t>(y)]));
  return FiniteQuandle::validate_flat(std::move(flat), m);
}

EhrmanData ehrman_decompose(const FiniteQuandle &q, int base, long order_bound) {
  if (base < 0 || base >= q.size())
    throw IndexOutOfRange("base point out of range");
  if (!is_connected(q))
    throw NotConnected("decomposition requires a connected quandle");

  EhrmanData data;
  data.q = q;
  data.base = base;
  data.g = inn(q, order_bound);
  data.h_stab = data.g.stabilizer(base);
  data.h = symmetry(q, base);

  if (!data.h_stab.contains(data.h))
    throw InvariantFailure("symmetry at the base does not stabilize it");
  // h central in the stabilizer
  for (const auto &e : data.h_stab.elements())
    if (compose(e, data.h) != compose(data.h, e))
      throw InvariantFailure("base symmetry is not central in the stabilizer");
  if (data.g.order() != data.h_stab.order() * q.size())
    throw InvariantFailure("index of the stabilizer does not match the carrier");

  data.cosets = right_cosets(data.g, data.h_stab);
  data.aug.reserve(data.cosets.size());
  data.coset_element.reserve(data.cosets.size());
  for (const auto &c : data.cosets) {
    const Permutation &rep = data.g.element(c.rep);
    data.aug.push_back(conjugate(data.h, rep));
    data.coset_element.push_back(rep(base));
  }

  // the coset <-> element correspondence is a bijection...
  {
    std::vector<bool> hit(static_cast<size_t>(q.size()), false);
    for (int e : data.coset_element) {
      if (hit[static_cast<size_t>(e)])
        throw InvariantFailure("coset-to-element map is not injective");
      hit[static_cast<size_t>(e)] = true;
    }
  }
  // ...and equivariant: coset(rep_i * g) corresponds to (rep_i(base)).g
  {
    std::vector<int> coset_of(static_cast<size_t>(data.g.order()));
    for (size_t ci = 0; ci < data.cosets.size(); ++ci)
      for (int m : data.cosets[ci].members)
        coset_of[static_cast<size_t>(m)] = static_cast<int>(ci);
    for (size_t ci = 0; ci < data.cosets.size(); ++ci) {
      const Permutation &rep = data.g.element(data.cosets[ci].rep);
      for (const auto &g : data.g.elements()) {
        const int target_coset =
            coset_of[static_cast<size_t>(*data.g.index_of(compose(rep, g)))];
        if (data.coset_element[static_cast<size_t>(target_coset)] !=
            g(data.coset_element[ci]))
          throw InvariantFailure("coset correspondence is not equivariant");
      }
    }
  }

  // Inn(Q) is generated by the conjugate augmentations
  PermGroup regen = PermGroup::generate(data.aug, q.size(), order_bound);
  if (!same_element_set(regen, data.g))
    throw InvariantFailure("augmentations do not generate the inner group");

  return data;
}

CosetQuandle coset_quandle(const CosetQuandleSpec &spec) {
  if (!is_subgroup(spec.h, spec.g))
    throw InvalidSpec("coset quandle requires H <= G");
  if (!spec.g.contains(spec.hc))
    throw InvalidSpec("central element does not lie in G");
  if (!spec.h.contains(spec.hc))
    throw InvalidSpec("central element does not lie in H");
  for (const auto &e : spec.h.elements())
    if (compose(e, spec.hc) != compose(spec.hc, e))
      throw InvalidSpec("chosen element is not central in H");

  CosetQuandle out;
  out.cosets = right_cosets(spec.g, spec.h);
  const int n = static_cast<int>(out.cosets.size());
  out.coset_of.assign(static_cast<size_t>(spec.g.order()), -1);
  for (int ci = 0; ci < n; ++ci)
    for (int m : out.cosets[static_cast<size_t>(ci)].members)
      out.coset_of[static_cast<size_t>(m)] = ci;

  const Permutation hc_inv = spec.hc.inverse();
  std::vector<int> flat(static_cast<size_t>(n) * static_cast<size_t>(n));
  std::vector<int> flat_inv(static_cast<size_t>(n) * static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const Permutation &gi = spec.g.element(out.cosets[static_cast<size_t>(i)].rep);
    for (int j = 0; j < n; ++j) {
      const Permutation &gj = spec.g.element(out.cosets[static_cast<size_t>(j)].rep);
      flat[static_cast<size_t>(i * n + j)] = out.coset_of[static_cast<size_t>(
          *spec.g.index_of(compose(gi, conjugate(spec.hc, gj))))];
      flat_inv[static_cast<size_t>(i * n + j)] = out.coset_of[static_cast<size_t>(
          *spec.g.index_of(compose(gi, conjugate(hc_inv, gj))))];
    }
  }
  // validity of the table is exactly the right-coset-quandle statement
  out.q = FiniteQuandle::validate_flat(std::move(flat), n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (out.q.inv_op(i, j) != flat_inv[static_cast<size_t>(i * n + j)])
        throw InvariantFailure(
            "columnwise inverse disagrees with the h^-1 formula at (" +
            std::to_string(i) + "," + std::to_string(j) + ")");
  return out;
}

void validate_group_hom(const PermGroup &src, const PermGroup &dst,
                        const GroupHom &phi, bool require_surjective) {
  if (static_cast<long>(phi.image.size()) != src.order())
    throw InvalidSpec("hom image table size does not match the group order");
  for (int v : phi.image)
    if (v < 0 || v >= dst.order())
      throw InvalidSpec("hom image index out of range");
  for (int a = 0; a < src.order(); ++a)
    for (int b = 0; b < src.order(); ++b) {
      const int ab = *src.index_of(compose(src.element(a), src.element(b)));
      const Permutation lhs = dst.element(phi.image[static_cast<size_t>(ab)]);
      const Permutation rhs = compose(dst.element(phi.image[static_cast<size_t>(a)]),
                                      dst.element(phi.image[static_cast<size_t>(b)]));
      if (lhs != rhs)
        throw NotHom("map fails multiplicativity at element pair (" +
                     std::to_string(a) + "," + std::to_string(b) + ")");
    }
  if (require_surjective) {
    std::vector<bool> hit(static_cast<size_t>(dst.order()), false);
    for (int v : phi.image) hit[static_cast<size_t>(v)] = true;
    for (size_t i = 0; i < hit.size(); ++i)
      if (!hit[i])
        throw NotSurjective("element " + std::to_string(i) +
                            " of the target is not attained");
  }
}

InducedCosetHom induced_coset_hom(const CosetQuandleSpec &spec,
                                  const PermGroup &dst, const GroupHom &phi) {
  validate_group_hom(spec.g, dst, phi);

  InducedCosetHom out;
  out.upstairs = coset_quandle(spec);

  // downstairs spec: (Gamma, phi(H), phi(h))
  std::vector<Permutation> image_h;
  for (const auto &e : spec.h.elements())
    image_h.push_back(dst.element(phi.image[static_cast<size_t>(*spec.g.index_of(e))]));
  std::sort(image_h.begin(), image_h.end());
  image_h.erase(std::unique(image_h.begin(), image_h.end()), image_h.end());
  CosetQuandleSpec down;
  down.g = dst;
  down.h = PermGroup::from_elements(std::move(image_h), dst.degree());
  down.hc = dst.element(phi.image[static_cast<size_t>(*spec.g.index_of(spec.hc))]);
  out.downstairs = coset_quandle(down);

  std::vector<int> map;
  map.reserve(out.upstairs.cosets.size());
  for (const auto &c : out.upstairs.cosets) {
    const int rep_image = phi.image[static_cast<size_t>(c.rep)];
    map.push_back(out.downstairs.coset_of[static_cast<size_t>(rep_image)]);
  }
  out.hom = QuandleHom{out.upstairs.q, out.downstairs.q, std::move(map)};

  if (!is_hom(out.hom))
    throw NotHom("induced coset map fails the hom property");
  std::vector<bool> hit(static_cast<size_t>(out.downstairs.q.size()), false);
  for (int v : out.hom.map) hit[static_cast<size_t>(v)] = true;
  for (size_t i = 0; i < hit.size(); ++i)
    if (!hit[i])
      throw NotSurjective("induced coset map misses coset " + std::to_string(i));
  return out;
}

namespace {

std::vector<FiniteQuandle> wrap_tables(std::vector<std::vector<int>> tables, int n) {
  std::vector<FiniteQuandle> out;
  out.reserve(tables.size());
  for (auto &t : tables)
    out.push_back(FiniteQuandle::validate_flat(std::move(t), n));
  return out;
}

} // namespace

std::vector<FiniteQuandle> enumerate_connected(int n, int max_n, ExecMode mode) {
  if (n < 0 || n > max_n)
    throw SizeBound("connected enumeration limited to order " +
                    std::to_string(max_n));
  return wrap_tables(kernels::enumerate_tables(n, true, mode), n);
}

std::vector<FiniteQuandle> enumerate_all(int n, int max_n, ExecMode mode) {
  if (n < 0 || n > max_n)
    throw SizeBound("enumeration limited to order " + std::to_string(max_n));
  return wrap_tables(kernels::enumerate_tables(n, false, mode), n);
}

bool ehrman_roundtrip(const FiniteQuandle &q) {
  EhrmanData data = ehrman_decompose(q, 0);
  CosetQuandle rebuilt =
      coset_quandle(CosetQuandleSpec{data.g, data.h_stab, data.h});
  return are_isomorphic(q, rebuilt.q);
}

} // namespace pfq
