#pragma once

#include <vector>

#include "canext/core/element_set.hpp"
#include "canext/core/errors.hpp"
#include "canext/order/constructions.hpp"
#include "canext/order/lattice.hpp"

namespace canext {

/// A unary map between finite carriers, stored as its graph.
using ElemMap = std::vector<Elem>;

inline ElemMap identity_map(std::size_t n) {
  ElemMap m(n);
  for (Elem i = 0; i < n; ++i) m[i] = i;
  return m;
}

/// (g ∘ f)(a) = g(f(a)).
inline ElemMap compose(const ElemMap& g, const ElemMap& f) {
  ElemMap out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = g[f[i]];
  return out;
}

inline bool is_surjective(const ElemMap& f, std::size_t target_size) {
  ElementSet hit(target_size);
  for (Elem v : f) hit.set(v);
  return hit.all();
}

inline bool is_injective(const ElemMap& f, std::size_t target_size) {
  ElementSet hit(target_size);
  for (Elem v : f) {
    if (hit.test(v)) return false;
    hit.set(v);
  }
  return true;
}

inline bool is_monotone(const Lattice& src, const Lattice& dst, const ElemMap& f) {
  for (const auto& [lo, hi] : src.poset().covers())
    if (!dst.leq(f[lo], f[hi])) return false;
  return true;
}

/// Pointwise order between two maps into the same lattice.
inline bool pointwise_leq(const Lattice& dst, const ElemMap& f, const ElemMap& g) {
  for (std::size_t i = 0; i < f.size(); ++i)
    if (!dst.leq(f[i], g[i])) return false;
  return true;
}

/// The lower and upper adjoints of a complete homomorphism h : D -> E, both
/// as maps E -> D.
struct AdjointPair {
  ElemMap lower;
  ElemMap upper;
};

/// On finite lattices a complete homomorphism is a bounded lattice
/// homomorphism; h♭(e) is the meet of {d | e <= h(d)} and h♯(e) the join of
/// {d | h(d) <= e}. Both adjunction laws are re-checked before returning.
inline AdjointPair adjoints(const Lattice& D, const Lattice& E, const ElemMap& h) {
  if (!is_homomorphism(D, E, h))
    throw Error(ErrorKind::not_complete_homomorphism, "map does not preserve meets, joins and bounds");
  AdjointPair pair{ElemMap(E.size()), ElemMap(E.size())};
  for (Elem e = 0; e < E.size(); ++e) {
    ElementSet above(D.size()), below(D.size());
    for (Elem d = 0; d < D.size(); ++d) {
      if (E.leq(e, h[d])) above.set(d);
      if (E.leq(h[d], e)) below.set(d);
    }
    pair.lower[e] = D.meet_all(above);
    pair.upper[e] = D.join_all(below);
  }
  for (Elem e = 0; e < E.size(); ++e) {
    for (Elem d = 0; d < D.size(); ++d) {
      if (D.leq(pair.lower[e], d) != E.leq(e, h[d]) || E.leq(h[d], e) != D.leq(d, pair.upper[e]))
        throw Error(ErrorKind::not_complete_homomorphism, "adjunction law fails at (" + D.name(d) + ", " + E.name(e) + ")");
    }
  }
  return pair;
}

/// Checks that h commutes with every operation shared by name, i.e.
/// h(f(a_1..a_n)) = g(h(a_1)..h(a_n)). Returns the first failing tuple.
inline std::optional<std::pair<std::string, std::vector<Elem>>> expansion_homomorphism_failure(const Lattice& A,
                                                                                                const Lattice& B,
                                                                                                const ElemMap& h) {
  for (const auto& [name, f] : A.operations()) {
    if (!B.has_operation(name)) return std::pair{name, std::vector<Elem>{}};
    const Operation& g = B.operation(name);
    for (std::size_t idx = 0; idx < f.table.size(); ++idx) {
      auto args = tuple_decode(idx, f.arity, A.size());
      std::vector<Elem> image(f.arity);
      for (std::size_t c = 0; c < f.arity; ++c) image[c] = h[args[c]];
      if (h[f.table[idx]] != g.apply(image, B.size())) return std::pair{name, args};
    }
  }
  return std::nullopt;
}

}  // namespace canext
