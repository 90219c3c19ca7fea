#pragma once

// Hand-rolled random generators for property tests.

#include <algorithm>
#include <random>
#include <vector>

#include "canext/order/lattice.hpp"
#include "canext/order/maps.hpp"

namespace gen {

using canext::Elem;
using canext::ElemMap;
using canext::Lattice;

/// Elements sorted so that every element follows everything below it.
inline std::vector<Elem> linear_extension(const Lattice& L) {
  std::vector<Elem> order(L.size());
  for (Elem a = 0; a < L.size(); ++a) order[a] = a;
  std::stable_sort(order.begin(), order.end(),
                   [&](Elem a, Elem b) { return L.poset().down(a).count() < L.poset().down(b).count(); });
  return order;
}

/// f(a) = r(a) ∨ ⋁{f(b) | b < a} is monotone for any random r.
inline ElemMap random_monotone(const Lattice& L, const Lattice& M, std::mt19937& rng) {
  std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(M.size() - 1));
  ElemMap f(L.size());
  for (Elem a : linear_extension(L)) {
    Elem v = pick(rng);
    for (Elem b = 0; b < L.size(); ++b)
      if (L.poset().lt(b, a)) v = M.join(v, f[b]);
    f[a] = v;
  }
  return f;
}

inline ElemMap random_antitone(const Lattice& L, const Lattice& M, std::mt19937& rng) {
  // Monotone into the dual of M.
  const Lattice Md = M.dual();
  return random_monotone(L, Md, rng);
}

inline ElemMap random_map(const Lattice& L, const Lattice& M, std::mt19937& rng) {
  std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(M.size() - 1));
  ElemMap f(L.size());
  for (auto& v : f) v = pick(rng);
  return f;
}

/// A join-preserving map on a distributive L: random monotone values on the
/// join-irreducibles, extended by joins, with f(0) = 0.
inline ElemMap random_operator(const Lattice& L, std::mt19937& rng) {
  const ElemMap base = random_monotone(L, L, rng);
  ElemMap f(L.size(), L.bottom());
  for (Elem a = 0; a < L.size(); ++a) {
    Elem v = L.bottom();
    for (Elem j = 0; j < L.size(); ++j) {
      if (j == L.bottom() || !L.leq(j, a)) continue;
      bool irreducible = true;
      for (Elem b = 0; b < L.size() && irreducible; ++b)
        for (Elem c = 0; c < L.size() && irreducible; ++c)
          if (b != j && c != j && L.join(b, c) == j) irreducible = false;
      if (irreducible) v = L.join(v, base[j]);
    }
    f[a] = v;
  }
  return f;
}

}  // namespace gen
