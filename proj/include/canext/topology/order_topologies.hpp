#pragma once

#include <vector>

#include "canext/completions/completion.hpp"
#include "canext/order/lattice.hpp"
#include "canext/topology/finite_topology.hpp"

namespace canext {

enum class Side { both, up, down };

/// δ, δ↑, δ↓ on a completion target: bases [x,y], ↑x, ↓y with x a filter
/// element and y an ideal element.
inline FiniteTopology delta_topology(const Completion& c, Side side = Side::both) {
  const Lattice& C = c.C();
  std::vector<ElementSet> sb;
  const auto F = elements_of(c.filter_elements);
  const auto I = elements_of(c.ideal_elements);
  if (side == Side::up)
    for (Elem x : F) sb.push_back(C.poset().up(x));
  if (side == Side::down)
    for (Elem y : I) sb.push_back(C.poset().down(y));
  if (side == Side::both)
    for (Elem x : F)
      for (Elem y : I) sb.push_back(C.poset().up(x) & C.poset().down(y));
  return {C.size(), std::move(sb)};
}

/// ι↑ is generated by the complements of principal down-sets, ι↓ by the
/// complements of principal up-sets, ι by both.
inline FiniteTopology interval_topology(const Lattice& L, Side side = Side::both) {
  std::vector<ElementSet> sb;
  for (Elem p = 0; p < L.size(); ++p) {
    if (side != Side::down) sb.push_back(~L.poset().down(p));
    if (side != Side::up) sb.push_back(~L.poset().up(p));
  }
  return {L.size(), std::move(sb)};
}

/// On a finite poset every directed set has a greatest element, so every
/// up-set is Scott open; σ↑ is the up-set topology with basis {↑p}.
inline FiniteTopology scott_topology(const Lattice& L, Side side = Side::both) {
  std::vector<ElementSet> sb;
  for (Elem p = 0; p < L.size(); ++p) {
    if (side != Side::down) sb.push_back(L.poset().up(p));
    if (side != Side::up) sb.push_back(L.poset().down(p));
  }
  return {L.size(), std::move(sb)};
}

}  // namespace canext
