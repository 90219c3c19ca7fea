#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "canext/core/element_set.hpp"
#include "canext/core/errors.hpp"
#include "canext/order/lattice.hpp"
#include "canext/order/maps.hpp"

namespace canext {

/// The Dedekind-MacNeille completion of a finite poset as its lattice of
/// stable cuts. `cuts[k]` is the lower half A of cut k (A = (A^u)^l); the
/// upper half is recoverable as A^u.
struct MacNeille {
  Lattice lattice;
  ElemMap embedding;
  std::vector<ElementSet> cuts;
};

namespace detail {

inline std::string cut_name(const Poset& P, const ElementSet& cut) {
  std::string s = "cut{";
  bool first = true;
  for_each_element(cut, [&](Elem e) {
    if (!first) s += ",";
    s += P.name(e);
    first = false;
  });
  return s + "}";
}

}  // namespace detail

/// Stable lower halves are exactly the intersections of principal downsets
/// (the empty intersection being the whole carrier), so the cut family is
/// generated by closing {↓p} ∪ {P} under pairwise intersection.
inline MacNeille dedekind_macneille(const Poset& P) {
  const std::size_t n = P.size();
  std::vector<ElementSet> cuts;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  auto add = [&](const ElementSet& s) {
    if (seen.insert(s).second) cuts.push_back(s);
  };
  add(full_set(n));
  for (Elem p = 0; p < n; ++p) add(P.down(p));
  for (std::size_t i = 0; i < cuts.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) add(cuts[i] & cuts[j]);

  std::sort(cuts.begin(), cuts.end(), [](const ElementSet& a, const ElementSet& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a < b;
  });

  std::vector<std::string> names(cuts.size());
  MacNeille out;
  out.embedding.assign(n, 0);
  for (Elem k = 0; k < cuts.size(); ++k) names[k] = detail::cut_name(P, cuts[k]);
  for (Elem p = 0; p < n; ++p) {
    const auto it = std::find(cuts.begin(), cuts.end(), P.down(p));
    const Elem k = static_cast<Elem>(it - cuts.begin());
    out.embedding[p] = k;
    names[k] = P.name(p);
  }
  out.lattice = Lattice::from_predicate(std::move(names), [&](Elem a, Elem b) { return cuts[a].is_subset_of(cuts[b]); });
  out.cuts = std::move(cuts);

  // Join-density and meet-density of the image.
  const Lattice& M = out.lattice;
  ElementSet image(M.size());
  for (Elem k : out.embedding) image.set(k);
  for (Elem u = 0; u < M.size(); ++u) {
    if (M.join_all(image & M.poset().down(u)) != u || M.meet_all(image & M.poset().up(u)) != u)
      throw std::logic_error("cut " + M.name(u) + " is not generated by the embedded poset");
  }
  return out;
}

}  // namespace canext
