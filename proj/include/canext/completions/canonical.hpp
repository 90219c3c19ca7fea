#pragma once

#include <string>
#include <vector>

#include "canext/completions/completion.hpp"
#include "canext/completions/macneille.hpp"
#include "canext/core/element_set.hpp"
#include "canext/order/lattice.hpp"

namespace canext {

/// The filters (or ideals) of a finite lattice ordered by inclusion.
/// `principal[a]` is the index of ↑a (or ↓a).
struct SetLattice {
  Lattice lattice;
  std::vector<ElementSet> members;
  ElemMap principal;
};

namespace detail {

inline std::string set_label(const char* prefix, const Lattice& L, Elem a) {
  return std::string(prefix) + "(" + L.name(a) + ")";
}

/// Every filter of a finite lattice is ↑(⋀F), so the filters are exactly the
/// principal up-sets.
inline SetLattice principal_set_lattice(const Lattice& L, bool filters) {
  SetLattice out;
  const std::size_t n = L.size();
  std::vector<std::string> names(n);
  for (Elem a = 0; a < n; ++a) {
    out.members.push_back(filters ? L.poset().up(a) : L.poset().down(a));
    names[a] = set_label(filters ? "up" : "down", L, a);
  }
  out.principal = identity_map(n);
  const auto& m = out.members;
  out.lattice = Lattice::from_predicate(std::move(names), [&](Elem a, Elem b) { return m[a].is_subset_of(m[b]); });
  return out;
}

}  // namespace detail

/// Filt(L) under inclusion; a ↦ ↑a is a reverse order isomorphism L -> Filt(L).
inline SetLattice filter_lattice(const Lattice& L) { return detail::principal_set_lattice(L, true); }

/// Idl(L) under inclusion; a ↦ ↓a is an order isomorphism L -> Idl(L).
inline SetLattice ideal_lattice(const Lattice& L) { return detail::principal_set_lattice(L, false); }

/// One point of the disjoint union Filt(L) ⊔ Idl(L).
struct IntermediateElement {
  enum class Tag { filter, ideal } tag;
  ElementSet content;
};

/// The filters and ideals of L under the four order conditions, quotiented by
/// mutual ≤. `class_of[k]` is the quotient class of `elements[k]`; the
/// filter ↑a sits at index a and the ideal ↓a at index |L| + a.
struct IntermediateStructure {
  std::vector<IntermediateElement> elements;
  std::vector<std::vector<bool>> preorder;
  Poset poset;
  ElemMap class_of;

  Elem filter_class(Elem a) const { return class_of[a]; }
  Elem ideal_class(Elem a) const { return class_of[elements.size() / 2 + a]; }
};

inline IntermediateStructure intermediate_structure(const Lattice& L) {
  IntermediateStructure out;
  const std::size_t n = L.size();
  const auto filters = filter_lattice(L);
  const auto ideals = ideal_lattice(L);
  for (const auto& F : filters.members) out.elements.push_back({IntermediateElement::Tag::filter, F});
  for (const auto& I : ideals.members) out.elements.push_back({IntermediateElement::Tag::ideal, I});
  const std::size_t m = out.elements.size();

  using Tag = IntermediateElement::Tag;
  auto leq = [&](const IntermediateElement& p, const IntermediateElement& q) {
    if (p.tag == Tag::filter && q.tag == Tag::filter) return q.content.is_subset_of(p.content);  // (i)
    if (p.tag == Tag::filter && q.tag == Tag::ideal) return (p.content & q.content).any();      // (ii)
    if (p.tag == Tag::ideal && q.tag == Tag::filter) {                                          // (iii)
      bool all = true;
      for_each_element(p.content, [&](Elem a) {
        for_each_element(q.content, [&](Elem b) { all = all && L.leq(a, b); });
      });
      return all;
    }
    return p.content.is_subset_of(q.content);  // (iv)
  };
  out.preorder.assign(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) out.preorder[i][j] = leq(out.elements[i], out.elements[j]);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k)
        if (out.preorder[i][j] && out.preorder[j][k] && !out.preorder[i][k])
          throw Error(ErrorKind::not_a_partial_order, "intermediate order is not transitive");

  // Classes of mutual ≤, numbered by first member.
  out.class_of.assign(m, 0);
  std::vector<std::size_t> representative;
  for (std::size_t i = 0; i < m; ++i) {
    bool placed = false;
    for (std::size_t c = 0; c < representative.size() && !placed; ++c) {
      const std::size_t r = representative[c];
      if (out.preorder[i][r] && out.preorder[r][i]) {
        out.class_of[i] = static_cast<Elem>(c);
        placed = true;
      }
    }
    if (!placed) {
      out.class_of[i] = static_cast<Elem>(representative.size());
      representative.push_back(i);
    }
  }
  std::vector<std::string> names(representative.size());
  for (std::size_t c = 0; c < representative.size(); ++c) {
    const std::size_t r = representative[c];
    names[c] = r < n ? L.name(static_cast<Elem>(r)) : detail::set_label("down", L, static_cast<Elem>(r - n));
  }
  out.poset = Poset::from_predicate(std::move(names), [&](Elem a, Elem b) {
    return bool(out.preorder[representative[a]][representative[b]]);
  });
  return out;
}

/// L^δ as the MacNeille completion of the intermediate structure, embedded by
/// a ↦ class(↑a).
inline Completion canonical_extension(LatticePtr L) {
  const auto inter = intermediate_structure(*L);
  auto dm = dedekind_macneille(inter.poset);
  ElemMap embed(L->size());
  for (Elem a = 0; a < L->size(); ++a) embed[a] = dm.embedding[inter.filter_class(a)];
  return make_completion(std::move(L), share(std::move(dm.lattice)), std::move(embed));
}

inline Completion canonical_extension(const Lattice& L) { return canonical_extension(share(L)); }

/// MacNeille completion of L's order, as a completion of L.
inline Completion macneille_completion(LatticePtr L) {
  auto dm = dedekind_macneille(L->poset());
  ElemMap embed = dm.embedding;
  return make_completion(std::move(L), share(std::move(dm.lattice)), std::move(embed));
}

}  // namespace canext
