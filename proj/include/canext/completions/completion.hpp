#pragma once

#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "canext/core/element_set.hpp"
#include "canext/core/errors.hpp"
#include "canext/order/constructions.hpp"
#include "canext/order/lattice.hpp"
#include "canext/order/maps.hpp"

namespace canext {

/// A lattice embedding e : L -> C into a finite (hence complete) lattice,
/// with the filter elements F(C) (meets of embedded subsets) and ideal
/// elements I(C) (joins of embedded subsets) cached at construction.
struct Completion {
  LatticePtr source;
  LatticePtr target;
  ElemMap embed;
  ElementSet filter_elements;
  ElementSet ideal_elements;

  const Lattice& L() const { return *source; }
  const Lattice& C() const { return *target; }

  ElementSet image() const {
    ElementSet s(target->size());
    for (Elem e : embed) s.set(e);
    return s;
  }

  /// The element of L embedded at u, if any.
  std::optional<Elem> preimage(Elem u) const {
    for (Elem a = 0; a < embed.size(); ++a)
      if (embed[a] == u) return a;
    return std::nullopt;
  }
};

namespace detail {

/// Closure of `gens` ∪ {top} under binary meet; the empty meet is the top.
inline ElementSet meet_closure(const Lattice& C, const ElementSet& gens) {
  ElementSet out = gens;
  out.set(C.top());
  bool changed = true;
  while (changed) {
    changed = false;
    const auto members = elements_of(out);
    for (Elem a : members)
      for (Elem b : members)
        if (!out.test(C.meet(a, b))) {
          out.set(C.meet(a, b));
          changed = true;
        }
  }
  return out;
}

inline ElementSet join_closure(const Lattice& C, const ElementSet& gens) {
  ElementSet out = gens;
  out.set(C.bottom());
  bool changed = true;
  while (changed) {
    changed = false;
    const auto members = elements_of(out);
    for (Elem a : members)
      for (Elem b : members)
        if (!out.test(C.join(a, b))) {
          out.set(C.join(a, b));
          changed = true;
        }
  }
  return out;
}

}  // namespace detail

/// Validates that `embed` is an injective bounded lattice homomorphism and
/// caches F(C) and I(C).
inline Completion make_completion(LatticePtr source, LatticePtr target, ElemMap embed) {
  if (embed.size() != source->size()) throw Error(ErrorKind::carrier_mismatch, "embedding has the wrong domain size");
  for (Elem v : embed)
    if (v >= target->size()) throw Error(ErrorKind::carrier_mismatch, "embedding leaves the target carrier");
  if (!is_injective(embed, target->size())) throw Error(ErrorKind::not_a_homomorphism, "embedding is not injective");
  if (!is_homomorphism(*source, *target, embed))
    throw Error(ErrorKind::not_a_homomorphism, "embedding does not preserve meets, joins and bounds");
  Completion c{std::move(source), std::move(target), std::move(embed), {}, {}};
  const ElementSet img = c.image();
  c.filter_elements = detail::meet_closure(c.C(), img);
  c.ideal_elements = detail::join_closure(c.C(), img);
  return c;
}

inline Completion identity_completion(LatticePtr L) {
  const std::size_t n = L->size();
  return make_completion(L, L, identity_map(n));
}

inline Completion identity_completion(const Lattice& L) { return identity_completion(share(L)); }

/// The result of a density check; `counterexample` is an element that is not
/// a join of filter elements below it or not a meet of ideal elements above it.
struct DensityVerdict {
  bool dense = true;
  std::optional<Elem> counterexample;
};

inline DensityVerdict is_dense(const Completion& c) {
  const Lattice& C = c.C();
  for (Elem u = 0; u < C.size(); ++u) {
    const bool join_of_meets = C.join_all(c.filter_elements & C.poset().down(u)) == u;
    const bool meet_of_joins = C.meet_all(c.ideal_elements & C.poset().up(u)) == u;
    if (!join_of_meets || !meet_of_joins) return {false, u};
  }
  return {};
}

enum class CompactnessVariant { base, directed, filter_ideal };

inline const char* to_string(CompactnessVariant v) {
  switch (v) {
    case CompactnessVariant::base: return "base";
    case CompactnessVariant::directed: return "C'";
    case CompactnessVariant::filter_ideal: return "C''";
  }
  return "?";
}

/// Outcome of a compactness check. On failure, S and T are subsets of L with
/// ⋀e(S) <= ⋁e(T) in the target that no finite part of them witnesses. The
/// finite case records them as element sets; symbolic instances fill the
/// textual descriptions instead.
struct CompactnessWitness {
  CompactnessVariant variant = CompactnessVariant::base;
  bool pass = true;
  ElementSet S;
  ElementSet T;
  std::string S_description;
  std::string T_description;
  /// Set when the other variants were also evaluated and gave the same verdict.
  bool variants_agree = true;
};

namespace detail {

// For every subset S ⊆ L the pair (⋀_C e(S), ⋀_L S) together with one
// generating set; closing the generator pairs under componentwise meet
// reaches every subset's pair.
struct TrackedPair {
  Elem in_target;
  Elem in_source;
  ElementSet generators;
};

template <bool Meet>
inline std::vector<TrackedPair> subset_pairs(const Completion& c) {
  const Lattice& L = c.L();
  const Lattice& C = c.C();
  auto op_c = [&](Elem a, Elem b) { return Meet ? C.meet(a, b) : C.join(a, b); };
  auto op_l = [&](Elem a, Elem b) { return Meet ? L.meet(a, b) : L.join(a, b); };
  std::vector<TrackedPair> pairs{{Meet ? C.top() : C.bottom(), Meet ? L.top() : L.bottom(), ElementSet(L.size())}};
  std::vector<bool> seen(C.size() * L.size(), false);
  seen[pairs[0].in_target * L.size() + pairs[0].in_source] = true;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (Elem a = 0; a < L.size(); ++a) {
      const Elem t = op_c(pairs[i].in_target, c.embed[a]);
      const Elem s = op_l(pairs[i].in_source, a);
      if (seen[t * L.size() + s]) continue;
      seen[t * L.size() + s] = true;
      ElementSet gens = pairs[i].generators;
      gens.set(a);
      pairs.push_back({t, s, std::move(gens)});
    }
  }
  return pairs;
}

inline CompactnessWitness compact_base(const Completion& c) {
  CompactnessWitness w;
  w.variant = CompactnessVariant::base;
  const auto meets = subset_pairs<true>(c);
  const auto joins = subset_pairs<false>(c);
  for (const auto& m : meets)
    for (const auto& j : joins)
      if (c.C().leq(m.in_target, j.in_target) && !c.L().leq(m.in_source, j.in_source)) {
        w.pass = false;
        w.S = m.generators;
        w.T = j.generators;
        return w;
      }
  return w;
}

// Every finite down-directed S has a least element a and every finite
// up-directed T a greatest element b, so ⋀e(S) = e(a) and ⋁e(T) = e(b); the
// sets ↑a and ↓b represent all of them.
inline CompactnessWitness compact_directed(const Completion& c) {
  CompactnessWitness w;
  w.variant = CompactnessVariant::directed;
  const Lattice& L = c.L();
  for (Elem a = 0; a < L.size(); ++a)
    for (Elem b = 0; b < L.size(); ++b) {
      const ElementSet S = L.poset().up(a);
      const ElementSet T = L.poset().down(b);
      Elem meet_s = c.C().top(), join_t = c.C().bottom();
      for_each_element(S, [&](Elem s) { meet_s = c.C().meet(meet_s, c.embed[s]); });
      for_each_element(T, [&](Elem t) { join_t = c.C().join(join_t, c.embed[t]); });
      if (!c.C().leq(meet_s, join_t)) continue;
      bool found = false;
      for_each_element(S, [&](Elem s) {
        for_each_element(T, [&](Elem t) { found = found || L.leq(s, t); });
      });
      if (!found) {
        w.pass = false;
        w.S = S;
        w.T = T;
        return w;
      }
    }
  return w;
}

// Filters of a finite lattice are the principal up-sets and ideals the
// principal down-sets.
inline CompactnessWitness compact_filter_ideal(const Completion& c) {
  CompactnessWitness w;
  w.variant = CompactnessVariant::filter_ideal;
  const Lattice& L = c.L();
  for (Elem a = 0; a < L.size(); ++a)
    for (Elem b = 0; b < L.size(); ++b) {
      const ElementSet F = L.poset().up(a);
      const ElementSet I = L.poset().down(b);
      Elem meet_f = c.C().top(), join_i = c.C().bottom();
      for_each_element(F, [&](Elem s) { meet_f = c.C().meet(meet_f, c.embed[s]); });
      for_each_element(I, [&](Elem t) { join_i = c.C().join(join_i, c.embed[t]); });
      if (c.C().leq(meet_f, join_i) && (F & I).none()) {
        w.pass = false;
        w.S = F;
        w.T = I;
        return w;
      }
    }
  return w;
}

}  // namespace detail

/// Evaluates all three formulations, returns the requested one and records
/// whether the verdicts agree.
inline CompactnessWitness is_compact(const Completion& c, CompactnessVariant variant = CompactnessVariant::base) {
  const CompactnessWitness all[] = {detail::compact_base(c), detail::compact_directed(c),
                                    detail::compact_filter_ideal(c)};
  CompactnessWitness out = all[static_cast<int>(variant)];
  out.variants_agree = all[0].pass == all[1].pass && all[1].pass == all[2].pass;
  return out;
}

/// An isomorphism between the two targets sending e1(a) to e2(a) for every a.
inline std::optional<ElemMap> isomorphism_over_source(const Completion& c1, const Completion& c2) {
  if (c1.L().size() != c2.L().size()) return std::nullopt;
  std::vector<std::optional<Elem>> fixed(c1.C().size());
  for (Elem a = 0; a < c1.embed.size(); ++a) fixed[c1.embed[a]] = c2.embed[a];
  return find_isomorphism(c1.C(), c2.C(), fixed);
}

/// True when the embedding is onto, i.e. an isomorphism L ≅ C.
inline bool embedding_is_isomorphism(const Completion& c) { return c.embed.size() == c.C().size(); }

// ---------------------------------------------------------------------------
// Restricted distributivity

struct DistributivityVerdict {
  bool holds = true;
  Elem lhs = 0;
  Elem rhs = 0;
  std::size_t transversals = 0;
};

namespace detail {

inline bool down_directed(const Lattice& L, const ElementSet& Y) {
  if (Y.none()) return false;
  bool ok = true;
  for_each_element(Y, [&](Elem a) {
    for_each_element(Y, [&](Elem b) {
      if (!ok) return;
      ElementSet lower = L.poset().down(a) & L.poset().down(b) & Y;
      ok = lower.any();
    });
  });
  return ok;
}

/// Minimal sets meeting every member of `family`.
inline std::vector<ElementSet> minimal_transversals(const std::vector<ElementSet>& family, std::size_t n) {
  std::vector<ElementSet> current{ElementSet(n)};
  for (const auto& Y : family) {
    std::vector<ElementSet> next;
    std::unordered_set<ElementSet, ElementSetHash> seen;
    for (const auto& Z : current) {
      if ((Z & Y).any()) {
        if (seen.insert(Z).second) next.push_back(Z);
        continue;
      }
      for_each_element(Y, [&](Elem y) {
        ElementSet W = Z;
        W.set(y);
        if (seen.insert(W).second) next.push_back(std::move(W));
      });
    }
    std::vector<ElementSet> minimal;
    for (const auto& Z : next) {
      bool is_min = true;
      for (const auto& W : next)
        if (W != Z && W.is_subset_of(Z)) {
          is_min = false;
          break;
        }
      if (is_min) minimal.push_back(Z);
    }
    current = std::move(minimal);
  }
  return current;
}

}  // namespace detail

/// Compares ⋁{⋀e(Y) | Y ∈ 𝒴} with ⋀{⋁e(Z) | Z a minimal transversal of 𝒴}.
/// Larger transversals only raise ⋁e(Z), so the minimal ones determine the meet.
inline DistributivityVerdict restricted_distributivity_check(const Completion& c, const std::vector<ElementSet>& family) {
  const Lattice& L = c.L();
  const Lattice& C = c.C();
  for (const auto& Y : family) {
    if (Y.size() != L.size()) throw Error(ErrorKind::carrier_mismatch, "family member has the wrong width");
    if (!detail::down_directed(L, Y)) throw Error(ErrorKind::not_down_directed, "family member is not down-directed");
  }
  auto embed_set = [&](const ElementSet& s) {
    ElementSet out(C.size());
    for_each_element(s, [&](Elem a) { out.set(c.embed[a]); });
    return out;
  };
  DistributivityVerdict v;
  v.lhs = C.bottom();
  for (const auto& Y : family) v.lhs = C.join(v.lhs, C.meet_all(embed_set(Y)));
  const auto transversals = detail::minimal_transversals(family, L.size());
  v.transversals = transversals.size();
  v.rhs = C.top();
  for (const auto& Z : transversals) v.rhs = C.meet(v.rhs, C.join_all(embed_set(Z)));
  v.holds = v.lhs == v.rhs;
  return v;
}

// ---------------------------------------------------------------------------
// Symbolic completions

/// A completion whose target is infinite and is decided by hand-coded
/// routines. Instances register only the variants they can decide.
class SymbolicCompletion {
 public:
  virtual ~SymbolicCompletion() = default;
  virtual std::string name() const = 0;
  virtual std::optional<CompactnessWitness> decide_compactness(CompactnessVariant variant) const = 0;
};

inline CompactnessWitness is_compact(const SymbolicCompletion& c, CompactnessVariant variant = CompactnessVariant::base) {
  auto w = c.decide_compactness(variant);
  if (!w)
    throw Error(ErrorKind::symbolic_unsupported_variant,
                c.name() + " has no decision routine for compactness variant " + to_string(variant));
  return *w;
}

}  // namespace canext
