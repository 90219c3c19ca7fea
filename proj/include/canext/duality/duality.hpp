#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "canext/completions/completion.hpp"
#include "canext/core/errors.hpp"
#include "canext/core/limits.hpp"
#include "canext/envelopes/envelopes.hpp"
#include "canext/order/catalog.hpp"
#include "canext/order/constructions.hpp"
#include "canext/order/io.hpp"
#include "canext/topology/finite_topology.hpp"

namespace canext {

// ---------------------------------------------------------------------------
// Kripke frames

/// A finite set of worlds with one binary relation; succ[x] = {y | R(x, y)}.
struct KripkeFrame {
  std::vector<std::string> worlds;
  std::vector<ElementSet> succ;

  std::size_t size() const { return worlds.size(); }
  bool related(Elem x, Elem y) const { return succ[x].test(y); }

  static KripkeFrame from_pairs(std::vector<std::string> worlds, const std::vector<std::pair<Elem, Elem>>& R) {
    KripkeFrame fr;
    const std::size_t n = worlds.size();
    fr.worlds = std::move(worlds);
    fr.succ.assign(n, ElementSet(n));
    for (const auto& [x, y] : R) {
      if (x >= n || y >= n) throw Error(ErrorKind::unknown_element, "relation pair leaves the frame");
      fr.succ[x].set(y);
    }
    return fr;
  }

  friend bool operator==(const KripkeFrame&, const KripkeFrame&) = default;
};

inline KripkeFrame frame_from_json(const io::Json& doc) {
  try {
    if (!doc.is_object() || !doc.contains("worlds")) throw Error(ErrorKind::invalid_document, "frame needs 'worlds'");
    auto worlds = doc.at("worlds").get<std::vector<std::string>>();
    auto index = [&](const std::string& w) -> Elem {
      auto it = std::find(worlds.begin(), worlds.end(), w);
      if (it == worlds.end()) throw Error(ErrorKind::unknown_element, "unknown world '" + w + "'");
      return static_cast<Elem>(it - worlds.begin());
    };
    for (std::size_t i = 0; i < worlds.size(); ++i)
      if (index(worlds[i]) != i) throw Error(ErrorKind::duplicate_element, "world '" + worlds[i] + "' listed twice");
    std::vector<std::pair<Elem, Elem>> R;
    if (auto rel = doc.find("relations"); rel != doc.end() && rel->contains("R"))
      for (const auto& pair : rel->at("R")) {
        if (!pair.is_array() || pair.size() != 2) throw Error(ErrorKind::invalid_document, "relation entries are pairs");
        R.emplace_back(index(pair[0].get<std::string>()), index(pair[1].get<std::string>()));
      }
    return KripkeFrame::from_pairs(std::move(worlds), R);
  } catch (const io::Json::exception& e) {
    throw Error(ErrorKind::invalid_document, e.what());
  }
}

inline io::Json frame_to_json(const KripkeFrame& fr) {
  io::Json R = io::Json::array();
  for (Elem x = 0; x < fr.size(); ++x)
    for_each_element(fr.succ[x], [&](Elem y) { R.push_back({fr.worlds[x], fr.worlds[y]}); });
  return {{"worlds", fr.worlds}, {"relations", {{"R", R}}}};
}

/// A bijection on worlds carrying one relation onto the other.
inline std::optional<ElemMap> frame_isomorphism(const KripkeFrame& a, const KripkeFrame& b) {
  const std::size_t n = a.size();
  if (b.size() != n) return std::nullopt;
  ElemMap perm(n);
  std::iota(perm.begin(), perm.end(), Elem{0});
  do {
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x)
      for (Elem y = 0; y < n && ok; ++y) ok = a.related(x, y) == b.related(perm[x], perm[y]);
    if (ok) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Modal algebras

/// A Boolean lattice carrying unary operations "complement" and "diamond".
struct ModalAlgebra {
  Lattice lattice;

  const ElemMap& complement() const { return lattice.operation("complement").table; }
  const ElemMap& diamond() const { return lattice.operation("diamond").table; }
};

/// First pair (a, b) with ◇(a ∨ b) ≠ ◇a ∨ ◇b, or (0, 0) when ◇0 ≠ 0.
inline std::optional<std::pair<Elem, Elem>> join_preservation_failure(const Lattice& L, const ElemMap& d) {
  if (d[L.bottom()] != L.bottom()) return std::pair{L.bottom(), L.bottom()};
  for (Elem a = 0; a < L.size(); ++a)
    for (Elem b = a + 1; b < L.size(); ++b)
      if (d[L.join(a, b)] != L.join(d[a], d[b])) return std::pair{a, b};
  return std::nullopt;
}

/// Validates that L is Boolean and ◇ is an operator, and attaches both
/// operations (replacing any existing ones of the same name).
inline ModalAlgebra make_modal_algebra(const Lattice& L, const ElemMap& diamond) {
  const auto comp = boolean_complement(L);
  if (!comp) throw Error(ErrorKind::not_boolean, "carrier is not a Boolean lattice");
  if (diamond.size() != L.size()) throw Error(ErrorKind::carrier_mismatch, "diamond table has the wrong size");
  if (auto bad = join_preservation_failure(L, diamond))
    throw Error(ErrorKind::not_join_preserving,
                "diamond fails to preserve the join of " + L.name(bad->first) + " and " + L.name(bad->second));
  ModalAlgebra A{L.without_operations()};
  for (const auto& [name, op] : L.operations())
    if (name != "complement" && name != "diamond") A.lattice.add_operation(op);
  A.lattice.add_operation({"complement", 1, {Monotonicity::reversing}, *comp});
  A.lattice.add_operation({"diamond", 1, {Monotonicity::preserving}, diamond});
  return A;
}

/// Reads a lattice document with top-level "complement" and "diamond" tables.
inline ModalAlgebra modal_algebra_from_lattice(const Lattice& L) {
  if (!L.has_operation("diamond")) throw Error(ErrorKind::unknown_operation, "modal algebra needs a 'diamond' operation");
  const auto comp = boolean_complement(L);
  if (comp && L.has_operation("complement") && L.operation("complement").table != *comp)
    throw Error(ErrorKind::not_boolean, "'complement' table is not the Boolean complement");
  return make_modal_algebra(L, L.operation("diamond").table);
}

/// (P(X), ¬, ◇_R) with ◇_R(A) = {x | R(x, y) for some y ∈ A}. Subsets are
/// indexed by bitmask.
inline ModalAlgebra complex_algebra(const KripkeFrame& fr, const Limits& limits = Limits::from_env()) {
  const std::size_t n = fr.size();
  if (n > limits.powerset_worlds)
    throw Error(ErrorKind::cap_exceeded, "complex algebra is capped at " + std::to_string(limits.powerset_worlds) + " worlds");
  Lattice P = catalog::powerset(fr.worlds);
  const std::size_t m = P.size();
  std::vector<std::uint32_t> pre(n, 0);
  for (Elem x = 0; x < n; ++x)
    for_each_element(fr.succ[x], [&](Elem y) { pre[y] |= 1u << x; });
  ElemMap d(m, 0), c(m);
  for (Elem A = 0; A < m; ++A) {
    for (Elem y = 0; y < n; ++y)
      if (A >> y & 1) d[A] |= pre[y];
    c[A] = static_cast<Elem>((m - 1) ^ A);
  }
  P.add_operation({"complement", 1, {Monotonicity::reversing}, c});
  P.add_operation({"diamond", 1, {Monotonicity::preserving}, d});
  return ModalAlgebra{std::move(P)};
}

/// Worlds are the atoms, R(x, y) iff x ≤ ◇y.
inline KripkeFrame at_functor(const ModalAlgebra& A) {
  const Lattice& L = A.lattice;
  if (!is_boolean(L)) throw Error(ErrorKind::not_boolean, "carrier is not a Boolean lattice");
  const ElemMap& d = A.diamond();
  if (auto bad = join_preservation_failure(L, d))
    throw Error(ErrorKind::not_join_preserving,
                "diamond fails to preserve the join of " + L.name(bad->first) + " and " + L.name(bad->second));
  const auto at = elements_of(atoms(L));
  std::vector<std::string> names;
  for (Elem a : at) names.push_back(L.name(a));
  std::vector<std::pair<Elem, Elem>> R;
  for (Elem i = 0; i < at.size(); ++i)
    for (Elem j = 0; j < at.size(); ++j)
      if (L.leq(at[i], d[at[j]])) R.emplace_back(i, j);
  return KripkeFrame::from_pairs(std::move(names), R);
}

/// Isomorphism of modal algebras: a lattice isomorphism commuting with ◇
/// (complements are preserved by any lattice isomorphism).
inline std::optional<ElemMap> modal_isomorphism(const ModalAlgebra& a, const ModalAlgebra& b) {
  std::optional<ElemMap> found;
  const ElemMap& da = a.diamond();
  const ElemMap& db = b.diamond();
  for_each_isomorphism(a.lattice.without_operations(), b.lattice.without_operations(), [&](const ElemMap& f) {
    for (Elem x = 0; x < f.size(); ++x)
      if (f[da[x]] != db[f[x]]) return true;
    found = f;
    return false;
  });
  return found;
}

// ---------------------------------------------------------------------------
// Stone and the dual space

/// a ↦ {atoms below a}, into the powerset of the atoms of B. Ultrafilters are
/// represented by their atoms.
inline Completion stone_embedding(const Lattice& B) {
  if (!is_boolean(B)) throw Error(ErrorKind::not_boolean, "Stone embedding needs a Boolean lattice");
  const auto at = elements_of(atoms(B));
  std::vector<std::string> names;
  for (Elem a : at) names.push_back(B.name(a));
  ElemMap embed(B.size(), 0);
  for (Elem b = 0; b < B.size(); ++b)
    for (std::size_t i = 0; i < at.size(); ++i)
      if (B.leq(at[i], b)) embed[b] |= Elem{1} << i;
  return make_completion(share(B.without_operations()), share(catalog::powerset(names)), std::move(embed));
}

/// A frame with an admissible family: the shadows {atoms ≤ e(a)} of the
/// embedded elements.
struct GeneralFrameFinite {
  KripkeFrame frame;
  std::vector<ElementSet> admissible;

  FiniteTopology topology() const { return {frame.size(), admissible}; }
  /// The shadows generate the discrete topology iff they separate worlds.
  bool separates_worlds() const {
    for (Elem x = 0; x < frame.size(); ++x)
      for (Elem y = 0; y < frame.size(); ++y) {
        if (x == y) continue;
        bool split = false;
        for (const auto& S : admissible) split = split || (S.test(x) && !S.test(y));
        if (!split) return false;
      }
    return true;
  }
};

/// Recovers the worlds as the atoms of the completion target and R from the
/// σ-extended diamond by R(x, y) iff x ≤ ◇^σ(y).
inline GeneralFrameFinite dual_space_from_canext(const Completion& c) {
  const Lattice& C = c.C();
  if (!is_boolean(C)) throw Error(ErrorKind::not_boolean, "completion target is not Boolean");
  const auto diamond_sigma = operation_envelopes(c, "diamond").sigma;
  const auto at = elements_of(atoms(C));
  std::vector<std::string> names;
  for (Elem a : at) names.push_back(C.name(a));
  std::vector<std::pair<Elem, Elem>> R;
  for (Elem i = 0; i < at.size(); ++i)
    for (Elem j = 0; j < at.size(); ++j)
      if (C.leq(at[i], diamond_sigma[at[j]])) R.emplace_back(i, j);
  GeneralFrameFinite g{KripkeFrame::from_pairs(std::move(names), R), {}};
  for (Elem a = 0; a < c.L().size(); ++a) {
    ElementSet shadow(at.size());
    for (std::size_t i = 0; i < at.size(); ++i)
      if (C.leq(at[i], c.embed[a])) shadow.set(i);
    if (std::find(g.admissible.begin(), g.admissible.end(), shadow) == g.admissible.end()) g.admissible.push_back(shadow);
  }
  return g;
}

// ---------------------------------------------------------------------------
// Free Boolean algebras

/// The free Boolean algebra on n generators, as the subsets of the 2^n
/// valuations. Element indices are valuation bitmasks; generator x_i is
/// {α | bit i of α}. Materialized as a Lattice only up to a cap.
struct FreeBooleanAlgebra {
  std::size_t n = 0;

  std::size_t valuations() const { return std::size_t{1} << n; }
  std::size_t size() const { return std::size_t{1} << valuations(); }
  std::uint64_t top() const { return size() == 64 ? ~0ULL : (1ULL << valuations()) - 1; }
  std::uint64_t generator(std::size_t i) const {
    std::uint64_t s = 0;
    for (std::size_t a = 0; a < valuations(); ++a)
      if (a >> i & 1) s |= 1ULL << a;
    return s;
  }
  std::uint64_t complement(std::uint64_t s) const { return top() & ~s; }

  /// φ_α = ⋀{x | x ∈ α} ∧ ⋀{¬x | x ∉ α}, computed from the generators.
  std::uint64_t literal_meet(std::size_t alpha) const {
    std::uint64_t s = top();
    for (std::size_t i = 0; i < n; ++i) s &= (alpha >> i & 1) ? generator(i) : complement(generator(i));
    return s;
  }

  /// The unique homomorphism into B sending x_i to images[i]:
  /// S ↦ ⋁_{α ∈ S} ⋀ literals of α evaluated in B.
  Elem extend(const Lattice& B, const std::vector<Elem>& images, std::uint64_t s) const {
    const auto comp = boolean_complement(B);
    if (!comp) throw Error(ErrorKind::not_boolean, "target is not Boolean");
    if (images.size() != n) throw Error(ErrorKind::carrier_mismatch, "one image per generator is required");
    Elem out = B.bottom();
    for (std::size_t alpha = 0; alpha < valuations(); ++alpha) {
      if (!(s >> alpha & 1)) continue;
      Elem lit = B.top();
      for (std::size_t i = 0; i < n; ++i) lit = B.meet(lit, (alpha >> i & 1) ? images[i] : (*comp)[images[i]]);
      out = B.join(out, lit);
    }
    return out;
  }

  Lattice lattice(const Limits& limits = Limits::from_env()) const {
    if (n > limits.materialized_free_generators)
      throw Error(ErrorKind::cap_exceeded, "free Boolean algebra is materialized only up to " +
                                               std::to_string(limits.materialized_free_generators) + " generators");
    std::vector<std::string> names;
    for (std::size_t a = 0; a < valuations(); ++a) names.push_back("v" + std::to_string(a));
    return catalog::powerset(names);
  }
};

inline FreeBooleanAlgebra free_boolean_algebra(std::size_t n, const Limits& limits = Limits::from_env()) {
  if (n > limits.free_generators)
    throw Error(ErrorKind::cap_exceeded, "free Boolean algebra is capped at " + std::to_string(limits.free_generators) + " generators");
  return FreeBooleanAlgebra{n};
}

// ---------------------------------------------------------------------------
// Birkhoff duality for finite distributive lattices

inline ElementSet join_irreducibles(const Lattice& L) {
  ElementSet out(L.size());
  for (Elem p = 0; p < L.size(); ++p)
    if (p != L.bottom() && L.join_all(L.poset().down(p) & ~singleton(L.size(), p)) != p) out.set(p);
  return out;
}

inline ElementSet meet_irreducibles(const Lattice& L) {
  ElementSet out(L.size());
  for (Elem p = 0; p < L.size(); ++p)
    if (p != L.top() && L.meet_all(L.poset().up(p) & ~singleton(L.size(), p)) != p) out.set(p);
  return out;
}

/// The points are J∞(L) ordered as the prime filters ↑p under inclusion, so
/// p ⊑ q iff q ≤ p in L. Then a ↦ {p | p ≤ a} is an isomorphism from L onto
/// the up-sets of the points.
struct BirkhoffDual {
  std::vector<Elem> points;  // lattice elements of J∞(L)
  Poset order;
  Lattice upsets;            // element i is the up-set with bitmask i's listing order
  std::vector<ElementSet> upset_members;
  ElemMap iso;               // L -> upsets
};

inline void require_distributive(const Lattice& L) {
  if (auto bad = distributivity_failure(L)) {
    const auto [a, b, c] = *bad;
    throw Error(ErrorKind::not_distributive,
                "distributivity fails at (" + L.name(a) + ", " + L.name(b) + ", " + L.name(c) + ")");
  }
}

inline BirkhoffDual birkhoff_dual(const Lattice& L, const Limits& limits = Limits::from_env()) {
  require_distributive(L);
  BirkhoffDual d;
  d.points = elements_of(join_irreducibles(L));
  const std::size_t k = d.points.size();
  if (k > limits.topology_carrier) throw Error(ErrorKind::cap_exceeded, "too many join irreducibles to list up-sets");
  std::vector<std::string> names;
  for (Elem p : d.points) names.push_back(L.name(p));
  d.order = Poset::from_predicate(names, [&](Elem i, Elem j) { return L.leq(d.points[j], d.points[i]); });
  std::vector<std::string> upset_names;
  for (std::uint32_t m = 0; m < (1u << k); ++m) {
    ElementSet S(k);
    for (std::size_t i = 0; i < k; ++i)
      if (m >> i & 1) S.set(i);
    if (!d.order.is_upset(S)) continue;
    d.upset_members.push_back(S);
    std::string s = "{";
    for (std::size_t i = 0; i < k; ++i)
      if (S.test(i)) s += (s.size() > 1 ? "," : "") + names[i];
    upset_names.push_back(s + "}");
  }
  d.upsets = Lattice::from_predicate(upset_names,
                                     [&](Elem a, Elem b) { return d.upset_members[a].is_subset_of(d.upset_members[b]); });
  d.iso.assign(L.size(), 0);
  for (Elem a = 0; a < L.size(); ++a) {
    ElementSet S(k);
    for (std::size_t i = 0; i < k; ++i)
      if (L.leq(d.points[i], a)) S.set(i);
    d.iso[a] = static_cast<Elem>(std::find(d.upset_members.begin(), d.upset_members.end(), S) - d.upset_members.begin());
  }
  if (!is_order_isomorphism(L, d.upsets, d.iso)) throw std::logic_error("Birkhoff map is not an isomorphism");
  return d;
}

/// The largest u with p ≰ u. Completely meet irreducible; ↑p and ↓κ(p)
/// partition L.
inline Elem kappa(const Lattice& L, Elem p) {
  require_distributive(L);
  if (p >= L.size() || !join_irreducibles(L).test(p))
    throw Error(ErrorKind::not_join_irreducible, (p < L.size() ? L.name(p) : std::to_string(p)) + " is not join irreducible");
  const Elem k = L.join_all(~L.poset().up(p));
  if (L.leq(p, k) || !meet_irreducibles(L).test(k)) throw std::logic_error("kappa is not the expected meet irreducible");
  return k;
}

}  // namespace canext
