#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "canext/completions/canonical.hpp"
#include "canext/completions/product.hpp"
#include "canext/core/errors.hpp"
#include "canext/core/limits.hpp"
#include "canext/duality/duality.hpp"
#include "canext/order/congruence.hpp"
#include "canext/order/constructions.hpp"
#include "canext/order/maps.hpp"
#include "canext/topology/order_topologies.hpp"

namespace canext {

// ---------------------------------------------------------------------------
// Irreducibles

struct PerfectLatticeView {
  ElementSet J;        // completely join irreducibles
  ElementSet M;        // completely meet irreducibles
  ElementSet J_omega;  // finite joins of J (the empty join included)
  ElementSet M_omega;  // finite meets of M
  bool join_generates = false;
  bool meet_generates = false;
  /// Every finite lattice is doubly algebraic; nothing beyond that is checked.
  bool doubly_algebraic = true;
};

inline PerfectLatticeView irreducibles(const Lattice& C) {
  PerfectLatticeView v;
  v.J = join_irreducibles(C);
  v.M = meet_irreducibles(C);
  v.J_omega = detail::join_closure(C, v.J);
  v.M_omega = detail::meet_closure(C, v.M);
  v.join_generates = v.meet_generates = true;
  for (Elem u = 0; u < C.size(); ++u) {
    v.join_generates = v.join_generates && C.join_all(v.J & C.poset().down(u)) == u;
    v.meet_generates = v.meet_generates && C.meet_all(v.M & C.poset().up(u)) == u;
  }
  return v;
}

// ---------------------------------------------------------------------------
// The (★) condition and its dual

struct StarEntry {
  Elem p = 0;
  ElementSet outside;        // (↑p)ᶜ, or (↓m)ᶜ on the dual side
  ElementSet extremal;       // M_p = max (↑p)ᶜ, or J_m = min (↓m)ᶜ
  bool decomposes = false;   // outside = ↓M_p (dually ↑J_m)
  bool irreducible = false;  // M_p ⊆ M∞ (dually J_m ⊆ J∞)

  bool pass() const { return decomposes && irreducible; }
};

struct StarReport {
  std::vector<StarEntry> star;       // one per p ∈ J∞
  std::vector<StarEntry> star_dual;  // one per m ∈ M∞

  bool pass() const {
    return std::all_of(star.begin(), star.end(), [](const auto& e) { return e.pass(); }) &&
           std::all_of(star_dual.begin(), star_dual.end(), [](const auto& e) { return e.pass(); });
  }
  const StarEntry* find(Elem p) const {
    for (const auto& e : star)
      if (e.p == p) return &e;
    return nullptr;
  }
};

inline StarReport star_check(const Lattice& C) {
  const auto view = irreducibles(C);
  StarReport r;
  for_each_element(view.J, [&](Elem p) {
    StarEntry e{p, ~C.poset().up(p), {}, false, false};
    e.extremal = C.poset().maximal(e.outside);
    e.decomposes = C.poset().downset(e.extremal) == e.outside;
    e.irreducible = e.extremal.is_subset_of(view.M);
    r.star.push_back(std::move(e));
  });
  for_each_element(view.M, [&](Elem m) {
    StarEntry e{m, ~C.poset().down(m), {}, false, false};
    e.extremal = C.poset().minimal(e.outside);
    e.decomposes = C.poset().upset(e.extremal) == e.outside;
    e.irreducible = e.extremal.is_subset_of(view.J);
    r.star_dual.push_back(std::move(e));
  });
  return r;
}

// ---------------------------------------------------------------------------
// Teeth

struct Tooth {
  Elem k = 0;
  ElementSet tooth;              // ↑k (upper side) or ↓k (lower side)
  ElementSet partner;            // ↓M_k with M_k = max (↑k)ᶜ, dually ↑J_k
  std::vector<Elem> generators;  // M_k, dually J_k
  bool complementary = false;    // partner = toothᶜ
  bool intersection = false;     // ↑k = ⋂_{m ∈ M_k} (↓m)ᶜ, dually
  bool compact_open = false;     // tooth is the least σ↑ (σ↓) open around k
};

struct ToothBasis {
  std::vector<Tooth> upper;  // k ∈ J∞_ω
  std::vector<Tooth> lower;  // k ∈ M∞_ω

  bool valid() const {
    auto ok = [](const Tooth& t) { return t.complementary && t.intersection && t.compact_open; };
    return std::all_of(upper.begin(), upper.end(), ok) && std::all_of(lower.begin(), lower.end(), ok);
  }
};

namespace detail {

inline Tooth make_tooth(const Lattice& C, const FiniteTopology& scott, Elem k, bool up) {
  const Poset& P = C.poset();
  Tooth t;
  t.k = k;
  t.tooth = up ? P.up(k) : P.down(k);
  const ElementSet outside = ~t.tooth;
  const ElementSet ends = up ? P.maximal(outside) : P.minimal(outside);
  t.generators = elements_of(ends);
  t.partner = up ? P.downset(ends) : P.upset(ends);
  t.complementary = t.partner == outside;
  ElementSet meet = full_set(C.size());
  for (Elem m : t.generators) meet &= ~(up ? P.down(m) : P.up(m));
  t.intersection = meet == t.tooth;
  t.compact_open = scott.is_open(t.tooth) && scott.neighbourhood(k) == t.tooth;
  return t;
}

}  // namespace detail

/// Upper teeth ↑k for k ∈ J∞_ω paired with the lower teeth ↓M_k, and the
/// dual family ↓k for k ∈ M∞_ω paired with ↑J_k.
inline ToothBasis tooth_basis(const Lattice& C) {
  const auto star = star_check(C);
  if (!star.pass()) throw Error(ErrorKind::star_failed, "the (★) condition fails, so no tooth basis is available");
  const auto view = irreducibles(C);
  const auto scott_up = scott_topology(C, Side::up);
  const auto scott_down = scott_topology(C, Side::down);
  ToothBasis b;
  for_each_element(view.J_omega, [&](Elem k) { b.upper.push_back(detail::make_tooth(C, scott_up, k, true)); });
  for_each_element(view.M_omega, [&](Elem k) { b.lower.push_back(detail::make_tooth(C, scott_down, k, false)); });
  return b;
}

// ---------------------------------------------------------------------------
// Products and sublattices

struct IrreduciblesComparison {
  ElementSet direct_J, formula_J;
  ElementSet direct_M, formula_M;

  bool pass() const { return direct_J == formula_J && direct_M == formula_M; }
};

/// Compares J∞(A^X) and M∞(A^X) with {π_x♭(p)} and {π_x♯(m)}.
inline IrreduciblesComparison product_irreducibles_check(const Lattice& A, std::size_t X,
                                                         const Limits& limits = Limits::from_env()) {
  if (X == 0 || int_pow(A.size(), X) > limits.product_carrier)
    throw Error(ErrorKind::cap_exceeded, "product carrier exceeds " + std::to_string(limits.product_carrier));
  const Lattice bare = A.without_operations();
  const Lattice P = power(bare, X);
  const std::vector<std::size_t> sizes(X, A.size());
  IrreduciblesComparison out{join_irreducibles(P), ElementSet(P.size()), meet_irreducibles(P), ElementSet(P.size())};
  const auto JA = join_irreducibles(bare);
  const auto MA = meet_irreducibles(bare);
  for (std::size_t x = 0; x < X; ++x) {
    ElemMap proj(P.size());
    for (Elem t = 0; t < P.size(); ++t) proj[t] = product_coordinates(sizes, t)[x];
    const auto adj = adjoints(P, bare, proj);
    for_each_element(JA, [&](Elem p) { out.formula_J.set(adj.lower[p]); });
    for_each_element(MA, [&](Elem m) { out.formula_M.set(adj.upper[m]); });
  }
  return out;
}

/// D ⊆ A^X given by its carrier; compares J∞(D), M∞(D) with the images of
/// J(π_x(D)), M(π_x(D)) under the adjoints of the restricted projections.
inline IrreduciblesComparison sublattice_irreducibles_check(const Lattice& A, std::size_t X, const ElementSet& carrier,
                                                            const Limits& limits = Limits::from_env()) {
  if (X == 0 || int_pow(A.size(), X) > limits.product_carrier)
    throw Error(ErrorKind::cap_exceeded, "product carrier exceeds " + std::to_string(limits.product_carrier));
  const Lattice bare = A.without_operations();
  const Lattice P = power(bare, X);
  const auto D = sublattice(P, carrier);
  const std::vector<std::size_t> sizes(X, A.size());
  IrreduciblesComparison out{join_irreducibles(D.lattice), ElementSet(D.lattice.size()), meet_irreducibles(D.lattice),
                             ElementSet(D.lattice.size())};
  for (std::size_t x = 0; x < X; ++x) {
    ElementSet image(A.size());
    for (Elem d : D.inclusion) image.set(product_coordinates(sizes, d)[x]);
    const auto Px = sublattice(bare, image);
    std::vector<Elem> local(A.size(), 0);
    for (Elem i = 0; i < Px.inclusion.size(); ++i) local[Px.inclusion[i]] = i;
    ElemMap proj(D.lattice.size());
    for (Elem i = 0; i < D.lattice.size(); ++i) proj[i] = local[product_coordinates(sizes, D.inclusion[i])[x]];
    const auto adj = adjoints(D.lattice, Px.lattice, proj);
    for_each_element(join_irreducibles(Px.lattice), [&](Elem p) { out.formula_J.set(adj.lower[p]); });
    for_each_element(meet_irreducibles(Px.lattice), [&](Elem m) { out.formula_M.set(adj.upper[m]); });
  }
  return out;
}

struct ProductExtensionVerdict {
  bool isomorphic = false;
  std::optional<ElemMap> iso;  // from canext(∏ L_x) onto ∏ canext(L_x), fixing ∏ L_x
};

/// canext(∏ L_x) ≅ ∏ canext(L_x) over the embedded product. Over a finite
/// discrete index set a Boolean product is the full product.
inline ProductExtensionVerdict boolean_product_canext_check(const std::vector<Lattice>& factors,
                                                           const Limits& limits = Limits::from_env()) {
  if (factors.empty()) throw Error(ErrorKind::invalid_document, "no factors");
  std::size_t total = 1;
  for (const auto& f : factors) total *= f.size();
  if (total > limits.product_carrier)
    throw Error(ErrorKind::cap_exceeded, "product carrier exceeds " + std::to_string(limits.product_carrier));
  std::vector<Completion> exts;
  for (const auto& f : factors) exts.push_back(canonical_extension(f.without_operations()));
  std::vector<const Completion*> ptrs;
  for (const auto& c : exts) ptrs.push_back(&c);
  const Completion prod = product_completion(ptrs);
  const Completion direct = canonical_extension(share(prod.L()));
  ProductExtensionVerdict v;
  v.iso = isomorphism_over_source(direct, prod);
  v.isomorphic = v.iso.has_value();
  return v;
}

// ---------------------------------------------------------------------------
// Preservation of (★) under quotients and the bound on |max (↑p)ᶜ|

struct StarQuotientVerdict {
  bool star_holds = false;  // the quotient passes star_check
  bool covered = false;     // M_{p'} ⊆ max h(M_p) with p = h♭(p')
  std::optional<Elem> witness;

  bool pass() const { return star_holds && covered; }
};

inline StarQuotientVerdict star_preserved_under_H(const Lattice& C, const Congruence& theta) {
  if (!star_check(C).pass()) throw Error(ErrorKind::star_failed, "source lattice fails (★)");
  const Lattice bare = C.without_operations();
  const auto q = quotient(bare, theta);
  const Lattice& E = q.lattice;
  const auto report = star_check(E);
  StarQuotientVerdict v;
  v.star_holds = report.pass();
  v.covered = true;
  const auto adj = adjoints(bare, E, q.map);
  const auto source = star_check(bare);
  for (const auto& entry : report.star) {
    const Elem p = adj.lower[entry.p];
    const StarEntry* src = source.find(p);
    bool ok = src != nullptr;
    if (ok) {
      ElementSet image(E.size());
      for_each_element(src->extremal, [&](Elem m) { image.set(q.map[m]); });
      ok = entry.extremal.is_subset_of(E.poset().maximal(image));
    }
    if (!ok && v.covered) {
      v.covered = false;
      v.witness = entry.p;
    }
  }
  return v;
}

/// All sublattices of L (closed under the bounds and attached operations),
/// as carriers, found by closing S ∪ {a} from the least one.
inline std::vector<ElementSet> subalgebras(const Lattice& L, std::size_t max_count = 20000) {
  std::set<std::vector<Elem>> seen;
  std::vector<ElementSet> out;
  std::vector<ElementSet> frontier{sublattice_closure(L, ElementSet(L.size()))};
  seen.insert(elements_of(frontier[0]));
  out.push_back(frontier[0]);
  while (!frontier.empty()) {
    std::vector<ElementSet> next;
    for (const auto& S : frontier)
      for (Elem a = 0; a < L.size(); ++a) {
        if (S.test(a)) continue;
        ElementSet T = S;
        T.set(a);
        T = sublattice_closure(L, T);
        if (!seen.insert(elements_of(T)).second) continue;
        if (out.size() >= max_count) throw Error(ErrorKind::cap_exceeded, "too many subalgebras to enumerate");
        out.push_back(T);
        next.push_back(T);
      }
    frontier = std::move(next);
  }
  return out;
}

/// max over p ∈ J∞(E) of |max (↑p)ᶜ|.
inline std::size_t star_width(const Lattice& E) {
  std::size_t w = 0;
  for (const auto& entry : star_check(E).star) w = std::max(w, entry.extremal.count());
  return w;
}

struct RemarkBound {
  std::size_t bound = 0;
  std::size_t subalgebra_count = 0;
  ElementSet witness_subalgebra;  // a B ∈ S(A) attaining the bound
  std::size_t members_checked = 0;
  bool verified = true;
  std::optional<std::string> violation;
};

/// n = max over B ∈ S(A), p ∈ J(B) of |max_B (↑p)ᶜ|, then checked against
/// members of H(S(P(A))) generated from A and A² under the caps.
inline RemarkBound remark_bound(const Lattice& A, const Limits& limits = Limits::from_env()) {
  if (A.size() > limits.product_carrier) throw Error(ErrorKind::cap_exceeded, "algebra too large");
  RemarkBound r;
  const auto subs = subalgebras(A);
  r.subalgebra_count = subs.size();
  r.witness_subalgebra = subs.front();
  for (const auto& S : subs) {
    const std::size_t w = star_width(sublattice(A, S).lattice);
    if (w > r.bound) {
      r.bound = w;
      r.witness_subalgebra = S;
    }
  }
  auto check = [&](const Lattice& E, const std::string& what) {
    ++r.members_checked;
    const std::size_t w = star_width(canonical_extension(E.without_operations()).C());
    if (w > r.bound && r.verified) {
      r.verified = false;
      r.violation = what + " has width " + std::to_string(w);
    }
  };
  std::vector<Lattice> powers{A};
  if (A.size() * A.size() <= limits.product_carrier) powers.push_back(product(A, A));
  for (std::size_t k = 0; k < powers.size(); ++k) {
    const std::string pname = k == 0 ? "A" : "A^2";
    const auto members = k == 0 ? subs : subalgebras(powers[k]);
    for (std::size_t s = 0; s < members.size(); ++s) {
      const Lattice B = sublattice(powers[k], members[s]).lattice;
      const std::string bname = pname + " subalgebra " + std::to_string(s);
      check(B, bname);
      if (B.size() > limits.congruence_carrier) continue;
      for (const auto& theta : enum_congruences(B, limits))
        check(quotient(B, theta).lattice, bname + " quotient by " + std::to_string(theta.block_count()) + " blocks");
    }
  }
  return r;
}

}  // namespace canext
