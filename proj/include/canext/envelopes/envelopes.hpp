#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "canext/completions/completion.hpp"
#include "canext/completions/product.hpp"
#include "canext/core/errors.hpp"
#include "canext/core/limits.hpp"
#include "canext/order/lattice.hpp"
#include "canext/order/maps.hpp"
#include "canext/topology/order_topologies.hpp"

namespace canext {

enum class EnvelopeMode {
  /// Only maximal x ∈ F ∩ ↓u and minimal y ∈ I ∩ ↑u; the inner meet (join)
  /// is antitone (monotone) in the interval, so these pairs dominate.
  extremal,
  /// Every bracketing pair; kept as the reference computation.
  full,
};

namespace detail {

template <bool Sigma>
inline ElemMap envelope(const Completion& src, const Completion& dst, const ElemMap& f, EnvelopeMode mode) {
  const Lattice& C = src.C();
  const Lattice& D = dst.C();
  const Lattice& L = src.L();
  if (f.size() != L.size()) throw Error(ErrorKind::carrier_mismatch, "map domain does not match the source lattice");
  for (Elem v : f)
    if (v >= dst.L().size()) throw Error(ErrorKind::carrier_mismatch, "map leaves the target lattice");
  ElemMap out(C.size());
  for (Elem u = 0; u < C.size(); ++u) {
    ElementSet xs = src.filter_elements & C.poset().down(u);
    ElementSet ys = src.ideal_elements & C.poset().up(u);
    if (mode == EnvelopeMode::extremal) {
      xs = C.poset().maximal(xs);
      ys = C.poset().minimal(ys);
    }
    if (xs.none() || ys.none())
      throw Error(ErrorKind::no_bracketing_pair, "no filter/ideal pair brackets " + C.name(u));
    Elem outer = Sigma ? D.bottom() : D.top();
    for_each_element(xs, [&](Elem x) {
      for_each_element(ys, [&](Elem y) {
        Elem inner = Sigma ? D.top() : D.bottom();
        for (Elem a = 0; a < L.size(); ++a) {
          const Elem ea = src.embed[a];
          if (!C.leq(x, ea) || !C.leq(ea, y)) continue;
          const Elem v = dst.embed[f[a]];
          inner = Sigma ? D.meet(inner, v) : D.join(inner, v);
        }
        outer = Sigma ? D.join(outer, inner) : D.meet(outer, inner);
      });
    });
    out[u] = outer;
  }
  return out;
}

}  // namespace detail

/// f^σ(u) = ⋁{⋀ e(f([x,y] ∩ L)) | F ∋ x ≤ u ≤ y ∈ I}, with the empty meet the
/// top and the empty join the bottom.
inline ElemMap sigma_extension(const ElemMap& f, const Completion& src, const Completion& dst,
                               EnvelopeMode mode = EnvelopeMode::extremal) {
  return detail::envelope<true>(src, dst, f, mode);
}

/// f^π(u) = ⋀{⋁ e(f([x,y] ∩ L)) | F ∋ x ≤ u ≤ y ∈ I}.
inline ElemMap pi_extension(const ElemMap& f, const Completion& src, const Completion& dst,
                            EnvelopeMode mode = EnvelopeMode::extremal) {
  return detail::envelope<false>(src, dst, f, mode);
}

/// Source and target completions with a base map and both envelopes. For an
/// n-ary operation the source completion is the n-fold product completion.
struct EnvelopePair {
  std::shared_ptr<const Completion> src;
  std::shared_ptr<const Completion> dst;
  ElemMap f;
  ElemMap sigma;
  ElemMap pi;
  /// Per-coordinate tags of f (a single tag for plain unary maps).
  std::vector<Monotonicity> tags;

  bool smooth() const { return sigma == pi; }
};

inline EnvelopePair envelopes(const ElemMap& f, Completion src, Completion dst, std::vector<Monotonicity> tags = {}) {
  EnvelopePair e;
  e.src = std::make_shared<const Completion>(std::move(src));
  e.dst = std::make_shared<const Completion>(std::move(dst));
  e.f = f;
  e.sigma = sigma_extension(f, *e.src, *e.dst);
  e.pi = pi_extension(f, *e.src, *e.dst);
  e.tags = tags.empty() ? std::vector<Monotonicity>{Monotonicity::untagged} : std::move(tags);
  return e;
}

/// n-fold product completion c^n, whose source carrier is L^n indexed by
/// `tuple_index` (row-major, radix |L|).
inline Completion power_completion(const Completion& c, std::size_t n) {
  if (n == 1) return c;
  const Completion bare = make_completion(share(c.L().without_operations()), share(c.C().without_operations()), c.embed);
  std::vector<const Completion*> factors(n, &bare);
  return product_completion(factors);
}

/// Envelopes of an attached operation of c.L(), relative to c in every
/// coordinate and in the target.
inline EnvelopePair operation_envelopes(const Completion& c, const std::string& name) {
  const Operation& op = c.L().operation(name);
  return envelopes(op.table, power_completion(c, op.arity), c, op.tags);
}

struct SmoothnessVerdict {
  bool smooth = true;
  std::optional<Elem> witness;
};

inline SmoothnessVerdict is_smooth(const EnvelopePair& e) {
  for (Elem u = 0; u < e.sigma.size(); ++u)
    if (e.sigma[u] != e.pi[u]) return {false, u};
  return {};
}

/// Tags a unary map L -> M as order preserving or reversing when it is one.
inline Monotonicity classify_unary(const Lattice& L, const Lattice& M, const ElemMap& f) {
  bool up = true, down = true;
  for (const auto& [lo, hi] : L.poset().covers()) {
    up = up && M.leq(f[lo], f[hi]);
    down = down && M.leq(f[hi], f[lo]);
  }
  if (up) return Monotonicity::preserving;
  if (down) return Monotonicity::reversing;
  return Monotonicity::untagged;
}

// ---------------------------------------------------------------------------
// Universality

struct UniversalityCertificate {
  bool continuous = false;       // (a) f^σ is (δ, ι↑)-continuous
  bool below_f = false;          // (b) f^σ(e(a)) ≤ e(f(a))
  bool maximal = false;          // (c) every (a)+(b) map lies below f^σ
  bool maximal_scott = false;    // the same with σ↑ on the target
  std::optional<ElemMap> counterexample;  // a map violating (c), if any
  std::size_t candidates = 0;    // maps visited by the search

  bool holds() const { return continuous && below_f && maximal && maximal_scott; }
};

namespace detail {

/// Searches for g : C_src -> C_dst with g(N(p)) ⊆ N'(g(p)) for all p (the
/// finite form of (τ_src, τ_dst)-continuity), g(e(a)) ≤ bound(a) on the
/// embedded points, and g(u) ≰ limit(u) somewhere. Exhaustive backtracking;
/// the point under test is assigned first.
inline std::optional<ElemMap> exceeding_minorant(const Completion& src, const Lattice& D, const FiniteTopology& tsrc,
                                                 const FiniteTopology& tdst, const std::vector<std::optional<Elem>>& bound,
                                                 const ElemMap& limit, std::size_t& visited) {
  const std::size_t n = src.C().size();
  for (Elem u = 0; u < n; ++u) {
    for (Elem v = 0; v < D.size(); ++v) {
      if (D.leq(v, limit[u])) continue;
      std::vector<Elem> order{u};
      for (Elem p = 0; p < n; ++p)
        if (p != u) order.push_back(p);
      ElemMap g(n, 0);
      std::vector<bool> assigned(n, false);
      std::function<bool(std::size_t)> extend = [&](std::size_t depth) -> bool {
        if (depth == n) return true;
        const Elem p = order[depth];
        for (Elem w = 0; w < D.size(); ++w) {
          if (depth == 0 && w != v) continue;
          if (bound[p] && !D.leq(w, *bound[p])) continue;
          ++visited;
          g[p] = w;
          assigned[p] = true;
          bool ok = true;
          for (Elem q = 0; q < n && ok; ++q) {
            if (!assigned[q]) continue;
            if (tsrc.neighbourhood(p).test(q) && !tdst.neighbourhood(g[p]).test(g[q])) ok = false;
            if (tsrc.neighbourhood(q).test(p) && !tdst.neighbourhood(g[q]).test(g[p])) ok = false;
          }
          if (ok && extend(depth + 1)) return true;
          assigned[p] = false;
        }
        return false;
      };
      if (extend(0)) return g;
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Certifies that f^σ is the largest (δ, ι↑)-continuous map below f on L
/// (and likewise for σ↑). Requires every coordinate of f to be tagged
/// monotone; the maximality search is exhaustive, so |C_src| is capped.
inline UniversalityCertificate universality_certificate(const EnvelopePair& e, const Limits& limits = Limits::from_env()) {
  for (auto t : e.tags)
    if (t == Monotonicity::untagged)
      throw Error(ErrorKind::untagged_map, "universality requires an order preserving or reversing map in each coordinate");
  const Completion& src = *e.src;
  const Completion& dst = *e.dst;
  if (src.C().size() > limits.certificate_carrier)
    throw Error(ErrorKind::cap_exceeded, "universality search is capped at " + std::to_string(limits.certificate_carrier) +
                                             " source points");
  const Lattice& D = dst.C();
  UniversalityCertificate cert;
  const auto delta = delta_topology(src);
  const auto iota_up = interval_topology(D, Side::up);
  const auto scott_up = scott_topology(D, Side::up);
  cert.continuous = is_continuous(e.sigma, delta, iota_up).continuous;
  std::vector<std::optional<Elem>> bound(src.C().size());
  for (Elem a = 0; a < src.L().size(); ++a) {
    const Elem ea = src.embed[a];
    const Elem b = dst.embed[e.f[a]];
    bound[ea] = bound[ea] ? D.meet(*bound[ea], b) : b;
  }
  cert.below_f = true;
  for (Elem a = 0; a < src.L().size(); ++a)
    cert.below_f = cert.below_f && D.leq(e.sigma[src.embed[a]], dst.embed[e.f[a]]);
  auto bad = detail::exceeding_minorant(src, D, delta, iota_up, bound, e.sigma, cert.candidates);
  cert.maximal = !bad.has_value();
  cert.counterexample = bad;
  auto bad_scott = detail::exceeding_minorant(src, D, delta, scott_up, bound, e.sigma, cert.candidates);
  cert.maximal_scott = !bad_scott.has_value();
  if (!cert.counterexample) cert.counterexample = bad_scott;
  return cert;
}

// ---------------------------------------------------------------------------
// Composition

enum class ComposeSide { post, pre };

struct ComposeVerdict {
  bool equal = true;
  std::optional<Elem> witness;
  ElemMap lhs;
  ElemMap rhs;
};

/// side = post: (h ∘ f)^σ = h^σ ∘ f^σ for f : L -> M and a homomorphism
/// h : M -> K, with completions cL, cM, cK.
/// side = pre: (f ∘ h)^σ = f^σ ∘ h^σ for a surjective homomorphism h : L -> M
/// and f : M -> K.
inline ComposeVerdict compose_check(const ElemMap& h, const ElemMap& f, ComposeSide side, const Completion& cL,
                                    const Completion& cM, const Completion& cK) {
  ComposeVerdict v;
  if (side == ComposeSide::post) {
    if (!is_homomorphism(cM.L(), cK.L(), h)) throw Error(ErrorKind::not_a_homomorphism, "h is not a lattice homomorphism");
    v.lhs = sigma_extension(compose(h, f), cL, cK);
    v.rhs = compose(sigma_extension(h, cM, cK), sigma_extension(f, cL, cM));
  } else {
    if (!is_surjective(h, cM.L().size())) throw Error(ErrorKind::not_surjective, "h is not onto");
    if (!is_homomorphism(cL.L(), cM.L(), h)) throw Error(ErrorKind::not_a_homomorphism, "h is not a lattice homomorphism");
    v.lhs = sigma_extension(compose(f, h), cL, cK);
    v.rhs = compose(sigma_extension(f, cM, cK), sigma_extension(h, cL, cM));
  }
  for (Elem u = 0; u < v.lhs.size(); ++u)
    if (v.lhs[u] != v.rhs[u]) {
      v.equal = false;
      v.witness = u;
      break;
    }
  return v;
}

// ---------------------------------------------------------------------------
// Quotient maps are interval-preserving and δ-open

struct OpennessVerdict {
  bool intervals = true;   // h^δ([x,y]) = [h^δ(x), h^δ(y)]
  bool open = true;        // images of δ-basic opens are δ-open
  bool midpoint = true;    // (u ∨ x) ∧ y ∈ [x,y] has the image of u
  std::optional<std::pair<Elem, Elem>> witness;

  bool holds() const { return intervals && open && midpoint; }
};

inline OpennessVerdict quotient_interval_openness(const ElemMap& h, const Completion& cL, const Completion& cM) {
  if (!is_surjective(h, cM.L().size())) throw Error(ErrorKind::not_surjective, "h is not onto");
  const ElemMap hd = sigma_extension(h, cL, cM);
  const Lattice& C = cL.C();
  const Lattice& D = cM.C();
  const auto delta_m = delta_topology(cM);
  OpennessVerdict v;
  for_each_element(cL.filter_elements, [&](Elem x) {
    for_each_element(cL.ideal_elements, [&](Elem y) {
      if (!C.leq(x, y)) return;
      const ElementSet interval = C.poset().up(x) & C.poset().down(y);
      ElementSet image(D.size());
      for_each_element(interval, [&](Elem u) { image.set(hd[u]); });
      const ElementSet target = D.poset().up(hd[x]) & D.poset().down(hd[y]);
      if (image != target && v.intervals) {
        v.intervals = false;
        v.witness = std::pair{x, y};
      }
      if (!delta_m.is_open(image) && v.open) {
        v.open = false;
        v.witness = std::pair{x, y};
      }
      for (Elem u = 0; u < C.size(); ++u) {
        if (!D.leq(hd[x], hd[u]) || !D.leq(hd[u], hd[y])) continue;
        const Elem w = C.meet(C.join(u, x), y);
        if ((!interval.test(w) || hd[w] != hd[u]) && v.midpoint) {
          v.midpoint = false;
          v.witness = std::pair{x, y};
        }
      }
    });
  });
  return v;
}

// ---------------------------------------------------------------------------
// Lifting expansion homomorphisms

struct LiftedHomomorphism {
  ElemMap map;
  /// Per operation: h^δ ∘ f^σ = g^σ ∘ (h^δ)^[n] on every tuple.
  bool commutes = true;
  std::optional<std::string> failing_operation;
};

/// h : (A, f..) -> (B, g..) with operations matched by name; cA and cB are
/// completions of A and B.
inline LiftedHomomorphism lift_homomorphism(const ElemMap& h, const Completion& cA, const Completion& cB) {
  const Lattice& A = cA.L();
  const Lattice& B = cB.L();
  if (!is_homomorphism(A, B, h)) throw Error(ErrorKind::not_a_homomorphism, "h is not a lattice homomorphism");
  if (auto bad = expansion_homomorphism_failure(A, B, h))
    throw Error(ErrorKind::not_a_homomorphism, "h does not commute with operation '" + bad->first + "'");
  LiftedHomomorphism out;
  out.map = sigma_extension(h, cA, cB);
  const Lattice& CA = cA.C();
  const Lattice& CB = cB.C();
  for (const auto& [name, f] : A.operations()) {
    const auto fs = operation_envelopes(cA, name).sigma;
    const auto gs = operation_envelopes(cB, name).sigma;
    const std::size_t total = int_pow(CA.size(), f.arity);
    for (std::size_t idx = 0; idx < total && out.commutes; ++idx) {
      auto args = tuple_decode(idx, f.arity, CA.size());
      for (auto& a : args) a = out.map[a];
      if (out.map[fs[idx]] != gs[tuple_index(args, CB.size())]) {
        out.commutes = false;
        out.failing_operation = name;
      }
    }
  }
  return out;
}

}  // namespace canext
