#pragma once

#include <chrono>
#include <functional>
#include <string>
#include <vector>

#include "canext/completions/canonical.hpp"
#include "canext/completions/completion.hpp"
#include "canext/duality/duality.hpp"
#include "canext/envelopes/envelopes.hpp"
#include "canext/fgv/fgv.hpp"
#include "canext/order/catalog.hpp"
#include "canext/order/congruence.hpp"
#include "canext/order/constructions.hpp"
#include "canext/order/corpus.hpp"
#include "canext/order/io.hpp"
#include "canext/order/maps.hpp"
#include "canext/symbolic/chain.hpp"
#include "canext/symbolic/finite_cofinite.hpp"
#include "canext/symbolic/grid.hpp"
#include "canext/report/serialize.hpp"
#include "canext/topology/order_topologies.hpp"

namespace canext::report {

using io::Json;

struct ClaimResult {
  bool pass = false;
  Json detail = Json::object();
};

/// One regression check. `group` is the example or result the claim belongs
/// to and is what `verify-paper --example` selects on.
struct Claim {
  std::string id;
  std::string group;
  std::string statement;
  std::function<ClaimResult()> run;
};

namespace detail {

inline ClaimResult self_extension(std::size_t max_size) {
  ClaimResult r{true, {{"lattices", 0}}};
  for (const auto& e : corpus(max_size)) {
    const auto c = canonical_extension(e.lattice);
    r.detail["lattices"] = r.detail["lattices"].get<int>() + 1;
    if (!embedding_is_isomorphism(c)) {
      r.pass = false;
      r.detail["failure"] = e.name;
      break;
    }
  }
  return r;
}

inline ClaimResult stone_checks(bool compact) {
  ClaimResult r{true, {{"algebras", Json::array()}}};
  for (const auto& e : corpus(8)) {
    if (!is_boolean(e.lattice)) continue;
    const auto c = stone_embedding(e.lattice);
    const bool ok = compact ? is_compact(c).pass : is_dense(c).dense;
    r.detail["algebras"].push_back({{"name", e.name}, {"size", e.lattice.size()}, {"pass", ok}});
    r.pass = r.pass && ok && is_homomorphism(c.L(), c.C(), c.embed);
  }
  return r;
}

}  // namespace detail

inline std::vector<Claim> claims_registry() {
  using namespace symbolic;
  std::vector<Claim> out;
  const auto add = [&](std::string id, std::string group, std::string statement, std::function<ClaimResult()> run) {
    out.push_back({std::move(id), std::move(group), std::move(statement), std::move(run)});
  };

  add("n5-copy", "n5-copy", "the document with covers 0<a<b<1, 0<c<1 loads as N5", [] {
    const Lattice L = io::load_lattice(
        R"({"elements":["0","a","b","c","1"],"covers":[["0","a"],["a","b"],["b","1"],["0","c"],["c","1"]]})");
    return ClaimResult{isomorphic(L, catalog::n5()), {{"size", L.size()}}};
  });

  add("filters-reverse", "filters-reverse", "the filter lattice of N5 is reverse-order-isomorphic to N5", [] {
    const Lattice n5 = catalog::n5();
    const auto F = filter_lattice(n5);
    return ClaimResult{isomorphic(F.lattice, n5.dual()), {{"filters", F.lattice.size()}}};
  });

  add("canext-ex1.n5", "canext-ex1", "canonical_extension(N5) is N5 with the embedding an isomorphism", [] {
    const auto c = canonical_extension(catalog::n5());
    return ClaimResult{embedding_is_isomorphism(c) && isomorphic(c.C(), catalog::n5()),
                       {{"embedding", map_of(c.L(), c.C(), c.embed)}}};
  });
  add("canext-ex1.corpus", "canext-ex1", "every corpus lattice up to 6 elements is its own canonical extension",
      [] { return detail::self_extension(6); });

  add("canext-ex2.macneille", "canext-ex2", "the MacNeille completion of the chain is not compact", [] {
    const auto w = chain_compactness(ChainVariant::macneille);
    return ClaimResult{!w.pass && w.S_description == "{b_i | i in N}" && w.T_description == "{c_i | i in N}",
                       {{"pass", w.pass}, {"S", w.S_description}, {"T", w.T_description}, {"meet_S", "z"}, {"join_T", "z"}}};
  });
  add("canext-ex2.canext", "canext-ex2", "the chain embeds compactly into its canonical extension", [] {
    const auto w = chain_compactness(ChainVariant::canext);
    return ClaimResult{w.pass && chain_truncation_check(ChainVariant::canext), {{"pass", w.pass}, {"meet_S", "x"}, {"join_T", "y"}}};
  });

  add("canextdense", "canextdense", "the Stone embedding of each finite Boolean algebra is dense",
      [] { return detail::stone_checks(false); });
  add("canextcompact", "canextcompact", "the Stone embedding of each finite Boolean algebra is compact",
      [] { return detail::stone_checks(true); });

  add("canext-cpl", "canext-cpl", "the literal meets of the free Boolean algebra are exactly its atoms", [] {
    ClaimResult r{true, Json::object()};
    for (std::size_t n = 1; n <= 4; ++n) {
      const auto F = free_boolean_algebra(n);
      std::vector<bool> hit(F.valuations(), false);
      for (std::size_t a = 0; a < F.valuations(); ++a) {
        const auto s = F.literal_meet(a);
        const bool atom = s == (1ULL << a);
        r.pass = r.pass && atom && !hit[a];
        hit[a] = true;
      }
      r.detail["n" + std::to_string(n)] = F.valuations();
    }
    return r;
  });

  add("deltatop.refines", "deltatop", "δ refines ι on every completion of the small corpus", [] {
    ClaimResult r{true, {{"completions", 0}}};
    int n = 0;
    for (const auto& e : corpus(5)) {
      const auto cs = {canonical_extension(e.lattice), macneille_completion(share(e.lattice))};
      for (const auto& c : cs) {
        r.pass = r.pass && delta_topology(c).refines(interval_topology(c.C()));
        ++n;
      }
    }
    r.detail["completions"] = n;
    return r;
  });
  add("deltatop.chain", "deltatop", "the isolated points of the chain's canonical extension are exactly the c_i and b_i", [] {
    ClaimResult r{true, {{"isolated", Json::array()}, {"not_isolated", Json::array()}}};
    for (const auto& e : chain_isolated_points()) {
      r.detail[e.isolated ? "isolated" : "not_isolated"].push_back(e.point.name());
      r.pass = r.pass && e.isolated == e.point.in_lattice();
    }
    return r;
  });

  add("addop.continuous", "addop", "lifted surjective homomorphisms are (δ,δ)- and (ι,ι)-continuous on corpus quotients", [] {
    ClaimResult r{true, {{"quotients", 0}}};
    int n = 0;
    for (const auto& e : corpus(6))
      for (const auto& theta : enum_congruences(e.lattice)) {
        const auto q = quotient(e.lattice, theta);
        const auto cL = canonical_extension(e.lattice);
        const auto cM = canonical_extension(q.lattice);
        const auto hd = lift_homomorphism(q.map, cL, cM).map;
        r.pass = r.pass && is_continuous(hd, delta_topology(cL), delta_topology(cM)).continuous &&
                 is_continuous(hd, interval_topology(cL.C()), interval_topology(cM.C())).continuous;
        ++n;
      }
    r.detail["quotients"] = n;
    return r;
  });
  add("addop.smooth", "addop", "lattice homomorphisms between corpus lattices are smooth", [] {
    ClaimResult r{true, {{"maps", 0}}};
    int n = 0;
    for (const auto& e : corpus(5))
      for (const auto& theta : enum_congruences(e.lattice)) {
        const auto q = quotient(e.lattice, theta);
        r.pass = r.pass && envelopes(q.map, canonical_extension(e.lattice), canonical_extension(q.lattice)).smooth();
        ++n;
      }
    r.detail["maps"] = n;
    return r;
  });

  add("lem1.midpoint", "lem1", "(u∨x)∧y lies in [x,y] with the image of u, for corpus quotient maps", [] {
    ClaimResult r{true, {{"quotients", 0}}};
    int n = 0;
    for (const auto& e : corpus(6))
      for (const auto& theta : enum_congruences(e.lattice)) {
        const auto q = quotient(e.lattice, theta);
        r.pass = r.pass && quotient_interval_openness(q.map, canonical_extension(e.lattice), canonical_extension(q.lattice)).holds();
        ++n;
      }
    r.detail["quotients"] = n;
    return r;
  });

  add("univenv.algebraic", "univenv", "f^σ is the largest continuous minorant for monotone operations on the corpus", [] {
    ClaimResult r{true, {{"certificates", 0}}};
    int n = 0;
    for (const auto& e : corpus(5)) {
      const Lattice& L = e.lattice;
      // a ↦ a ∨ (first atom), and the identity on the one-point lattice
      const auto at = elements_of(atoms(L));
      ElemMap f = identity_map(L.size());
      if (!at.empty())
        for (Elem a = 0; a < L.size(); ++a) f[a] = L.join(a, at.front());
      const auto c = canonical_extension(L);
      const auto cert = universality_certificate(envelopes(f, c, c, {Monotonicity::preserving}));
      r.pass = r.pass && cert.holds();
      ++n;
    }
    r.detail["certificates"] = n;
    return r;
  });

  add("modalex.gl-algebra", "modalex", "the finite-cofinite algebra satisfies ◇(¬◇a ∧ a) ≥ ◇a", [] {
    const auto s = gl_axiom_sweep(10000, 1);
    const bool empty_ok = gl_axiom_check(FCElement::empty()).holds;
    return ClaimResult{s.failures == 0 && empty_ok, {{"trials", s.trials}, {"failures", s.failures}}};
  });
  add("modalex.gl-infinity", "modalex", "the axiom fails at {∞} in the canonical extension, where ◇^σ{∞} = {∞}", [] {
    const FiniteCofiniteInstance inst;
    const auto v = inst.gl_axiom_check_at(inst.infinity());
    const bool fixed = inst.diamond_sigma(inst.infinity()) == inst.infinity();
    return ClaimResult{!v.holds && fixed, {{"holds", v.holds}, {"lhs", v.lhs}, {"rhs", v.rhs}}};
  });

  add("non-smoothex", "non-smoothex", "the disjointness map has f^σ(u,¬u) = ∅ and f^π(u,¬u) = X∞ for u = evens", [] {
    const auto u = DefinableSubset::parameter(evens());
    const auto v = disjointness_envelopes(u);
    return ClaimResult{v.sigma == DefinableSubset::empty(evens()) && v.pi == DefinableSubset::full(evens()) && !v.smooth,
                       {{"sigma", v.sigma.describe()},
                        {"pi", v.pi.describe()},
                        {"witness", "(" + u.describe() + ", " + u.complement().describe() + ")"},
                        {"pairs_checked", v.pairs_checked}}};
  });

  add("noncontinuity.order", "noncontinuity", "a20 ≥ a11 in the grid", [] {
    return ClaimResult{GridInstance().leq(GridPoint::a(1, 1), GridPoint::a(2, 0)), Json::object()};
  });
  add("noncontinuity.meet", "noncontinuity", "a00 ∧ ⋁x_i = a00 while ⋁(a00 ∧ x_i) = x0", [] {
    const auto g = grid_noncontinuity();
    return ClaimResult{!g.continuous && g.lhs == GridPoint::a(0, 0) && g.rhs == GridPoint::x(0) && g.n5_sublattice &&
                           g.acc_on_truncation,
                       {{"lhs", g.lhs.name()}, {"rhs", g.rhs.name()}, {"family", g.family}, {"n5", g.n5_sublattice}}};
  });

  add("duality.relation", "duality", "atoms satisfy x ≤ ◇_R(y) iff R(x,y) on all frames with at most 3 worlds", [] {
    ClaimResult r{true, {{"frames", 0}}};
    int count = 0;
    for (std::size_t n = 1; n <= 3; ++n) {
      const std::size_t pairs = n * n;
      for (std::uint32_t m = 0; m < (1u << pairs); ++m) {
        std::vector<std::pair<Elem, Elem>> R;
        for (std::size_t k = 0; k < pairs; ++k)
          if (m >> k & 1) R.emplace_back(static_cast<Elem>(k / n), static_cast<Elem>(k % n));
        std::vector<std::string> w;
        for (std::size_t i = 0; i < n; ++i) w.push_back("w" + std::to_string(i));
        const auto fr = KripkeFrame::from_pairs(w, R);
        // atom {w_i} is listed i-th, so the recovered worlds line up with the originals
        r.pass = r.pass && at_functor(complex_algebra(fr)).succ == fr.succ;
        ++count;
      }
    }
    r.detail["frames"] = count;
    return r;
  });

  add("star.finite", "star", "every finite lattice satisfies the star condition and its dual", [] {
    ClaimResult r{true, {{"lattices", 0}}};
    int n = 0;
    for (const auto& e : corpus(7)) {
      r.pass = r.pass && star_check(e.lattice).pass();
      ++n;
    }
    r.detail["lattices"] = n;
    return r;
  });
  add("star.meet-irreducible", "star", "maximal elements of (↑p)ᶜ are meet irreducible", [] {
    ClaimResult r{true, Json::object()};
    for (const auto& e : corpus(7))
      for (const auto& s : star_check(e.lattice).star) r.pass = r.pass && s.irreducible;
    return r;
  });

  add("h-lemma", "h-lemma", "h♭ carries join irreducibles to join irreducibles for corpus quotient maps", [] {
    ClaimResult r{true, {{"quotients", 0}}};
    int n = 0;
    for (const auto& e : corpus(6))
      for (const auto& theta : enum_congruences(e.lattice)) {
        const auto q = quotient(e.lattice, theta);
        const auto adj = adjoints(e.lattice, q.lattice, q.map);
        const auto JL = join_irreducibles(e.lattice);
        for_each_element(join_irreducibles(q.lattice), [&](Elem p) { r.pass = r.pass && JL.test(adj.lower[p]); });
        ++n;
      }
    r.detail["quotients"] = n;
    return r;
  });
  return out;
}

struct ClaimRun {
  const Claim* claim;
  ClaimResult result;
  double seconds = 0;
};

inline ClaimRun run_claim(const Claim& c) {
  const auto t0 = std::chrono::steady_clock::now();
  ClaimRun run{&c, {}, 0};
  try {
    run.result = c.run();
  } catch (const Error& e) {
    run.result = {false, {{"error", e.what()}}};
  }
  run.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return run;
}

}  // namespace canext::report
