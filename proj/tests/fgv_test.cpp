#include <gtest/gtest.h>

#include <random>

#include "canext/fgv/fgv.hpp"
#include "canext/order/catalog.hpp"
#include "canext/order/corpus.hpp"
#include "oracles.hpp"

using namespace canext;

namespace {

std::set<Elem> as_set(const ElementSet& s) {
  std::set<Elem> out;
  for_each_element(s, [&](Elem e) { out.insert(e); });
  return out;
}

// Coordinate insertion: p in slot x with `fill` elsewhere.
std::set<Elem> insertion_formula(const Lattice& A, std::size_t X, const std::set<Elem>& seeds, Elem fill) {
  const std::vector<std::size_t> sizes(X, A.size());
  std::set<Elem> out;
  for (std::size_t x = 0; x < X; ++x)
    for (Elem p : seeds) {
      std::vector<Elem> coords(X, fill);
      coords[x] = p;
      out.insert(product_index(sizes, coords));
    }
  return out;
}

std::set<Elem> maximal_outside_up(const Lattice& L, Elem p) {
  std::set<Elem> out;
  for (Elem u = 0; u < L.size(); ++u) {
    if (L.leq(p, u)) continue;
    bool maximal = true;
    for (Elem v = 0; v < L.size(); ++v)
      if (v != u && !L.leq(p, v) && L.leq(u, v)) maximal = false;
    if (maximal) out.insert(u);
  }
  return out;
}

}  // namespace

TEST(Irreducibles, Examples) {
  const Lattice sq = catalog::boolean(2);
  const auto v = irreducibles(sq);
  EXPECT_EQ(v.J, atoms(sq));
  const Lattice n5 = catalog::n5();
  EXPECT_EQ(as_set(irreducibles(n5).J), oracle::join_irreducibles(n5));
  EXPECT_EQ(as_set(irreducibles(n5).J), (std::set<Elem>{n5.index("a"), n5.index("b"), n5.index("c")}));
  const Lattice c4 = catalog::chain(4);
  EXPECT_EQ(irreducibles(c4).J, make_set(4, {1, 2, 3}));
}

TEST(Irreducibles, GenerateEveryCorpusLattice) {
  for (const auto& e : corpus(7)) {
    const auto v = irreducibles(e.lattice);
    EXPECT_EQ(as_set(v.J), oracle::join_irreducibles(e.lattice)) << e.name;
    EXPECT_EQ(as_set(v.M), oracle::meet_irreducibles(e.lattice)) << e.name;
    EXPECT_TRUE(v.join_generates && v.meet_generates) << e.name;
    EXPECT_EQ(v.J_omega, full_set(e.lattice.size())) << e.name;
  }
}

TEST(Star, N5Example) {
  const Lattice n5 = catalog::n5();
  const auto r = star_check(n5);
  const StarEntry* a = r.find(n5.index("a"));
  ASSERT_NE(a, nullptr);
  EXPECT_EQ(a->outside, make_set(5, {n5.index("0"), n5.index("c")}));
  EXPECT_EQ(a->extremal, make_set(5, {n5.index("c")}));
  EXPECT_TRUE(a->pass());
  EXPECT_TRUE(r.pass());
}

TEST(Star, EveryCorpusLatticePassesBothSides) {
  for (const auto& e : corpus(8)) {
    const auto r = star_check(e.lattice);
    EXPECT_TRUE(r.pass()) << e.name;
    const auto M = oracle::meet_irreducibles(e.lattice);
    for (const auto& entry : r.star) {
      const auto mp = maximal_outside_up(e.lattice, entry.p);
      EXPECT_EQ(as_set(entry.extremal), mp) << e.name;
      for (Elem m : mp) EXPECT_TRUE(M.count(m)) << e.name;
    }
  }
}

TEST(Teeth, Examples) {
  const auto two = tooth_basis(catalog::chain(2));
  ASSERT_EQ(two.upper.size(), 2u);  // k = 0 (whole / empty) and k = 1
  EXPECT_EQ(two.upper[1].tooth, make_set(2, {1}));
  EXPECT_EQ(two.upper[1].partner, make_set(2, {0}));
  const Lattice sq = catalog::boolean(2);
  const auto b = tooth_basis(sq);
  const Elem k = sq.index("(1,0)");
  for (const auto& t : b.upper)
    if (t.k == k) EXPECT_EQ(t.partner, sq.poset().down(kappa(sq, k)));
  EXPECT_TRUE(b.valid());
  const Lattice n5 = catalog::n5();
  const auto nb = tooth_basis(n5);
  EXPECT_TRUE(nb.valid());
  for (const auto& t : nb.upper)
    if (t.k == n5.top()) EXPECT_EQ(t.generators, (std::vector<Elem>{n5.index("b"), n5.index("c")}));
}

TEST(Teeth, UpsetsAreUnionsOfTeethAndOpenFamiliesCoincide) {
  for (const auto& e : corpus(6)) {
    const Lattice& L = e.lattice;
    const auto b = tooth_basis(L);
    EXPECT_TRUE(b.valid()) << e.name;
    for (std::uint32_t m = 0; m < (1u << L.size()); ++m) {
      if (!oracle::is_upset_mask(L, m)) continue;
      std::uint32_t cover = 0;
      for (const auto& t : b.upper)
        if ((oracle::mask_of(t.tooth) & ~m) == 0) cover |= oracle::mask_of(t.tooth);
      EXPECT_EQ(cover, m) << e.name;
      // Dually, the complement is a union of lower teeth.
      std::uint32_t low = 0;
      const std::uint32_t c = ((1u << L.size()) - 1) & ~m;
      for (const auto& t : b.lower)
        if ((oracle::mask_of(t.tooth) & ~c) == 0) low |= oracle::mask_of(t.tooth);
      EXPECT_EQ(low, c) << e.name;
    }
    const auto C = canonical_extension(L).C();
    EXPECT_TRUE(scott_topology(C, Side::up).same_opens(interval_topology(C, Side::up))) << e.name;
  }
}

TEST(Products, IrreduciblesMatchCoordinateInsertion) {
  for (const auto& e : corpus(5))
    for (std::size_t X = 1; X <= 2; ++X) {
      const auto v = product_irreducibles_check(e.lattice, X);
      EXPECT_TRUE(v.pass()) << e.name;
      const Lattice P = power(e.lattice, X);
      EXPECT_EQ(as_set(v.direct_J), oracle::join_irreducibles(P));
      EXPECT_EQ(as_set(v.formula_J),
                insertion_formula(e.lattice, X, oracle::join_irreducibles(e.lattice), e.lattice.bottom()));
      EXPECT_EQ(as_set(v.formula_M),
                insertion_formula(e.lattice, X, oracle::meet_irreducibles(e.lattice), e.lattice.top()));
    }
  EXPECT_EQ(product_irreducibles_check(catalog::chain(3), 2).direct_J.count(), 4u);
  EXPECT_TRUE(product_irreducibles_check(catalog::n5(), 2).pass());
  EXPECT_THROW(product_irreducibles_check(catalog::n5(), 3), Error);
}

TEST(Sublattices, IrreduciblesMatchRestrictedProjections) {
  for (const auto& e : corpus(5)) {
    const Lattice& A = e.lattice;
    const Lattice P = power(A, 2);
    ElementSet diag(P.size());
    for (Elem a = 0; a < A.size(); ++a) diag.set(a * A.size() + a);
    const auto d = sublattice_irreducibles_check(A, 2, diag);
    EXPECT_TRUE(d.pass()) << e.name;
    EXPECT_EQ(d.direct_J.count(), oracle::join_irreducibles(A).size());
    EXPECT_TRUE(sublattice_irreducibles_check(A, 2, full_set(P.size())).pass()) << e.name;
    for (const auto& S : subalgebras(P)) {
      const auto v = sublattice_irreducibles_check(A, 2, S);
      EXPECT_TRUE(v.pass()) << e.name;
      const auto sub = sublattice(P, S).lattice;
      EXPECT_EQ(as_set(v.direct_J), oracle::join_irreducibles(sub));
    }
  }
  const Lattice c3 = catalog::chain(3);
  EXPECT_THROW(sublattice_irreducibles_check(c3, 2, make_set(9, {0, 1})), Error);
}

TEST(BooleanProducts, CanonicalExtensionCommutesWithProducts) {
  EXPECT_TRUE(boolean_product_canext_check({catalog::chain(2), catalog::chain(2)}).isomorphic);
  EXPECT_TRUE(boolean_product_canext_check({catalog::n5(), catalog::chain(3)}).isomorphic);
  EXPECT_TRUE(boolean_product_canext_check({catalog::m3()}).isomorphic);
  const auto level = corpus(5);
  for (const auto& a : level)
    for (const auto& b : level) EXPECT_TRUE(boolean_product_canext_check({a.lattice, b.lattice}).isomorphic);
  const auto v = boolean_product_canext_check({catalog::n5(), catalog::chain(3)});
  ASSERT_TRUE(v.iso);
  EXPECT_EQ(v.iso->size(), 15u);
}

TEST(StarUnderH, QuotientsOfSmallCorpus) {
  for (const auto& e : corpus(6))
    for (const auto& theta : enum_congruences(e.lattice)) EXPECT_TRUE(star_preserved_under_H(e.lattice, theta).pass()) << e.name;
}

TEST(Remark, BoundExamples) {
  const auto two = remark_bound(catalog::chain(2));
  EXPECT_EQ(two.bound, 1u);
  EXPECT_EQ(two.subalgebra_count, 1u);
  EXPECT_TRUE(two.verified);
  const Lattice n5 = catalog::n5();
  const auto r = remark_bound(n5);
  EXPECT_TRUE(r.verified) << r.violation.value_or("");
  EXPECT_GT(r.members_checked, 20u);
  // Oracle: the maximum over sublattices of N5 by direct enumeration.
  std::size_t best = 0;
  for (std::uint32_t m = 0; m < 32; ++m) {
    const ElementSet S = [&] {
      ElementSet s(5);
      for (Elem a = 0; a < 5; ++a)
        if (m >> a & 1) s.set(a);
      return s;
    }();
    if (sublattice_closure(n5, S) != S) continue;
    const Lattice B = sublattice(n5, S).lattice;
    for (Elem p : oracle::join_irreducibles(B)) best = std::max(best, maximal_outside_up(B, p).size());
  }
  EXPECT_EQ(r.bound, best);
}

TEST(Remark, SubalgebraEnumerationMatchesSubsetScan) {
  for (const auto& e : corpus(6)) {
    std::size_t count = 0;
    for (std::uint32_t m = 0; m < (1u << e.lattice.size()); ++m) {
      ElementSet s(e.lattice.size());
      for (Elem a = 0; a < e.lattice.size(); ++a)
        if (m >> a & 1) s.set(a);
      if (sublattice_closure(e.lattice, s) == s) ++count;
    }
    EXPECT_EQ(subalgebras(e.lattice).size(), count) << e.name;
  }
}
