#include <gtest/gtest.h>

#include <random>

#include "canext/completions/canonical.hpp"
#include "canext/duality/duality.hpp"
#include "canext/order/catalog.hpp"
#include "canext/order/corpus.hpp"
#include "oracles.hpp"

using namespace canext;

namespace {

KripkeFrame frame_from_mask(std::size_t n, std::uint32_t relation) {
  std::vector<std::string> worlds;
  for (std::size_t i = 0; i < n; ++i) worlds.push_back("w" + std::to_string(i));
  std::vector<std::pair<Elem, Elem>> R;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (relation >> (x * n + y) & 1) R.emplace_back(x, y);
  return KripkeFrame::from_pairs(worlds, R);
}

// ◇ on 2^3 determined by the images of the three atoms (element masks 1, 2, 4
// under the tuple indexing of catalog::boolean(3)), extended by joins.
ElemMap diamond_from_atoms(const Lattice& B, const std::vector<Elem>& at, const std::vector<Elem>& image) {
  ElemMap d(B.size(), B.bottom());
  for (Elem a = 0; a < B.size(); ++a)
    for (std::size_t i = 0; i < at.size(); ++i)
      if (B.leq(at[i], a)) d[a] = B.join(d[a], image[i]);
  return d;
}

}  // namespace

TEST(ComplexAlgebra, SmallFrames) {
  const auto empty = complex_algebra(KripkeFrame::from_pairs({"w"}, {}));
  EXPECT_EQ(empty.diamond(), (ElemMap{0, 0}));
  const auto loop = complex_algebra(KripkeFrame::from_pairs({"w"}, {{0, 0}}));
  EXPECT_EQ(loop.diamond(), (ElemMap{0, 1}));
  EXPECT_EQ(loop.lattice.name(1), "{w}");
}

TEST(ComplexAlgebra, DiamondMatchesRelationOnAtomsAndPreservesJoins) {
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::uint32_t rel = 0; rel < (1u << (n * n)); ++rel) {
      const auto fr = frame_from_mask(n, rel);
      const auto A = complex_algebra(fr);
      const Lattice& P = A.lattice;
      const ElemMap& d = A.diamond();
      EXPECT_FALSE(join_preservation_failure(P, d));
      for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) EXPECT_EQ(P.leq(Elem{1} << x, d[Elem{1} << y]), fr.related(x, y));
      EXPECT_TRUE(is_boolean(P));
    }
  std::vector<std::string> seven(7, "w");
  for (std::size_t i = 0; i < 7; ++i) seven[i] += std::to_string(i);
  EXPECT_THROW(complex_algebra(KripkeFrame::from_pairs(seven, {})), Error);
}

TEST(AtFunctor, InvertsComplexAlgebraOnFramesUpToThree) {
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::uint32_t rel = 0; rel < (1u << (n * n)); ++rel) {
      const auto fr = frame_from_mask(n, rel);
      const auto back = at_functor(complex_algebra(fr));
      ASSERT_EQ(back.size(), n);
      EXPECT_EQ(back.succ, fr.succ);
      EXPECT_TRUE(frame_isomorphism(back, fr));
    }
}

TEST(AtFunctor, ComplexAlgebraOfAtomsRecoversEveryOperatorOnTheCube) {
  const Lattice B = catalog::boolean(3);
  const auto at = elements_of(atoms(B));
  ASSERT_EQ(at.size(), 3u);
  int checked = 0;
  for (Elem i0 = 0; i0 < 8; ++i0)
    for (Elem i1 = 0; i1 < 8; ++i1)
      for (Elem i2 = 0; i2 < 8; i2 += 3) {
        const auto A = make_modal_algebra(B, diamond_from_atoms(B, at, {i0, i1, i2}));
        const auto back = complex_algebra(at_functor(A));
        // Independent check: a ↦ {atoms below a} is a ◇-preserving bijection.
        ElemMap f(B.size(), 0);
        for (Elem a = 0; a < B.size(); ++a)
          for (std::size_t i = 0; i < 3; ++i)
            if (B.leq(at[i], a)) f[a] |= Elem{1} << i;
        EXPECT_TRUE(is_order_isomorphism(B, back.lattice, f));
        for (Elem a = 0; a < B.size(); ++a) EXPECT_EQ(f[A.diamond()[a]], back.diamond()[f[a]]);
        EXPECT_TRUE(modal_isomorphism(A, back));
        ++checked;
      }
  EXPECT_EQ(checked, 8 * 8 * 3);
}

TEST(AtFunctor, Errors) {
  const Lattice c3 = catalog::chain(3);
  try {
    at_functor(ModalAlgebra{[&] {
      Lattice L = c3;
      L.add_operation({"diamond", 1, {Monotonicity::preserving}, {0, 1, 2}});
      return L;
    }()});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::not_boolean);
  }
  const Lattice B = catalog::boolean(2);
  try {
    make_modal_algebra(B, ElemMap{3, 3, 3, 3});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::not_join_preserving);
  }
  const auto one = make_modal_algebra(catalog::chain(2), ElemMap{0, 1});
  const auto loop = at_functor(one);
  EXPECT_TRUE(loop.related(0, 0));
}

TEST(Frames, JsonRoundTrip) {
  const auto doc = io::parse_json_text(R"({"worlds": ["a", "b"], "relations": {"R": [["a", "b"], ["b", "b"]]}})");
  const auto fr = frame_from_json(doc);
  EXPECT_TRUE(fr.related(0, 1));
  EXPECT_FALSE(fr.related(1, 0));
  EXPECT_EQ(frame_from_json(frame_to_json(fr)), fr);
  EXPECT_THROW(frame_from_json(io::parse_json_text(R"({"worlds": ["a"], "relations": {"R": [["a", "z"]]}})")), Error);
  EXPECT_THROW(frame_from_json(io::parse_json_text(R"({"worlds": ["a", "a"]})")), Error);
}

TEST(Stone, DenseCompactEmbeddingForBooleanCorpusMembers) {
  int count = 0;
  for (const auto& e : corpus(8)) {
    if (!is_boolean(e.lattice)) continue;
    const auto c = stone_embedding(e.lattice);
    EXPECT_TRUE(is_dense(c).dense) << e.name;
    EXPECT_TRUE(is_compact(c).pass) << e.name;
    EXPECT_TRUE(is_homomorphism(c.L(), c.C(), c.embed));
    EXPECT_TRUE(is_injective(c.embed, c.C().size()));
    EXPECT_TRUE(isomorphism_over_source(c, canonical_extension(e.lattice)));
    ++count;
  }
  EXPECT_EQ(count, 4);  // sizes 1, 2, 4, 8
  const auto four = stone_embedding(catalog::boolean(2));
  EXPECT_EQ(four.C().size(), 4u);
  EXPECT_TRUE(embedding_is_isomorphism(four));
  EXPECT_THROW(stone_embedding(catalog::chain(3)), Error);
}

TEST(DualSpace, RoundTripThroughIdentityCompletion) {
  const auto fr = frame_from_mask(3, 0b100'010'011);
  const auto A = complex_algebra(fr);
  const auto g = dual_space_from_canext(identity_completion(A.lattice));
  EXPECT_EQ(g.frame.succ, fr.succ);
  EXPECT_EQ(g.admissible.size(), 8u);
  EXPECT_TRUE(g.separates_worlds());
  EXPECT_TRUE(g.topology().is_discrete());
}

TEST(DualSpace, ShadowsOfAProperSubalgebra) {
  // Identity relation on three worlds: every Boolean subalgebra is ◇-closed.
  const auto A = complex_algebra(frame_from_mask(3, 0b100'010'001));
  const ElementSet carrier = make_set(8, {0b000, 0b001, 0b110, 0b111});
  const auto sub = sublattice(A.lattice, carrier);
  const auto c = make_completion(share(sub.lattice), share(A.lattice), sub.inclusion);
  const auto g = dual_space_from_canext(c);
  std::vector<std::uint32_t> shadows;
  for (const auto& S : g.admissible) shadows.push_back(oracle::mask_of(S));
  std::sort(shadows.begin(), shadows.end());
  EXPECT_EQ(shadows, (std::vector<std::uint32_t>{0b000, 0b001, 0b110, 0b111}));
  EXPECT_FALSE(g.separates_worlds());
  EXPECT_FALSE(g.topology().is_discrete());
}

TEST(FreeBoolean, SizesAtomsAndFreeness) {
  EXPECT_EQ(free_boolean_algebra(0).size(), 2u);
  EXPECT_EQ(free_boolean_algebra(2).size(), 16u);
  for (std::size_t n = 0; n <= 3; ++n) {
    const auto F = free_boolean_algebra(n);
    const Lattice L = F.lattice();
    EXPECT_EQ(L.size(), F.size());
    std::vector<std::uint32_t> lits;
    for (std::size_t a = 0; a < F.valuations(); ++a) lits.push_back(static_cast<std::uint32_t>(F.literal_meet(a)));
    std::sort(lits.begin(), lits.end());
    std::vector<std::uint32_t> at;
    for (Elem a : elements_of(atoms(L))) at.push_back(a);
    EXPECT_EQ(lits, at) << n;
  }
  // n = 4 in the set view: the 16 literal meets are pairwise disjoint, nonzero
  // and cover the top, so they are the atoms.
  const auto F4 = free_boolean_algebra(4);
  std::uint64_t cover = 0;
  for (std::size_t a = 0; a < 16; ++a) {
    const auto s = F4.literal_meet(a);
    EXPECT_EQ(__builtin_popcountll(s), 1);
    EXPECT_EQ(cover & s, 0u);
    cover |= s;
  }
  EXPECT_EQ(cover, F4.top());
  EXPECT_THROW(F4.lattice(), Error);
  EXPECT_THROW(free_boolean_algebra(5), Error);

  std::mt19937 rng(41);
  const Lattice B = catalog::boolean(3);
  std::uniform_int_distribution<Elem> pick(0, 7);
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto F = free_boolean_algebra(n);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<Elem> images(n);
      for (auto& x : images) x = pick(rng);
      for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(F.extend(B, images, F.generator(i)), images[i]);
      std::uniform_int_distribution<std::uint64_t> any(0, F.top());
      for (int k = 0; k < 50; ++k) {
        const auto s = any(rng), t = any(rng);
        EXPECT_EQ(F.extend(B, images, s & t), B.meet(F.extend(B, images, s), F.extend(B, images, t)));
        EXPECT_EQ(F.extend(B, images, s | t), B.join(F.extend(B, images, s), F.extend(B, images, t)));
      }
      EXPECT_EQ(F.extend(B, images, F.top()), B.top());
      EXPECT_EQ(F.extend(B, images, 0), B.bottom());
    }
  }
}

TEST(Birkhoff, Examples) {
  const Lattice sq = catalog::boolean(2);
  const auto d = birkhoff_dual(sq);
  ASSERT_EQ(d.points.size(), 2u);
  EXPECT_FALSE(d.order.leq(0, 1));
  EXPECT_FALSE(d.order.leq(1, 0));
  EXPECT_EQ(sq.name(kappa(sq, sq.index("(1,0)"))), "(0,1)");
  const Lattice c5 = catalog::chain(5);
  EXPECT_EQ(birkhoff_dual(c5).points.size(), 4u);
  for (Elem p = 1; p < 5; ++p) EXPECT_EQ(kappa(c5, p), p - 1);
  try {
    birkhoff_dual(catalog::n5());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::not_distributive);
  }
  EXPECT_THROW(kappa(sq, sq.top()), Error);
  EXPECT_THROW(kappa(sq, sq.bottom()), Error);
}

TEST(Birkhoff, KappaAndUpsetsOnDistributiveCorpus) {
  for (const auto& e : corpus(8)) {
    const Lattice& L = e.lattice;
    if (!is_distributive(L)) continue;
    const auto d = birkhoff_dual(L);
    EXPECT_EQ(d.upsets.size(), L.size()) << e.name;
    const auto J = oracle::join_irreducibles(L);
    EXPECT_EQ(d.points.size(), J.size()) << e.name;
    for (Elem p : elements_of(join_irreducibles(L))) {
      // Brute-force maximum of {u | p ≰ u}.
      std::optional<Elem> best;
      for (Elem u = 0; u < L.size(); ++u) {
        if (L.leq(p, u)) continue;
        bool top = true;
        for (Elem v = 0; v < L.size(); ++v)
          if (!L.leq(p, v) && !L.leq(v, u)) top = false;
        if (top) best = u;
      }
      ASSERT_TRUE(best) << e.name;
      const Elem k = kappa(L, p);
      EXPECT_EQ(k, *best) << e.name;
      EXPECT_EQ(L.poset().up(p) & L.poset().down(k), empty_set(L.size()));
      EXPECT_EQ(L.poset().up(p) | L.poset().down(k), full_set(L.size()));
    }
  }
}
