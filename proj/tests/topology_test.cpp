#include <gtest/gtest.h>

#include <set>

#include "canext/completions/canonical.hpp"
#include "canext/completions/product.hpp"
#include "canext/order/catalog.hpp"
#include "canext/order/corpus.hpp"
#include "canext/topology/order_topologies.hpp"
#include "oracles.hpp"

using namespace canext;

namespace {

// Opens by brute force: close the subbasis under pairwise intersection (plus
// the whole carrier), then keep every subset that is a union of basic sets.
std::set<std::uint32_t> brute_opens(const FiniteTopology& t) {
  const std::size_t n = t.size();
  std::set<std::uint32_t> basis{(1u << n) - 1};
  for (const auto& S : t.subbasis()) basis.insert(oracle::mask_of(S));
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::uint32_t> cur(basis.begin(), basis.end());
    for (auto a : cur)
      for (auto b : cur) changed |= basis.insert(a & b).second;
  }
  std::set<std::uint32_t> out;
  for (std::uint32_t U = 0; U < (1u << n); ++U) {
    std::uint32_t cover = 0;
    for (auto B : basis)
      if ((B & ~U) == 0) cover |= B;
    if (cover == U) out.insert(U);
  }
  return out;
}

std::set<std::uint32_t> masks(const std::vector<ElementSet>& family) {
  std::set<std::uint32_t> out;
  for (const auto& s : family) out.insert(oracle::mask_of(s));
  return out;
}

}  // namespace

TEST(FiniteTopology, GeneratedOpensMatchBruteForce) {
  for (const Lattice& L : {catalog::n5(), catalog::m3(), catalog::boolean(3), catalog::chain(4)}) {
    const auto c = canonical_extension(L);
    for (const auto& t : {delta_topology(c), delta_topology(c, Side::up), interval_topology(L, Side::up),
                          interval_topology(L), scott_topology(L, Side::down)})
      EXPECT_EQ(masks(t.opens()), brute_opens(t));
  }
  const FiniteTopology ind = FiniteTopology::indiscrete(3);
  EXPECT_EQ(ind.opens().size(), 2u);
}

TEST(Delta, DiscreteOnIdentityCompletion) {
  for (const Lattice& L : {catalog::n5(), catalog::boolean(3)}) {
    const auto t = delta_topology(identity_completion(L));
    EXPECT_TRUE(t.is_discrete());
    EXPECT_EQ(t.opens().size(), std::size_t{1} << L.size());
    EXPECT_EQ(t.isolated_points(), full_set(L.size()));
  }
}

TEST(Delta, UpperSideOnNonDenseCompletion) {
  const auto c = make_completion(share(catalog::chain(2)), share(catalog::chain(3)), ElemMap{0, 2});
  const auto t = delta_topology(c, Side::up);
  // F = {0, 1}: the basis is ↑0 = everything and ↑1 = {1}.
  EXPECT_EQ(masks(t.opens()), (std::set<std::uint32_t>{0b000, 0b100, 0b111}));
  // ↑m is Scott open but not δ↑-open here: the inclusion needs density.
  EXPECT_FALSE(t.refines(scott_topology(c.C(), Side::up)));
}

TEST(Delta, RefinesScottAndIntervalOnCanonicalExtensions) {
  for (const auto& e : corpus(7)) {
    const auto c = canonical_extension(e.lattice);
    const auto& C = c.C();
    EXPECT_TRUE(delta_topology(c, Side::up).refines(scott_topology(C, Side::up))) << e.name;
    EXPECT_TRUE(delta_topology(c, Side::down).refines(scott_topology(C, Side::down))) << e.name;
    EXPECT_TRUE(delta_topology(c).refines(scott_topology(C))) << e.name;
    EXPECT_TRUE(scott_topology(C, Side::up).refines(interval_topology(C, Side::up))) << e.name;
    EXPECT_TRUE(delta_topology(c).refines(interval_topology(C))) << e.name;
    EXPECT_TRUE(delta_topology(c).is_hausdorff()) << e.name;
    EXPECT_TRUE(delta_topology(c).is_discrete()) << e.name;
  }
}

TEST(Scott, UpperIsAllUpsets) {
  for (const Lattice& L : {catalog::n5(), catalog::m3(), catalog::boolean(3), catalog::chain(5)}) {
    std::set<std::uint32_t> upsets;
    for (std::uint32_t m = 0; m < (1u << L.size()); ++m)
      if (oracle::is_upset_mask(L, m)) upsets.insert(m);
    EXPECT_EQ(masks(scott_topology(L, Side::up).opens()), upsets);
    EXPECT_EQ(masks(interval_topology(L, Side::up).opens()), upsets);
  }
  EXPECT_TRUE(interval_topology(catalog::chain(2)).is_discrete());
}

TEST(Continuity, Examples) {
  const Lattice c3 = catalog::chain(3);
  const auto s3 = scott_topology(c3, Side::up);
  EXPECT_TRUE(is_continuous(identity_map(3), s3, s3).continuous);
  EXPECT_TRUE(is_continuous(ElemMap{1, 1, 1}, FiniteTopology::indiscrete(3), s3).continuous);
  const Lattice c2 = catalog::chain(2);
  const auto v = is_continuous(ElemMap{0, 1, 0}, s3, scott_topology(c2, Side::up));
  EXPECT_FALSE(v.continuous);
  ASSERT_TRUE(v.witness);
  EXPECT_EQ(*v.witness, make_set(2, {1}));
  EXPECT_THROW(is_continuous(ElemMap{0, 1}, s3, s3), Error);
  EXPECT_THROW(is_continuous(ElemMap{0, 1, 4}, s3, s3), Error);
}

TEST(Isolated, Examples) {
  EXPECT_TRUE(FiniteTopology::indiscrete(2).isolated_points().none());
  EXPECT_FALSE(FiniteTopology::indiscrete(2).is_hausdorff());
}

TEST(Delta, CommutesWithBinaryProducts) {
  const auto level = corpus(5);
  for (std::size_t i = 0; i < level.size(); ++i)
    for (std::size_t j = 0; j < level.size(); ++j) {
      const auto a = canonical_extension(level[i].lattice);
      const auto b = canonical_extension(level[j].lattice);
      const auto p = product_completion(a, b);
      for (auto side : {Side::both, Side::up, Side::down})
        EXPECT_TRUE(delta_topology(p, side).same_opens(product_topology(delta_topology(a, side), delta_topology(b, side))));
    }
  // A non-dense factor too.
  const auto nd = make_completion(share(catalog::chain(2)), share(catalog::chain(3)), ElemMap{0, 2});
  const auto p = product_completion(nd, nd);
  EXPECT_TRUE(delta_topology(p, Side::up).same_opens(product_topology(delta_topology(nd, Side::up), delta_topology(nd, Side::up))));
}

TEST(FiniteTopology, CapOnMaterialization) {
  Limits small;
  small.topology_carrier = 3;
  EXPECT_THROW(FiniteTopology::discrete(4).opens(small), Error);
}
