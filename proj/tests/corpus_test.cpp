#include <gtest/gtest.h>

#include "canext/order/catalog.hpp"
#include "canext/order/constructions.hpp"
#include "canext/order/corpus.hpp"
#include "oracles.hpp"

using namespace canext;

namespace {

// Naive generate-and-filter: every relation on the middle elements, kept when
// it is a partial order whose bounded extension is a lattice, deduplicated by
// exhaustive isomorphism search.
std::vector<Lattice> naive_lattices(std::size_t n) {
  if (n == 1) return {catalog::chain(1)};
  const std::size_t m = n - 2;
  std::vector<std::pair<Elem, Elem>> slots;
  for (Elem i = 0; i < m; ++i)
    for (Elem j = 0; j < m; ++j)
      if (i != j) slots.emplace_back(i, j);
  std::vector<Lattice> found;
  for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
    for (Elem a = 0; a < n; ++a) {
      r[a][a] = true;
      r[0][a] = true;
      r[a][n - 1] = true;
    }
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (mask >> s & 1) r[slots[s].first + 1][slots[s].second + 1] = true;
    bool order = true;
    for (Elem a = 0; a < n && order; ++a)
      for (Elem b = 0; b < n && order; ++b) {
        if (a != b && r[a][b] && r[b][a]) order = false;
        for (Elem c = 0; c < n && order; ++c)
          if (r[a][b] && r[b][c] && !r[a][c]) order = false;
      }
    if (!order) continue;
    bool lattice = true;
    for (Elem a = 0; a < n && lattice; ++a)
      for (Elem b = 0; b < n && lattice; ++b) lattice = oracle::lub(r, a, b) && oracle::glb(r, a, b);
    if (!lattice) continue;
    std::vector<std::string> names;
    for (Elem a = 0; a < n; ++a) names.push_back("e" + std::to_string(a));
    Lattice L = Lattice::from_predicate(names, [&](Elem a, Elem b) { return bool(r[a][b]); });
    bool fresh = true;
    for (const auto& F : found)
      if (oracle::isomorphism(F, L)) fresh = false;
    if (fresh) found.push_back(std::move(L));
  }
  return found;
}

}  // namespace

TEST(Corpus, CountsPerSize) {
  const std::vector<std::size_t> expected{1, 1, 1, 2, 5, 15, 53, 222};
  for (std::size_t n = 1; n <= 8; ++n) EXPECT_EQ(lattices_of_size(n).size(), expected[n - 1]) << "n = " << n;
}

TEST(Corpus, SmallSizes) {
  const auto one = lattices_of_size(1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].lattice.size(), 1u);
  const auto two = lattices_of_size(2);
  ASSERT_EQ(two.size(), 1u);
  EXPECT_TRUE(isomorphic(two[0].lattice, catalog::chain(2)));
  int n5 = 0, m3 = 0;
  for (const auto& e : lattices_of_size(5)) {
    n5 += isomorphic(e.lattice, catalog::n5());
    m3 += isomorphic(e.lattice, catalog::m3());
  }
  EXPECT_EQ(n5, 1);
  EXPECT_EQ(m3, 1);
}

TEST(Corpus, MatchesNaiveOracleUpToSix) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto lib = lattices_of_size(n);
    const auto naive = naive_lattices(n);
    ASSERT_EQ(lib.size(), naive.size()) << "n = " << n;
    for (const auto& e : lib) {
      int matches = 0;
      for (const auto& L : naive) matches += oracle::isomorphism(e.lattice, L).has_value();
      EXPECT_EQ(matches, 1) << e.name;
    }
  }
}

TEST(Corpus, CapIsEnforced) {
  Limits small;
  small.corpus_size = 4;
  EXPECT_THROW(lattices_of_size(5, small), Error);
  EXPECT_THROW(lattices_of_size(9), Error);
}
