#include <gtest/gtest.h>

#include <random>

#include "canext/order/catalog.hpp"
#include "canext/order/congruence.hpp"
#include "canext/order/constructions.hpp"
#include "canext/order/io.hpp"
#include "canext/order/maps.hpp"
#include "oracles.hpp"

using namespace canext;

namespace {

Lattice from_doc(const char* text) { return io::load_lattice(text); }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an error";
  return ErrorKind::invalid_document;
}

}  // namespace

TEST(Loader, PentagonDocument) {
  const Lattice L = from_doc(R"({"name":"n5","elements":["0","a","b","c","1"],
    "covers":[["0","a"],["a","b"],["b","1"],["0","c"],["c","1"]]})");
  EXPECT_EQ(L.size(), 5u);
  EXPECT_EQ(L.name(L.bottom()), "0");
  EXPECT_EQ(L.name(L.top()), "1");
  EXPECT_TRUE(isomorphic(L, catalog::n5()));
  EXPECT_FALSE(isomorphic(L, catalog::m3()));
  EXPECT_FALSE(is_distributive(L));
}

TEST(Loader, SingletonIsTrivialLattice) {
  const Lattice L = from_doc(R"({"name":"one","elements":["0"],"covers":[]})");
  EXPECT_EQ(L.bottom(), L.top());
}

TEST(Loader, RejectsMissingJoin) {
  EXPECT_EQ(kind_of([] { from_doc(R"({"elements":["0","a","b","1"],"covers":[["0","a"],["0","b"]]})"); }),
            ErrorKind::not_a_lattice);
  try {
    from_doc(R"({"elements":["0","a","b","1"],"covers":[["0","a"],["0","b"]]})");
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("no least upper bound for (0, 1)"), std::string::npos) << e.what();
  }
}

TEST(Loader, RejectsCyclesDuplicatesAndRedundantCovers) {
  EXPECT_EQ(kind_of([] { from_doc(R"({"elements":["0","1"],"covers":[["0","1"],["1","0"]]})"); }),
            ErrorKind::not_a_partial_order);
  EXPECT_EQ(kind_of([] { from_doc(R"({"elements":["0","0"],"covers":[]})"); }), ErrorKind::duplicate_element);
  EXPECT_EQ(kind_of([] { from_doc(R"({"elements":["0","a","1"],"covers":[["0","a"],["a","1"],["0","1"]]})"); }),
            ErrorKind::redundant_cover);
  EXPECT_EQ(kind_of([] { from_doc(R"({"elements":["0","1"],"covers":[["0","x"]]})"); }), ErrorKind::unknown_element);
  EXPECT_EQ(kind_of([] { from_doc("not json"); }), ErrorKind::invalid_document);
}

TEST(Loader, OperationsRoundTripAndTagValidation) {
  const char* doc = R"({"elements":["0","a","1"],"covers":[["0","a"],["a","1"]],
    "operations":{"f":{"arity":1,"monotone":["+"],"table":{"0":"0","a":"1","1":"1"}},
                  "g":{"arity":2,"monotone":["+","+"],"table":{
                     "0":{"0":"0","a":"0","1":"0"},"a":{"0":"0","a":"a","1":"a"},"1":{"0":"0","a":"a","1":"1"}}}}})";
  const Lattice L = from_doc(doc);
  ASSERT_TRUE(L.has_operation("g"));
  for (Elem x = 0; x < 3; ++x)
    for (Elem y = 0; y < 3; ++y) EXPECT_EQ(L.operation("g").apply(std::vector<Elem>{x, y}, 3), L.meet(x, y));
  const Lattice again = io::lattice_from_json(io::lattice_to_json(L));
  EXPECT_EQ(again.operation("f").table, L.operation("f").table);
  EXPECT_EQ(again.operation("g").table, L.operation("g").table);

  EXPECT_EQ(kind_of([] {
              from_doc(R"({"elements":["0","1"],"covers":[["0","1"]],
                "operations":{"n":{"arity":1,"monotone":["+"],"table":{"0":"1","1":"0"}}}})");
            }),
            ErrorKind::invalid_document);
  EXPECT_EQ(kind_of([] {
              from_doc(R"({"elements":["0","1"],"covers":[["0","1"]],
                "operations":{"n":{"arity":1,"monotone":["-"],"table":{"0":"1"}}}})");
            }),
            ErrorKind::invalid_document);
  EXPECT_EQ(kind_of([] { from_doc(R"({"elements":["0"],"covers":[]})").operation("zz"); }),
            ErrorKind::unknown_operation);
}

TEST(Lattice, TablesMatchBruteForceBounds) {
  for (const Lattice& L : {catalog::n5(), catalog::m3(), catalog::chain(4), catalog::boolean(3),
                           product(catalog::chain(2), catalog::chain(3))}) {
    const auto leq = oracle::closure(L.size(), L.poset().covers());
    for (Elem a = 0; a < L.size(); ++a)
      for (Elem b = 0; b < L.size(); ++b) {
        EXPECT_EQ(leq[a][b], L.leq(a, b));
        EXPECT_EQ(*oracle::lub(leq, a, b), L.join(a, b));
        EXPECT_EQ(*oracle::glb(leq, a, b), L.meet(a, b));
      }
  }
}

TEST(Lattice, AxiomsHoldExhaustively) {
  for (const Lattice& L : {catalog::n5(), catalog::m3(), catalog::chain(5), catalog::boolean(3)}) {
    const Elem n = static_cast<Elem>(L.size());
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        EXPECT_EQ(L.meet(a, b), L.meet(b, a));
        EXPECT_EQ(L.join(a, b), L.join(b, a));
        EXPECT_EQ(L.meet(a, L.join(a, b)), a);
        EXPECT_EQ(L.join(a, L.meet(a, b)), a);
        for (Elem c = 0; c < n; ++c) {
          EXPECT_EQ(L.meet(a, L.meet(b, c)), L.meet(L.meet(a, b), c));
          EXPECT_EQ(L.join(a, L.join(b, c)), L.join(L.join(a, b), c));
        }
      }
  }
}

TEST(Downset, Examples) {
  const Lattice c3 = catalog::chain(3);
  EXPECT_EQ(c3.poset().downset(make_set(3, {c3.index("a")})), make_set(3, {0, 1}));
  const Lattice N = catalog::n5();
  const auto d = N.poset().downset(make_set(5, {N.index("b"), N.index("c")}));
  EXPECT_EQ(d, make_set(5, {N.index("0"), N.index("a"), N.index("b"), N.index("c")}));
  EXPECT_TRUE(N.poset().downset(empty_set(5)).none());
  EXPECT_EQ(kind_of([&] { N.poset().downset(empty_set(4)); }), ErrorKind::unknown_element);
}

TEST(Downset, ClosureOperatorLaws) {
  std::mt19937 rng(7);
  for (const Lattice& L : {catalog::n5(), catalog::boolean(3), catalog::m3()}) {
    const auto& P = L.poset();
    for (int trial = 0; trial < 200; ++trial) {
      ElementSet s(L.size()), t(L.size());
      for (Elem e = 0; e < L.size(); ++e) {
        if (rng() % 3 == 0) s.set(e);
        if (rng() % 2 == 0) t.set(e);
      }
      t |= s;
      for (auto op : {&Poset::downset, &Poset::upset}) {
        const auto cs = (P.*op)(s);
        EXPECT_TRUE(s.is_subset_of(cs));
        EXPECT_EQ((P.*op)(cs), cs);
        EXPECT_TRUE(cs.is_subset_of((P.*op)(t)));
      }
    }
  }
}

TEST(Congruences, CountsMatchPartitionOracle) {
  const Lattice c3 = catalog::chain(3);
  const auto cons = enum_congruences(c3);
  EXPECT_EQ(cons.size(), 4u);
  EXPECT_EQ(enum_congruences(catalog::chain(1)).size(), 1u);
  EXPECT_EQ(enum_congruences(catalog::boolean(2)).size(), 4u);
  for (const Lattice& L : {catalog::n5(), catalog::m3(), catalog::chain(4), catalog::boolean(3),
                           product(catalog::chain(2), catalog::chain(3))}) {
    std::set<std::vector<Elem>> lib, brute;
    for (const auto& c : enum_congruences(L)) lib.insert(c.block);
    for (const auto& p : oracle::congruences(L)) brute.insert(p);
    EXPECT_EQ(lib, brute);
  }
}

TEST(Congruences, RespectOperations) {
  Lattice L = catalog::chain(3);
  // f(0) = 0 and f(a) = 1, so collapsing {0,a} is no longer compatible.
  L.add_operation(Operation{"f", 1, {Monotonicity::preserving}, {0, 2, 2}});
  std::set<std::vector<Elem>> lib, brute;
  for (const auto& c : enum_congruences(L)) lib.insert(c.block);
  for (const auto& p : oracle::congruences(L)) brute.insert(p);
  EXPECT_EQ(lib, brute);
  EXPECT_EQ(lib.size(), 3u);
  Limits tight;
  tight.congruence_carrier = 2;
  EXPECT_EQ(kind_of([&] { enum_congruences(L, tight); }), ErrorKind::cap_exceeded);
}

TEST(Quotient, Examples) {
  const Lattice c3 = catalog::chain(3);
  const Congruence lower = normalize_partition({0, 0, 1});
  const auto q = quotient(c3, lower);
  EXPECT_TRUE(isomorphic(q.lattice, catalog::chain(2)));
  EXPECT_TRUE(is_homomorphism(c3, q.lattice, q.map));
  EXPECT_TRUE(isomorphic(quotient(c3, identity_congruence(3)).lattice, c3));
  EXPECT_EQ(quotient(c3, total_congruence(3)).lattice.size(), 1u);
  EXPECT_EQ(kind_of([&] { quotient(catalog::n5(), normalize_partition({0, 1, 0, 1, 1})); }),
            ErrorKind::incompatible_congruence);
}

TEST(Quotient, EverySurjectiveHomomorphismComesFromACongruence) {
  // Brute force: all maps L -> Q for small targets Q, filtered to surjective homomorphisms; the kernel must be
  // one of the enumerated congruences.
  for (const Lattice& L : {catalog::n5(), catalog::m3(), catalog::boolean(2), catalog::chain(4)}) {
    std::set<std::vector<Elem>> kernels;
    for (const auto& c : enum_congruences(L)) kernels.insert(c.block);
    for (const Lattice& Q : {catalog::chain(1), catalog::chain(2), catalog::chain(3), catalog::boolean(2)}) {
      const std::size_t total = int_pow(Q.size(), L.size());
      for (std::size_t idx = 0; idx < total; ++idx) {
        const auto h = tuple_decode(idx, L.size(), Q.size());
        if (!is_surjective(h, Q.size()) || !is_homomorphism(L, Q, h)) continue;
        EXPECT_TRUE(kernels.count(normalize_partition(h).block));
      }
    }
  }
}

TEST(Adjoints, Examples) {
  const Lattice c3 = catalog::chain(3);
  const auto id = adjoints(c3, c3, identity_map(3));
  EXPECT_EQ(id.lower, identity_map(3));
  EXPECT_EQ(id.upper, identity_map(3));

  const auto q = quotient(c3, normalize_partition({0, 0, 1}));
  const auto adj = adjoints(c3, q.lattice, q.map);
  EXPECT_EQ(adj.lower[q.map[2]], 2u);
  EXPECT_EQ(adj.lower[q.map[0]], 0u);
  EXPECT_EQ(adj.upper[q.map[0]], c3.index("a"));

  EXPECT_EQ(kind_of([&] { adjoints(c3, c3, ElemMap{0, 0, 0}); }), ErrorKind::not_complete_homomorphism);
}

TEST(Isomorphism, FixedPointsAndOperations) {
  const Lattice B = catalog::boolean(2);
  int count = 0;
  for_each_isomorphism(B, B, [&](const std::vector<Elem>&) {
    ++count;
    return true;
  });
  EXPECT_EQ(count, 2);
  std::vector<std::optional<Elem>> fixed(4);
  fixed[1] = 1;
  count = 0;
  for_each_isomorphism(B, B, [&](const std::vector<Elem>&) { return ++count, true; }, fixed);
  EXPECT_EQ(count, 1);
  for (const Lattice& L : {catalog::n5(), catalog::m3(), catalog::chain(4)}) {
    const auto P = Lattice::from_poset(L.poset().dual());
    EXPECT_EQ(find_isomorphism(L, P).has_value(), oracle::isomorphism(L, P).has_value());
  }
}

TEST(Sublattice, ClosureAndValidation) {
  const Lattice N = catalog::n5();
  const auto gen = sublattice_closure(N, make_set(5, {N.index("a"), N.index("c")}));
  EXPECT_EQ(gen, full_set(5) & ~make_set(5, {N.index("b")}));
  const auto sub = sublattice(N, gen);
  EXPECT_TRUE(isomorphic(sub.lattice, catalog::boolean(2)));
  EXPECT_EQ(kind_of([&] { sublattice(N, make_set(5, {N.index("a"), N.index("c")})); }),
            ErrorKind::not_complete_sublattice);
}
