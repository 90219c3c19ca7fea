#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "canext/core/element_set.hpp"
#include "canext/core/errors.hpp"
#include "canext/core/limits.hpp"
#include "canext/order/lattice.hpp"
#include "canext/order/maps.hpp"

namespace canext {

/// A partition of a lattice carrier, stored as a block label per element.
/// Labels are normalized so that blocks are numbered in order of their least
/// element index; equal partitions therefore compare equal.
struct Congruence {
  std::vector<Elem> block;

  std::size_t block_count() const {
    return block.empty() ? 0 : *std::max_element(block.begin(), block.end()) + 1;
  }

  std::vector<ElementSet> blocks() const {
    std::vector<ElementSet> out(block_count(), ElementSet(block.size()));
    for (Elem a = 0; a < block.size(); ++a) out[block[a]].set(a);
    return out;
  }

  bool related(Elem a, Elem b) const { return block[a] == block[b]; }
  bool operator==(const Congruence&) const = default;
  auto operator<=>(const Congruence&) const = default;
};

inline Congruence normalize_partition(const std::vector<Elem>& labels) {
  std::vector<Elem> remap(labels.size() + 1, static_cast<Elem>(-1));
  Congruence c;
  c.block.resize(labels.size());
  Elem next = 0;
  for (std::size_t a = 0; a < labels.size(); ++a) {
    if (remap[labels[a]] == static_cast<Elem>(-1)) remap[labels[a]] = next++;
    c.block[a] = remap[labels[a]];
  }
  return c;
}

inline Congruence identity_congruence(std::size_t n) { return normalize_partition(identity_map(n)); }
inline Congruence total_congruence(std::size_t n) { return Congruence{std::vector<Elem>(n, 0)}; }

/// Compatibility with meet, join, the bounds and every attached operation,
/// plus the interval shape of each block.
inline bool is_congruence(const Lattice& L, const Congruence& theta) {
  const Elem n = static_cast<Elem>(L.size());
  if (theta.block.size() != n) return false;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (!theta.related(a, b)) continue;
      for (Elem z = 0; z < n; ++z)
        if (!theta.related(L.meet(a, z), L.meet(b, z)) || !theta.related(L.join(a, z), L.join(b, z))) return false;
    }
  for (const auto& [name, op] : L.operations()) {
    for (std::size_t idx = 0; idx < op.table.size(); ++idx) {
      auto args = tuple_decode(idx, op.arity, n);
      for (std::size_t c = 0; c < op.arity; ++c) {
        const Elem orig = args[c];
        for (Elem other = 0; other < n; ++other) {
          if (!theta.related(orig, other)) continue;
          args[c] = other;
          if (!theta.related(op.table[idx], op.apply(args, n))) return false;
        }
        args[c] = orig;
      }
    }
  }
  for (const auto& blk : theta.blocks()) {
    const Elem lo = L.meet_all(blk);
    const Elem hi = L.join_all(blk);
    if (!blk.test(lo) || !blk.test(hi)) return false;
    if ((L.poset().up(lo) & L.poset().down(hi)) != blk) return false;
  }
  return true;
}

namespace detail {

struct UnionFind {
  std::vector<Elem> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), Elem{0}); }
  Elem find(Elem x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(Elem a, Elem b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

/// Smallest congruence containing every pair already merged in `uf`.
inline Congruence close_congruence(const Lattice& L, UnionFind uf) {
  const Elem n = static_cast<Elem>(L.size());
  bool changed = true;
  while (changed) {
    changed = false;
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = a + 1; b < n; ++b) {
        if (uf.find(a) != uf.find(b)) continue;
        for (Elem z = 0; z < n; ++z) {
          changed |= uf.unite(L.meet(a, z), L.meet(b, z));
          changed |= uf.unite(L.join(a, z), L.join(b, z));
        }
        for (const auto& [name, op] : L.operations()) {
          const std::size_t others = int_pow(n, op.arity - 1);
          for (std::size_t c = 0; c < op.arity; ++c) {
            for (std::size_t rest = 0; rest < others; ++rest) {
              auto partial = tuple_decode(rest, op.arity - 1, n);
              std::vector<Elem> args(op.arity);
              for (std::size_t k = 0, r = 0; k < op.arity; ++k) args[k] = k == c ? a : partial[r++];
              const Elem fa = op.apply(args, n);
              args[c] = b;
              changed |= uf.unite(fa, op.apply(args, n));
            }
          }
        }
      }
    }
  }
  std::vector<Elem> labels(n);
  for (Elem a = 0; a < n; ++a) labels[a] = uf.find(a);
  return normalize_partition(labels);
}

}  // namespace detail

inline Congruence principal_congruence(const Lattice& L, Elem a, Elem b) {
  detail::UnionFind uf(L.size());
  uf.unite(a, b);
  return detail::close_congruence(L, std::move(uf));
}

/// Join in the congruence lattice: the congruence generated by both.
inline Congruence join_congruences(const Lattice& L, const Congruence& x, const Congruence& y) {
  detail::UnionFind uf(L.size());
  for (Elem a = 0; a < L.size(); ++a)
    for (Elem b = a + 1; b < L.size(); ++b)
      if (x.related(a, b) || y.related(a, b)) uf.unite(a, b);
  return detail::close_congruence(L, std::move(uf));
}

/// All congruences of L (respecting attached operations), sorted. Every
/// congruence is a join of principal ones, so the enumeration closes the
/// principal congruences under joins.
inline std::vector<Congruence> enum_congruences(const Lattice& L, const Limits& limits = Limits::from_env()) {
  if (L.size() > limits.congruence_carrier)
    throw Error(ErrorKind::cap_exceeded, "congruence enumeration is capped at " +
                                             std::to_string(limits.congruence_carrier) + " elements");
  std::set<Congruence> principal;
  for (Elem a = 0; a < L.size(); ++a)
    for (Elem b = a + 1; b < L.size(); ++b) principal.insert(principal_congruence(L, a, b));
  std::set<Congruence> all{identity_congruence(L.size())};
  std::vector<Congruence> frontier(all.begin(), all.end());
  while (!frontier.empty()) {
    std::vector<Congruence> next;
    for (const auto& c : frontier)
      for (const auto& p : principal) {
        auto j = join_congruences(L, c, p);
        if (all.insert(j).second) next.push_back(std::move(j));
      }
    frontier = std::move(next);
  }
  std::vector<Congruence> out(all.begin(), all.end());
  for (const auto& c : out)
    if (!is_congruence(L, c)) throw Error(ErrorKind::incompatible_congruence, "generated partition failed validation");
  return out;
}

struct Quotient {
  Lattice lattice;
  ElemMap map;
};

/// The quotient lattice on the blocks of θ, with induced operations. Blocks
/// are named by listing their members, e.g. "{0,a}".
inline Quotient quotient(const Lattice& L, const Congruence& theta) {
  if (!is_congruence(L, theta)) throw Error(ErrorKind::incompatible_congruence, "partition is not a congruence");
  const auto blocks = theta.blocks();
  const std::size_t m = blocks.size();
  std::vector<Elem> rep(m);
  std::vector<std::string> names(m);
  for (std::size_t k = 0; k < m; ++k) {
    rep[k] = L.join_all(blocks[k]);
    std::string s = "{";
    bool first = true;
    for_each_element(blocks[k], [&](Elem e) {
      if (!first) s += ",";
      s += L.name(e);
      first = false;
    });
    names[k] = s + "}";
  }
  Quotient q;
  q.map = theta.block;
  q.lattice = Lattice::from_predicate(std::move(names), [&](Elem x, Elem y) { return L.leq(rep[x], rep[y]); });
  for (const auto& [name, op] : L.operations()) {
    Operation qop{name, op.arity, op.tags, std::vector<Elem>(int_pow(m, op.arity))};
    for (std::size_t idx = 0; idx < qop.table.size(); ++idx) {
      auto args = tuple_decode(idx, op.arity, m);
      for (auto& x : args) x = rep[x];
      qop.table[idx] = theta.block[op.apply(args, L.size())];
    }
    q.lattice.add_operation(std::move(qop));
  }
  return q;
}

}  // namespace canext
