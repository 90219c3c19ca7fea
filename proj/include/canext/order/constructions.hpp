#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "canext/core/element_set.hpp"
#include "canext/core/errors.hpp"
#include "canext/order/lattice.hpp"

namespace canext {

// ---------------------------------------------------------------------------
// Products

/// Cartesian product with row-major indexing: the tuple (x_0, ..., x_{k-1})
/// sits at index tuple_index over the mixed radix of the factor sizes.
/// Operations present in every factor with the same arity are carried over
/// coordinatewise.
inline Lattice product_of(const std::vector<const Lattice*>& factors) {
  if (factors.empty()) throw Error(ErrorKind::invalid_document, "product of no factors");
  std::size_t n = 1;
  for (const auto* f : factors) n *= f->size();
  const std::size_t k = factors.size();
  auto decode = [&](std::size_t idx) {
    std::vector<Elem> coords(k);
    for (std::size_t i = k; i-- > 0;) {
      coords[i] = static_cast<Elem>(idx % factors[i]->size());
      idx /= factors[i]->size();
    }
    return coords;
  };
  std::vector<std::vector<Elem>> coords(n);
  std::vector<std::string> names(n);
  for (std::size_t idx = 0; idx < n; ++idx) {
    coords[idx] = decode(idx);
    std::string name = "(";
    for (std::size_t i = 0; i < k; ++i) {
      if (i) name += ",";
      name += factors[i]->name(coords[idx][i]);
    }
    names[idx] = name + ")";
  }
  Lattice P = Lattice::from_predicate(std::move(names), [&](Elem a, Elem b) {
    for (std::size_t i = 0; i < k; ++i)
      if (!factors[i]->leq(coords[a][i], coords[b][i])) return false;
    return true;
  });
  auto encode = [&](const std::vector<Elem>& c) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < k; ++i) idx = idx * factors[i]->size() + c[i];
    return static_cast<Elem>(idx);
  };
  for (const auto& [opname, op0] : factors[0]->operations()) {
    bool everywhere = true;
    for (const auto* f : factors)
      if (!f->has_operation(opname) || f->operation(opname).arity != op0.arity) everywhere = false;
    if (!everywhere) continue;
    Operation op;
    op.name = opname;
    op.arity = op0.arity;
    op.tags.assign(op.arity, Monotonicity::untagged);
    for (std::size_t c = 0; c < op.arity; ++c) {
      Monotonicity t = op0.tags[c];
      for (const auto* f : factors)
        if (f->operation(opname).tags[c] != t) t = Monotonicity::untagged;
      op.tags[c] = t;
    }
    op.table.resize(int_pow(n, op.arity));
    for (std::size_t idx = 0; idx < op.table.size(); ++idx) {
      const auto args = tuple_decode(idx, op.arity, n);
      std::vector<Elem> out(k);
      for (std::size_t i = 0; i < k; ++i) {
        std::vector<Elem> local(op.arity);
        for (std::size_t c = 0; c < op.arity; ++c) local[c] = coords[args[c]][i];
        out[i] = factors[i]->operation(opname).apply(local, factors[i]->size());
      }
      op.table[idx] = encode(out);
    }
    P.add_operation(std::move(op));
  }
  return P;
}

inline Lattice product(const Lattice& a, const Lattice& b) { return product_of({&a, &b}); }

inline Lattice power(const Lattice& L, std::size_t k) {
  std::vector<const Lattice*> factors(k, &L);
  return product_of(factors);
}

/// Coordinates of a product element, for a product built by `product_of`.
inline std::vector<Elem> product_coordinates(const std::vector<std::size_t>& factor_sizes, Elem idx) {
  std::vector<Elem> coords(factor_sizes.size());
  std::size_t rest = idx;
  for (std::size_t i = factor_sizes.size(); i-- > 0;) {
    coords[i] = static_cast<Elem>(rest % factor_sizes[i]);
    rest /= factor_sizes[i];
  }
  return coords;
}

inline Elem product_index(const std::vector<std::size_t>& factor_sizes, const std::vector<Elem>& coords) {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < factor_sizes.size(); ++i) idx = idx * factor_sizes[i] + coords[i];
  return static_cast<Elem>(idx);
}

// ---------------------------------------------------------------------------
// Sublattices

/// Closure of `generators` under binary meet and join, the bounds, and (when
/// `with_operations`) every attached operation.
inline ElementSet sublattice_closure(const Lattice& L, ElementSet generators, bool with_operations = true) {
  generators.set(L.bottom());
  generators.set(L.top());
  bool changed = true;
  while (changed) {
    changed = false;
    const auto members = elements_of(generators);
    for (Elem a : members) {
      for (Elem b : members) {
        for (Elem c : {L.meet(a, b), L.join(a, b)}) {
          if (!generators.test(c)) {
            generators.set(c);
            changed = true;
          }
        }
      }
    }
    if (!with_operations) continue;
    for (const auto& [name, op] : L.operations()) {
      const std::size_t total = int_pow(members.size(), op.arity);
      for (std::size_t idx = 0; idx < total; ++idx) {
        const auto local = tuple_decode(idx, op.arity, members.size());
        std::vector<Elem> args(op.arity);
        for (std::size_t c = 0; c < op.arity; ++c) args[c] = members[local[c]];
        const Elem v = op.apply(args, L.size());
        if (!generators.test(v)) {
          generators.set(v);
          changed = true;
        }
      }
    }
  }
  return generators;
}

/// A lattice together with its inclusion into an ambient lattice.
struct Embedded {
  Lattice lattice;
  std::vector<Elem> inclusion;
};

/// The sublattice on `carrier`, which must contain the bounds and be closed
/// under meet, join and attached operations.
inline Embedded sublattice(const Lattice& L, const ElementSet& carrier) {
  if (carrier.size() != L.size()) throw Error(ErrorKind::carrier_mismatch, "subset has the wrong width");
  if (sublattice_closure(L, carrier) != carrier)
    throw Error(ErrorKind::not_complete_sublattice, "subset is not closed under the lattice operations and bounds");
  Embedded out;
  out.inclusion = elements_of(carrier);
  out.lattice = Lattice::from_poset(L.poset().induced(carrier));
  std::vector<Elem> local(L.size(), 0);
  for (Elem i = 0; i < out.inclusion.size(); ++i) local[out.inclusion[i]] = i;
  const std::size_t m = out.inclusion.size();
  for (const auto& [name, op] : L.operations()) {
    Operation sub{name, op.arity, op.tags, std::vector<Elem>(int_pow(m, op.arity))};
    for (std::size_t idx = 0; idx < sub.table.size(); ++idx) {
      auto args = tuple_decode(idx, op.arity, m);
      for (auto& a : args) a = out.inclusion[a];
      sub.table[idx] = local[op.apply(args, L.size())];
    }
    out.lattice.add_operation(std::move(sub));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Properties

/// A triple (a, b, c) with a ∧ (b ∨ c) ≠ (a ∧ b) ∨ (a ∧ c), if one exists.
inline std::optional<std::tuple<Elem, Elem, Elem>> distributivity_failure(const Lattice& L) {
  const Elem n = static_cast<Elem>(L.size());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (L.meet(a, L.join(b, c)) != L.join(L.meet(a, b), L.meet(a, c))) return std::tuple{a, b, c};
  return std::nullopt;
}

inline bool is_distributive(const Lattice& L) { return !distributivity_failure(L).has_value(); }

/// The complement map of a Boolean lattice, or nullopt if L is not Boolean.
inline std::optional<std::vector<Elem>> boolean_complement(const Lattice& L) {
  if (!is_distributive(L)) return std::nullopt;
  std::vector<Elem> comp(L.size());
  for (Elem a = 0; a < L.size(); ++a) {
    bool found = false;
    for (Elem b = 0; b < L.size() && !found; ++b) {
      if (L.meet(a, b) == L.bottom() && L.join(a, b) == L.top()) {
        comp[a] = b;
        found = true;
      }
    }
    if (!found) return std::nullopt;
  }
  return comp;
}

inline bool is_boolean(const Lattice& L) { return boolean_complement(L).has_value(); }

inline ElementSet atoms(const Lattice& L) {
  ElementSet out(L.size());
  for (Elem a = 0; a < L.size(); ++a) {
    if (a == L.bottom()) continue;
    ElementSet below = L.poset().down(a);
    below.reset(a);
    if (below.count() == 1) out.set(a);
  }
  return out;
}

/// Lattice homomorphism test, including preservation of the bounds.
inline bool is_homomorphism(const Lattice& src, const Lattice& dst, const std::vector<Elem>& h) {
  if (h.size() != src.size()) return false;
  if (h[src.bottom()] != dst.bottom() || h[src.top()] != dst.top()) return false;
  for (Elem a = 0; a < src.size(); ++a)
    for (Elem b = 0; b < src.size(); ++b)
      if (h[src.meet(a, b)] != dst.meet(h[a], h[b]) || h[src.join(a, b)] != dst.join(h[a], h[b])) return false;
  return true;
}

inline bool is_order_isomorphism(const Lattice& a, const Lattice& b, const std::vector<Elem>& f) {
  if (a.size() != b.size() || f.size() != a.size()) return false;
  std::vector<bool> hit(b.size(), false);
  for (Elem x : f) {
    if (x >= b.size() || hit[x]) return false;
    hit[x] = true;
  }
  for (Elem x = 0; x < a.size(); ++x)
    for (Elem y = 0; y < a.size(); ++y)
      if (a.leq(x, y) != b.leq(f[x], f[y])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Isomorphism search

namespace detail {

inline bool operations_commute(const Lattice& a, const Lattice& b, const std::vector<Elem>& f) {
  for (const auto& [name, op] : a.operations()) {
    if (!b.has_operation(name)) return false;
    const auto& other = b.operation(name);
    if (other.arity != op.arity) return false;
    for (std::size_t idx = 0; idx < op.table.size(); ++idx) {
      auto args = tuple_decode(idx, op.arity, a.size());
      for (auto& x : args) x = f[x];
      if (other.apply(args, b.size()) != f[op.table[idx]]) return false;
    }
  }
  return a.operations().size() == b.operations().size();
}

}  // namespace detail

/// Enumerates order isomorphisms a -> b (which are lattice isomorphisms).
/// `fixed[x]`, when set, pins the image of x. With `respect_operations`, only
/// maps commuting with every attached operation are reported. The callback
/// returns false to stop the search.
inline void for_each_isomorphism(const Lattice& a, const Lattice& b,
                                 const std::function<bool(const std::vector<Elem>&)>& callback,
                                 const std::vector<std::optional<Elem>>& fixed = {},
                                 bool respect_operations = false) {
  const std::size_t n = a.size();
  if (b.size() != n) return;
  auto signature = [](const Lattice& L, Elem x) {
    return std::pair{L.poset().up(x).count(), L.poset().down(x).count()};
  };
  std::vector<Elem> order(n);
  for (Elem i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](Elem x, Elem y) {
    const bool fx = x < fixed.size() && fixed[x].has_value();
    const bool fy = y < fixed.size() && fixed[y].has_value();
    if (fx != fy) return fx;
    return a.poset().down(x).count() < a.poset().down(y).count();
  });
  std::vector<Elem> image(n, 0);
  std::vector<bool> used(n, false);
  bool stop = false;
  std::function<void(std::size_t)> extend = [&](std::size_t depth) {
    if (stop) return;
    if (depth == n) {
      if (respect_operations && !detail::operations_commute(a, b, image)) return;
      if (!callback(image)) stop = true;
      return;
    }
    const Elem x = order[depth];
    auto try_candidate = [&](Elem y) {
      if (used[y] || signature(a, x) != signature(b, y)) return;
      for (std::size_t d = 0; d < depth; ++d) {
        const Elem w = order[d];
        if (a.leq(w, x) != b.leq(image[w], y) || a.leq(x, w) != b.leq(y, image[w])) return;
      }
      image[x] = y;
      used[y] = true;
      extend(depth + 1);
      used[y] = false;
    };
    if (x < fixed.size() && fixed[x].has_value()) {
      try_candidate(*fixed[x]);
    } else {
      for (Elem y = 0; y < n && !stop; ++y) try_candidate(y);
    }
  };
  extend(0);
}

inline std::optional<std::vector<Elem>> find_isomorphism(const Lattice& a, const Lattice& b,
                                                         const std::vector<std::optional<Elem>>& fixed = {},
                                                         bool respect_operations = false) {
  std::optional<std::vector<Elem>> found;
  for_each_isomorphism(
      a, b,
      [&](const std::vector<Elem>& f) {
        found = f;
        return false;
      },
      fixed, respect_operations);
  return found;
}

inline bool isomorphic(const Lattice& a, const Lattice& b) { return find_isomorphism(a, b).has_value(); }

}  // namespace canext
