#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "canext/core/element_set.hpp"
#include "canext/core/errors.hpp"
#include "canext/order/poset.hpp"

namespace canext {

enum class Monotonicity { preserving, reversing, untagged };

inline char to_symbol(Monotonicity m) {
  switch (m) {
    case Monotonicity::preserving: return '+';
    case Monotonicity::reversing: return '-';
    case Monotonicity::untagged: return '?';
  }
  return '?';
}

/// Row-major index of an argument tuple over a carrier of size `n`.
inline std::size_t tuple_index(std::span<const Elem> args, std::size_t n) {
  std::size_t idx = 0;
  for (Elem a : args) idx = idx * n + a;
  return idx;
}

inline std::vector<Elem> tuple_decode(std::size_t idx, std::size_t arity, std::size_t n) {
  std::vector<Elem> args(arity);
  for (std::size_t k = arity; k-- > 0;) {
    args[k] = static_cast<Elem>(idx % n);
    idx /= n;
  }
  return args;
}

inline std::size_t int_pow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

/// An n-ary operation on a lattice carrier, with a declared monotonicity tag
/// per coordinate. Tags are validated when the operation is attached.
struct Operation {
  std::string name;
  std::size_t arity = 1;
  std::vector<Monotonicity> tags;
  std::vector<Elem> table;

  Elem apply(std::span<const Elem> args, std::size_t n) const { return table[tuple_index(args, n)]; }
  Elem operator()(Elem a) const { return table[a]; }

  bool fully_tagged() const {
    for (auto t : tags)
      if (t == Monotonicity::untagged) return false;
    return true;
  }
};

class Lattice;
using LatticePtr = std::shared_ptr<const Lattice>;

/// A finite bounded lattice with cached meet/join tables and optional
/// attached operations.
class Lattice {
 public:
  Lattice() = default;

  /// Derives meets and joins from the order; throws NotALattice naming the
  /// first pair without a least upper (or greatest lower) bound.
  static Lattice from_poset(Poset poset) {
    Lattice L;
    const std::size_t n = poset.size();
    if (n == 0) throw Error(ErrorKind::not_a_lattice, "empty carrier");
    L.poset_ = std::move(poset);
    L.meet_.assign(n * n, 0);
    L.join_.assign(n * n, 0);
    const Poset& P = L.poset_;
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = a; b < n; ++b) {
        const auto j = least_of(P, P.up(a) & P.up(b));
        if (!j) throw Error(ErrorKind::not_a_lattice, "no least upper bound for (" + P.name(a) + ", " + P.name(b) + ")");
        const auto m = greatest_of(P, P.down(a) & P.down(b));
        if (!m) throw Error(ErrorKind::not_a_lattice, "no greatest lower bound for (" + P.name(a) + ", " + P.name(b) + ")");
        L.join_[a * n + b] = L.join_[b * n + a] = *j;
        L.meet_[a * n + b] = L.meet_[b * n + a] = *m;
      }
    }
    L.bottom_ = *least_of(P, full_set(n));
    L.top_ = *greatest_of(P, full_set(n));
    return L;
  }

  template <class Leq>
  static Lattice from_predicate(std::vector<std::string> names, Leq&& leq) {
    return from_poset(Poset::from_predicate(std::move(names), std::forward<Leq>(leq)));
  }

  std::size_t size() const noexcept { return poset_.size(); }
  const Poset& poset() const noexcept { return poset_; }
  Elem bottom() const noexcept { return bottom_; }
  Elem top() const noexcept { return top_; }

  bool leq(Elem a, Elem b) const { return poset_.leq(a, b); }
  Elem meet(Elem a, Elem b) const { return meet_[a * size() + b]; }
  Elem join(Elem a, Elem b) const { return join_[a * size() + b]; }

  /// Meet of a subset; the empty meet is the top.
  Elem meet_all(const ElementSet& s) const {
    Elem r = top_;
    for_each_element(s, [&](Elem e) { r = meet(r, e); });
    return r;
  }

  /// Join of a subset; the empty join is the bottom.
  Elem join_all(const ElementSet& s) const {
    Elem r = bottom_;
    for_each_element(s, [&](Elem e) { r = join(r, e); });
    return r;
  }

  template <class Range>
  Elem meet_of(const Range& elems) const {
    Elem r = top_;
    for (Elem e : elems) r = meet(r, e);
    return r;
  }

  template <class Range>
  Elem join_of(const Range& elems) const {
    Elem r = bottom_;
    for (Elem e : elems) r = join(r, e);
    return r;
  }

  const std::string& name(Elem a) const { return poset_.name(a); }
  const std::vector<std::string>& names() const noexcept { return poset_.names(); }
  Elem index(std::string_view name) const { return poset_.index(name); }

  const std::map<std::string, Operation>& operations() const noexcept { return ops_; }

  const Operation& operation(const std::string& name) const {
    if (auto it = ops_.find(name); it != ops_.end()) return it->second;
    throw Error(ErrorKind::unknown_operation, "no operation named '" + name + "'");
  }

  bool has_operation(const std::string& name) const { return ops_.count(name) != 0; }

  /// Attaches an operation after validating totality and its monotonicity tags.
  void add_operation(Operation op) {
    const std::size_t n = size();
    if (op.arity == 0) throw Error(ErrorKind::invalid_document, "operation '" + op.name + "' has arity 0");
    if (op.tags.empty()) op.tags.assign(op.arity, Monotonicity::untagged);
    if (op.tags.size() != op.arity)
      throw Error(ErrorKind::invalid_document, "operation '" + op.name + "' has the wrong number of tags");
    if (op.table.size() != int_pow(n, op.arity))
      throw Error(ErrorKind::invalid_document, "operation '" + op.name + "' is not total");
    for (Elem v : op.table)
      if (v >= n) throw Error(ErrorKind::unknown_element, "operation '" + op.name + "' leaves the carrier");
    const auto covers = poset_.covers();
    for (std::size_t k = 0; k < op.arity; ++k) {
      if (op.tags[k] == Monotonicity::untagged) continue;
      for (std::size_t idx = 0; idx < op.table.size(); ++idx) {
        auto args = tuple_decode(idx, op.arity, n);
        for (const auto& [lo, hi] : covers) {
          if (args[k] != lo) continue;
          const Elem before = op.table[idx];
          args[k] = hi;
          const Elem after = op.apply(args, n);
          args[k] = lo;
          const bool ok = op.tags[k] == Monotonicity::preserving ? leq(before, after) : leq(after, before);
          if (!ok)
            throw Error(ErrorKind::invalid_document, "operation '" + op.name + "' violates its tag in coordinate " +
                                                         std::to_string(k));
        }
      }
    }
    std::string key = op.name;
    ops_[key] = std::move(op);
  }

  Lattice without_operations() const {
    Lattice L = *this;
    L.ops_.clear();
    return L;
  }

  /// The order dual; operations are dropped.
  Lattice dual() const {
    Lattice L;
    L.poset_ = poset_.dual();
    L.meet_ = join_;
    L.join_ = meet_;
    L.bottom_ = top_;
    L.top_ = bottom_;
    return L;
  }

 private:
  static std::optional<Elem> least_of(const Poset& P, const ElementSet& s) {
    for (auto c = s.find_first(); c != ElementSet::npos; c = s.find_next(c))
      if (s.is_subset_of(P.up(static_cast<Elem>(c)))) return static_cast<Elem>(c);
    return std::nullopt;
  }

  static std::optional<Elem> greatest_of(const Poset& P, const ElementSet& s) {
    for (auto c = s.find_first(); c != ElementSet::npos; c = s.find_next(c))
      if (s.is_subset_of(P.down(static_cast<Elem>(c)))) return static_cast<Elem>(c);
    return std::nullopt;
  }

  Poset poset_;
  Elem bottom_ = 0;
  Elem top_ = 0;
  std::vector<Elem> meet_;
  std::vector<Elem> join_;
  std::map<std::string, Operation> ops_;
};

inline LatticePtr share(Lattice L) { return std::make_shared<const Lattice>(std::move(L)); }

}  // namespace canext
