#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "canext/core/element_set.hpp"
#include "canext/core/errors.hpp"

namespace canext {

/// A finite partial order over named elements.
///
/// The order relation is materialized at construction as two bit matrices
/// (`up(a)` = {b | a <= b}, `down(a)` = {b | b <= a}); every query goes through
/// them. Element names are opaque labels used only for I/O.
class Poset {
 public:
  Poset() = default;

  /// Builds the order from a Hasse diagram. Covers must be irreflexive,
  /// acyclic and transitively reduced.
  static Poset from_covers(std::vector<std::string> names,
                           const std::vector<std::pair<std::string, std::string>>& covers) {
    Poset p;
    p.set_names(std::move(names));
    const std::size_t n = p.size();
    std::vector<std::vector<Elem>> succ(n);
    std::vector<std::size_t> indegree(n, 0);
    for (const auto& [lo, hi] : covers) {
      const Elem a = p.index(lo);
      const Elem b = p.index(hi);
      if (a == b) throw Error(ErrorKind::not_a_partial_order, "reflexive cover " + lo + " < " + hi);
      if (std::find(succ[a].begin(), succ[a].end(), b) != succ[a].end())
        throw Error(ErrorKind::redundant_cover, "cover " + lo + " < " + hi + " listed twice");
      succ[a].push_back(b);
      ++indegree[b];
    }
    std::vector<Elem> topo;
    topo.reserve(n);
    for (Elem i = 0; i < n; ++i)
      if (indegree[i] == 0) topo.push_back(i);
    for (std::size_t k = 0; k < topo.size(); ++k)
      for (Elem b : succ[topo[k]])
        if (--indegree[b] == 0) topo.push_back(b);
    if (topo.size() != n) throw Error(ErrorKind::not_a_partial_order, "cover relation has a cycle");

    p.up_.assign(n, ElementSet(n));
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
      const Elem a = *it;
      p.up_[a].set(a);
      for (Elem b : succ[a]) p.up_[a] |= p.up_[b];
    }
    for (Elem a = 0; a < n; ++a) {
      for (Elem b : succ[a]) {
        for (Elem c : succ[a]) {
          if (c != b && p.up_[c].test(b))
            throw Error(ErrorKind::redundant_cover, "cover " + p.names_[a] + " < " + p.names_[b] +
                                                        " is implied via " + p.names_[c]);
        }
      }
    }
    p.finish_down();
    return p;
  }

  /// Builds the order from its up-set rows, validating reflexivity,
  /// antisymmetry and transitivity.
  static Poset from_order(std::vector<std::string> names, std::vector<ElementSet> up) {
    Poset p;
    p.set_names(std::move(names));
    const std::size_t n = p.size();
    if (up.size() != n) throw Error(ErrorKind::invalid_document, "order rows do not match carrier");
    for (auto& row : up)
      if (row.size() != n) throw Error(ErrorKind::invalid_document, "order row has wrong width");
    p.up_ = std::move(up);
    for (Elem a = 0; a < n; ++a) {
      if (!p.up_[a].test(a)) throw Error(ErrorKind::not_a_partial_order, "not reflexive at " + p.names_[a]);
      for (std::size_t b = p.up_[a].find_first(); b != ElementSet::npos; b = p.up_[a].find_next(b)) {
        if (b != a && p.up_[b].test(a))
          throw Error(ErrorKind::not_a_partial_order,
                      "not antisymmetric: " + p.names_[a] + " and " + p.names_[b]);
        if (!p.up_[b].is_subset_of(p.up_[a]))
          throw Error(ErrorKind::not_a_partial_order, "not transitive through " + p.names_[b]);
      }
    }
    p.finish_down();
    return p;
  }

  template <class Leq>
  static Poset from_predicate(std::vector<std::string> names, Leq&& leq) {
    const std::size_t n = names.size();
    std::vector<ElementSet> up(n, ElementSet(n));
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        if (leq(a, b)) up[a].set(b);
    return from_order(std::move(names), std::move(up));
  }

  std::size_t size() const noexcept { return names_.size(); }
  bool leq(Elem a, Elem b) const { return up_[a].test(b); }
  bool lt(Elem a, Elem b) const { return a != b && up_[a].test(b); }
  const ElementSet& up(Elem a) const { return up_[a]; }
  const ElementSet& down(Elem a) const { return down_[a]; }

  const std::string& name(Elem a) const { return names_[a]; }
  const std::vector<std::string>& names() const noexcept { return names_; }

  std::optional<Elem> find(std::string_view name) const {
    if (auto it = index_.find(std::string(name)); it != index_.end()) return it->second;
    return std::nullopt;
  }

  Elem index(std::string_view name) const {
    if (auto e = find(name)) return *e;
    throw Error(ErrorKind::unknown_element, "no element named '" + std::string(name) + "'");
  }

  ElementSet downset(const ElementSet& s) const {
    check_width(s);
    ElementSet out(size());
    for_each_element(s, [&](Elem e) { out |= down_[e]; });
    return out;
  }

  ElementSet upset(const ElementSet& s) const {
    check_width(s);
    ElementSet out(size());
    for_each_element(s, [&](Elem e) { out |= up_[e]; });
    return out;
  }

  /// Common upper bounds; the empty set yields the whole carrier.
  ElementSet upper_bounds(const ElementSet& s) const {
    ElementSet out = full_set(size());
    for_each_element(s, [&](Elem e) { out &= up_[e]; });
    return out;
  }

  ElementSet lower_bounds(const ElementSet& s) const {
    ElementSet out = full_set(size());
    for_each_element(s, [&](Elem e) { out &= down_[e]; });
    return out;
  }

  ElementSet maximal(const ElementSet& s) const {
    ElementSet out = s;
    for_each_element(s, [&](Elem e) {
      ElementSet above = up_[e] & s;
      above.reset(e);
      if (above.any()) out.reset(e);
    });
    return out;
  }

  ElementSet minimal(const ElementSet& s) const {
    ElementSet out = s;
    for_each_element(s, [&](Elem e) {
      ElementSet below = down_[e] & s;
      below.reset(e);
      if (below.any()) out.reset(e);
    });
    return out;
  }

  bool is_upset(const ElementSet& s) const { return upset(s) == s; }
  bool is_downset(const ElementSet& s) const { return downset(s) == s; }

  /// Hasse diagram (lower, upper).
  std::vector<std::pair<Elem, Elem>> covers() const {
    std::vector<std::pair<Elem, Elem>> out;
    for (Elem a = 0; a < size(); ++a) {
      ElementSet strictly_above = up_[a];
      strictly_above.reset(a);
      for_each_element(minimal(strictly_above), [&](Elem b) { out.emplace_back(a, b); });
    }
    return out;
  }

  Poset dual() const {
    Poset p;
    p.names_ = names_;
    p.index_ = index_;
    p.up_ = down_;
    p.down_ = up_;
    return p;
  }

  /// The induced suborder on `subset`; element k of the result is the k-th
  /// member of `subset` in increasing index order.
  Poset induced(const ElementSet& subset) const {
    const auto members = elements_of(subset);
    std::vector<std::string> names;
    names.reserve(members.size());
    for (Elem e : members) names.push_back(names_[e]);
    return from_predicate(std::move(names),
                          [&](Elem a, Elem b) { return leq(members[a], members[b]); });
  }

  bool operator==(const Poset& other) const { return names_ == other.names_ && up_ == other.up_; }

 private:
  void set_names(std::vector<std::string> names) {
    names_ = std::move(names);
    index_.clear();
    for (Elem i = 0; i < names_.size(); ++i) {
      if (!index_.emplace(names_[i], i).second)
        throw Error(ErrorKind::duplicate_element, "element '" + names_[i] + "' appears twice");
    }
  }

  void finish_down() {
    const std::size_t n = size();
    down_.assign(n, ElementSet(n));
    for (Elem a = 0; a < n; ++a) for_each_element(up_[a], [&](Elem b) { down_[b].set(a); });
  }

  void check_width(const ElementSet& s) const {
    if (s.size() != size()) throw Error(ErrorKind::unknown_element, "element set has the wrong carrier width");
  }

  std::vector<std::string> names_;
  std::unordered_map<std::string, Elem> index_;
  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
};

}  // namespace canext
