#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "canext/core/element_set.hpp"
#include "canext/core/errors.hpp"
#include "canext/core/limits.hpp"

namespace canext {

/// A topology on {0..n-1} generated by a subbasis.
///
/// A finite topology is determined by the least open neighbourhood N(p) of
/// each point (the intersection of the subbasic sets containing p): U is open
/// iff N(p) ⊆ U for every p ∈ U. All queries go through N; the explicit open
/// family is generated only on request and cached.
class FiniteTopology {
 public:
  FiniteTopology() = default;

  FiniteTopology(std::size_t n, std::vector<ElementSet> subbasis) : n_(n), subbasis_(std::move(subbasis)) {
    neighbourhood_.assign(n_, full_set(n_));
    for (const auto& S : subbasis_) {
      if (S.size() != n_) throw Error(ErrorKind::carrier_mismatch, "subbasic set has the wrong width");
      for_each_element(S, [&](Elem p) { neighbourhood_[p] &= S; });
    }
  }

  static FiniteTopology discrete(std::size_t n) {
    std::vector<ElementSet> sb;
    for (Elem p = 0; p < n; ++p) sb.push_back(singleton(n, p));
    return {n, std::move(sb)};
  }

  static FiniteTopology indiscrete(std::size_t n) { return {n, {}}; }

  std::size_t size() const noexcept { return n_; }
  const std::vector<ElementSet>& subbasis() const noexcept { return subbasis_; }
  const ElementSet& neighbourhood(Elem p) const { return neighbourhood_[p]; }

  bool is_open(const ElementSet& U) const {
    if (U.size() != n_) throw Error(ErrorKind::carrier_mismatch, "set has the wrong width");
    bool ok = true;
    for_each_element(U, [&](Elem p) { ok = ok && neighbourhood_[p].is_subset_of(U); });
    return ok;
  }

  /// True when every open set of `coarser` is open here.
  bool refines(const FiniteTopology& coarser) const {
    if (coarser.n_ != n_) throw Error(ErrorKind::carrier_mismatch, "topologies live on different carriers");
    for (Elem p = 0; p < n_; ++p)
      if (!neighbourhood_[p].is_subset_of(coarser.neighbourhood_[p])) return false;
    return true;
  }

  bool same_opens(const FiniteTopology& other) const { return refines(other) && other.refines(*this); }

  bool is_discrete() const {
    for (Elem p = 0; p < n_; ++p)
      if (neighbourhood_[p].count() != 1) return false;
    return true;
  }

  ElementSet isolated_points() const {
    ElementSet out(n_);
    for (Elem p = 0; p < n_; ++p)
      if (neighbourhood_[p].count() == 1) out.set(p);
    return out;
  }

  /// A pair of points with no disjoint open neighbourhoods, if any. Every pair
  /// is examined.
  std::optional<std::pair<Elem, Elem>> hausdorff_failure() const {
    for (Elem p = 0; p < n_; ++p)
      for (Elem q = p + 1; q < n_; ++q)
        if ((neighbourhood_[p] & neighbourhood_[q]).any()) return std::pair{p, q};
    return std::nullopt;
  }

  bool is_hausdorff() const { return !hausdorff_failure().has_value(); }

  /// All open sets, generated as unions of least neighbourhoods.
  const std::vector<ElementSet>& opens(const Limits& limits = Limits::from_env()) const {
    std::call_once(cache_->once, [&] {
      if (n_ > limits.topology_carrier)
        throw Error(ErrorKind::cap_exceeded, "open families are materialized only up to " +
                                                 std::to_string(limits.topology_carrier) + " points");
      std::vector<ElementSet> family{ElementSet(n_)};
      std::unordered_set<ElementSet, ElementSetHash> seen{family[0]};
      for (std::size_t i = 0; i < family.size(); ++i) {
        for (Elem p = 0; p < n_; ++p) {
          if (family[i].test(p)) continue;
          ElementSet U = family[i] | neighbourhood_[p];
          if (seen.insert(U).second) {
            if (family.size() >= limits.open_family)
              throw Error(ErrorKind::cap_exceeded, "open family exceeds the configured size");
            family.push_back(std::move(U));
          }
        }
      }
      cache_->opens = std::move(family);
    });
    return cache_->opens;
  }

 private:
  struct Cache {
    std::once_flag once;
    std::vector<ElementSet> opens;
  };

  std::size_t n_ = 0;
  std::vector<ElementSet> subbasis_;
  std::vector<ElementSet> neighbourhood_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Product topology on the row-major carrier (i, j) ↦ i * |B| + j, given by
/// the products of subbasic sets with the whole other factor.
inline FiniteTopology product_topology(const FiniteTopology& A, const FiniteTopology& B) {
  const std::size_t n = A.size() * B.size();
  std::vector<ElementSet> sb;
  for (const auto& S : A.subbasis()) {
    ElementSet P(n);
    for_each_element(S, [&](Elem i) {
      for (Elem j = 0; j < B.size(); ++j) P.set(i * B.size() + j);
    });
    sb.push_back(std::move(P));
  }
  for (const auto& T : B.subbasis()) {
    ElementSet P(n);
    for (Elem i = 0; i < A.size(); ++i) for_each_element(T, [&](Elem j) { P.set(i * B.size() + j); });
    sb.push_back(std::move(P));
  }
  return {n, std::move(sb)};
}

/// The topology generated by the union of both subbases.
inline FiniteTopology join_topologies(const FiniteTopology& a, const FiniteTopology& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::carrier_mismatch, "topologies live on different carriers");
  auto sb = a.subbasis();
  sb.insert(sb.end(), b.subbasis().begin(), b.subbasis().end());
  return {a.size(), std::move(sb)};
}

struct ContinuityVerdict {
  bool continuous = true;
  /// A subbasic open of the target whose preimage is not open.
  std::optional<ElementSet> witness;
};

/// Checks that the preimage of every subbasic open of `dst` is open in `src`.
inline ContinuityVerdict is_continuous(const std::vector<Elem>& f, const FiniteTopology& src, const FiniteTopology& dst) {
  if (f.size() != src.size()) throw Error(ErrorKind::carrier_mismatch, "map domain does not match the source topology");
  for (Elem v : f)
    if (v >= dst.size()) throw Error(ErrorKind::carrier_mismatch, "map leaves the target carrier");
  for (const auto& V : dst.subbasis()) {
    ElementSet pre(src.size());
    for (Elem p = 0; p < f.size(); ++p)
      if (V.test(f[p])) pre.set(p);
    if (!src.is_open(pre)) return {false, V};
  }
  return {};
}

}  // namespace canext
