#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "canext/completions/completion.hpp"
#include "canext/core/errors.hpp"
#include "canext/order/lattice.hpp"

namespace canext::symbolic {

/// The chain ω ⊕ ω∂: c_0 < c_1 < ... < ... < b_1 < b_0. Its MacNeille
/// completion adds one point z between the two halves; its canonical
/// extension adds y = c∞ < x = b∞ there instead.
enum class ChainKind { c, y, z, x, b };
enum class ChainVariant { macneille, canext };

struct ChainPoint {
  ChainKind kind = ChainKind::c;
  std::uint64_t index = 0;

  static ChainPoint c(std::uint64_t i) { return {ChainKind::c, i}; }
  static ChainPoint b(std::uint64_t i) { return {ChainKind::b, i}; }
  static ChainPoint z() { return {ChainKind::z, 0}; }
  static ChainPoint y() { return {ChainKind::y, 0}; }
  static ChainPoint x() { return {ChainKind::x, 0}; }

  bool in_lattice() const { return kind == ChainKind::c || kind == ChainKind::b; }

  std::string name() const {
    switch (kind) {
      case ChainKind::c: return "c" + std::to_string(index);
      case ChainKind::b: return "b" + std::to_string(index);
      case ChainKind::z: return "z";
      case ChainKind::y: return "y";
      case ChainKind::x: return "x";
    }
    return "?";
  }

  friend bool operator==(const ChainPoint&, const ChainPoint&) = default;
};

/// Inverse of ChainPoint::name.
inline ChainPoint parse(const std::string& s) {
  if (s == "x") return ChainPoint::x();
  if (s == "y") return ChainPoint::y();
  if (s == "z") return ChainPoint::z();
  if (s.size() >= 2 && (s[0] == 'c' || s[0] == 'b')) {
    const std::uint64_t i = std::stoull(s.substr(1));
    return s[0] == 'c' ? ChainPoint::c(i) : ChainPoint::b(i);
  }
  throw Error(ErrorKind::unknown_element, "unknown chain point '" + s + "'");
}

struct ChainClassification {
  ChainPoint point;
  bool isolated = false;
  std::string reason;
};

class ChainInstance : public SymbolicCompletion {
 public:
  explicit ChainInstance(ChainVariant variant) : variant_(variant) {}

  ChainVariant variant() const { return variant_; }

  std::string name() const override {
    return variant_ == ChainVariant::macneille ? "chang-chain (MacNeille)" : "chang-chain (canonical extension)";
  }

  bool contains(const ChainPoint& p) const {
    if (p.kind == ChainKind::z) return variant_ == ChainVariant::macneille;
    if (p.kind == ChainKind::x || p.kind == ChainKind::y) return variant_ == ChainVariant::canext;
    return true;
  }

  bool leq(const ChainPoint& p, const ChainPoint& q) const { return rank(p) <= rank(q); }
  ChainPoint meet(const ChainPoint& p, const ChainPoint& q) const { return leq(p, q) ? p : q; }
  ChainPoint join(const ChainPoint& p, const ChainPoint& q) const { return leq(p, q) ? q : p; }

  /// ⋀ of an infinite set of b's and ⋁ of an infinite set of c's.
  ChainPoint meet_of_b_tail() const { return variant_ == ChainVariant::macneille ? ChainPoint::z() : ChainPoint::x(); }
  ChainPoint join_of_c_tail() const { return variant_ == ChainVariant::macneille ? ChainPoint::z() : ChainPoint::y(); }

  /// Filter elements are the meets of subsets of L: L plus ⋀ of a b-tail.
  bool is_filter_element(const ChainPoint& p) const { return p.in_lattice() || p == meet_of_b_tail(); }
  bool is_ideal_element(const ChainPoint& p) const { return p.in_lattice() || p == join_of_c_tail(); }

  /// Every subset S ⊆ L either has a least element (its meet is attained)
  /// or is an infinite set of b's; dually for T. The four combinations are
  /// decided by closed form, and they are the same for every variant, since
  /// the b-tails are down-directed filter bases and the c-tails up-directed
  /// ideal bases.
  std::optional<CompactnessWitness> decide_compactness(CompactnessVariant v) const override {
    CompactnessWitness w;
    w.variant = v;
    const ChainPoint lo = meet_of_b_tail();
    const ChainPoint hi = join_of_c_tail();
    // (attained, attained): {min S}, {max T}. (b-tail, attained t): t ≥ ⋀S
    // forces t = b_j and S has some b_i with i ≥ j. (attained s, c-tail):
    // dually. Only (b-tail, c-tail) needs a check.
    if (leq(lo, hi)) {
      w.pass = false;
      w.S_description = "{b_i | i in N}";
      w.T_description = "{c_i | i in N}";
    }
    w.variants_agree = true;
    return w;
  }

  /// For finite S, T ⊆ L the sets are their own finite witnesses, so the
  /// condition holds. The descriptions name ⋀S and ⋁T.
  CompactnessWitness compact_for_finite(const std::vector<ChainPoint>& S, const std::vector<ChainPoint>& T) const {
    ChainPoint m = ChainPoint::b(0), j = ChainPoint::c(0);
    for (const auto& s : S) m = meet(m, s);
    for (const auto& t : T) j = join(j, t);
    CompactnessWitness w;
    w.S_description = m.name();
    w.T_description = j.name();
    w.pass = true;
    return w;
  }

  /// A point is isolated in δ iff some [filter element, ideal element]
  /// interval around it is a singleton.
  std::vector<ChainClassification> isolated_points(std::uint64_t sample = 3) const {
    std::vector<ChainClassification> out;
    for (std::uint64_t i = 0; i < sample; ++i) {
      out.push_back({ChainPoint::c(i), true, "[c" + std::to_string(i) + ", c" + std::to_string(i) + "] is a singleton"});
      out.push_back({ChainPoint::b(i), true, "[b" + std::to_string(i) + ", b" + std::to_string(i) + "] is a singleton"});
    }
    if (variant_ == ChainVariant::canext) {
      // Filter elements below x include x itself; the ideal elements above x
      // are exactly the b_j, and [x, b_j] contains b_j.
      out.push_back({ChainPoint::x(), false, "every interval [x, b_j] contains b_j"});
      // Dually the filter elements below y are the c_i and [c_i, y] ∋ c_i.
      out.push_back({ChainPoint::y(), false, "every interval [c_i, y] contains c_i"});
    } else {
      out.push_back({ChainPoint::z(), false, "every interval [c_i or z, b_j or z] around z contains a lattice element"});
    }
    return out;
  }

  struct DensityReport {
    bool join_of_filters = true;  // every point is a join of filter elements below it
    bool meet_of_ideals = true;   // and a meet of ideal elements above it
  };

  /// x = ⋀ b_j is itself a filter element and y = ⋁ c_i an ideal element;
  /// the remaining claims are x = ⋀{ideal elements ≥ x} and dually.
  DensityReport density() const {
    DensityReport r;
    if (variant_ == ChainVariant::canext) {
      r.join_of_filters = is_filter_element(ChainPoint::x()) && join_of_c_tail() == ChainPoint::y();
      r.meet_of_ideals = is_ideal_element(ChainPoint::y()) && meet_of_b_tail() == ChainPoint::x();
    } else {
      r.join_of_filters = join_of_c_tail() == ChainPoint::z();
      r.meet_of_ideals = meet_of_b_tail() == ChainPoint::z();
    }
    return r;
  }

  /// Materializes c_0..c_N, the extra points and b_N..b_0 as a finite chain,
  /// with names from ChainPoint::name, listed in increasing order.
  std::vector<ChainPoint> truncation(std::uint64_t N) const {
    std::vector<ChainPoint> pts;
    for (std::uint64_t i = 0; i <= N; ++i) pts.push_back(ChainPoint::c(i));
    if (variant_ == ChainVariant::canext) {
      pts.push_back(ChainPoint::y());
      pts.push_back(ChainPoint::x());
    } else {
      pts.push_back(ChainPoint::z());
    }
    for (std::uint64_t i = N + 1; i-- > 0;) pts.push_back(ChainPoint::b(i));
    return pts;
  }

 private:
  static std::tuple<int, std::uint64_t> rank(const ChainPoint& p) {
    switch (p.kind) {
      case ChainKind::c: return {0, p.index};
      case ChainKind::y: return {1, 0};
      case ChainKind::z: return {1, 1};
      case ChainKind::x: return {1, 2};
      case ChainKind::b: return {2, ~p.index};
    }
    return {0, 0};
  }

  ChainVariant variant_;
};

inline CompactnessWitness chain_compactness(ChainVariant variant) { return is_compact(ChainInstance(variant)); }

inline std::vector<ChainClassification> chain_isolated_points() { return ChainInstance(ChainVariant::canext).isolated_points(); }

/// Closed-form order, meets and joins against the materialized truncation.
inline bool chain_truncation_check(ChainVariant variant, std::uint64_t N = 50) {
  const ChainInstance inst(variant);
  const auto pts = inst.truncation(N);
  std::vector<std::string> names;
  for (const auto& p : pts) names.push_back(p.name());
  const Lattice L = Lattice::from_predicate(names, [](Elem a, Elem b) { return a <= b; });
  for (Elem a = 0; a < pts.size(); ++a)
    for (Elem b = 0; b < pts.size(); ++b) {
      if (inst.leq(pts[a], pts[b]) != L.leq(a, b)) return false;
      if (!(inst.meet(pts[a], pts[b]) == pts[L.meet(a, b)])) return false;
      if (!(inst.join(pts[a], pts[b]) == pts[L.join(a, b)])) return false;
    }
  return true;
}

}  // namespace canext::symbolic
