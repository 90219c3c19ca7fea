#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "canext/completions/completion.hpp"
#include "canext/core/errors.hpp"

namespace canext::symbolic {

// ---------------------------------------------------------------------------
// The algebra of finite and co-finite subsets of ℕ

/// A finite subset of ℕ (cofinite = false) or the complement of one
/// (cofinite = true); `points` is sorted and lists the members, respectively
/// the excluded points. The encoding is unique.
struct FCElement {
  std::vector<std::uint64_t> points;
  bool cofinite = false;

  static FCElement finite(std::vector<std::uint64_t> s) { return normalized(std::move(s), false); }
  static FCElement cofinite_except(std::vector<std::uint64_t> s) { return normalized(std::move(s), true); }
  static FCElement empty() { return {}; }
  static FCElement full() { return {{}, true}; }

  bool contains(std::uint64_t n) const { return std::binary_search(points.begin(), points.end(), n) != cofinite; }
  bool is_empty() const { return !cofinite && points.empty(); }

  FCElement complement() const { return {points, !cofinite}; }

  FCElement meet(const FCElement& o) const {
    if (!cofinite && !o.cofinite) return {set_op(points, o.points, 'i'), false};
    if (cofinite && o.cofinite) return {set_op(points, o.points, 'u'), true};
    const auto& fin = cofinite ? o.points : points;
    const auto& exc = cofinite ? points : o.points;
    return {set_op(fin, exc, 'd'), false};
  }
  FCElement join(const FCElement& o) const { return complement().meet(o.complement()).complement(); }
  bool leq(const FCElement& o) const { return meet(o) == *this; }

  /// Least member; only for nonempty elements.
  std::uint64_t min() const {
    if (!cofinite) return points.front();
    std::uint64_t n = 0;
    for (auto p : points) {
      if (p != n) break;
      ++n;
    }
    return n;
  }

  std::string describe() const {
    std::string s = cofinite ? "N\\{" : "{";
    for (std::size_t i = 0; i < points.size(); ++i) s += (i ? "," : "") + std::to_string(points[i]);
    return s + "}";
  }

  friend bool operator==(const FCElement&, const FCElement&) = default;

 private:
  static FCElement normalized(std::vector<std::uint64_t> s, bool cof) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return {std::move(s), cof};
  }
  static std::vector<std::uint64_t> set_op(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b,
                                           char op) {
    std::vector<std::uint64_t> out;
    if (op == 'i') std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    if (op == 'u') std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    if (op == 'd') std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  }
};

/// ◇S = {n | n > m for some m ∈ S} = ↑(min S + 1), and ◇∅ = ∅.
inline FCElement diamond(const FCElement& S) {
  if (S.is_empty()) return FCElement::empty();
  std::vector<std::uint64_t> below;
  for (std::uint64_t n = 0; n <= S.min(); ++n) below.push_back(n);
  return FCElement::cofinite_except(std::move(below));
}

/// Random elements with small finite parts, half of them cofinite.
inline FCElement random_fc(std::mt19937_64& rng, std::uint64_t window = 100, std::size_t max_points = 6) {
  std::uniform_int_distribution<std::uint64_t> pick(0, window);
  std::uniform_int_distribution<std::size_t> count(0, max_points);
  std::vector<std::uint64_t> pts(count(rng));
  for (auto& p : pts) p = pick(rng);
  return (rng() & 1) ? FCElement::cofinite_except(pts) : FCElement::finite(pts);
}

// ---------------------------------------------------------------------------
// The decidable fragment of the canonical extension P(ℕ∞)

/// A subset u ⊆ ℕ that is infinite and co-infinite, given by its membership
/// predicate. Uniqueness of the fragment encoding relies on this.
struct Parameter {
  std::string name;
  std::function<bool(std::uint64_t)> member;
};

inline std::shared_ptr<const Parameter> evens() {
  static const auto p = std::make_shared<const Parameter>(Parameter{"evens", [](std::uint64_t n) { return n % 2 == 0; }});
  return p;
}

/// Boolean combinations of FC elements, {∞} and the parameter u: the natural
/// part is (pattern over {u, ℕ∖u}) Δ (a finite set), plus an ∞ flag.
class DefinableSubset {
 public:
  static constexpr std::uint8_t in_u = 1, out_u = 2;

  DefinableSubset() = default;

  static DefinableSubset empty(std::shared_ptr<const Parameter> p) { return {std::move(p), 0, {}, false}; }
  static DefinableSubset full(std::shared_ptr<const Parameter> p) { return {std::move(p), in_u | out_u, {}, true}; }
  static DefinableSubset infinity(std::shared_ptr<const Parameter> p) { return {std::move(p), 0, {}, true}; }
  static DefinableSubset parameter(std::shared_ptr<const Parameter> p) { return {std::move(p), in_u, {}, false}; }
  static DefinableSubset naturals(std::shared_ptr<const Parameter> p, const std::vector<std::uint64_t>& finite) {
    return make(std::move(p), 0, finite, false);
  }

  /// The embedding of B: finite sets map to themselves, cofinite sets to
  /// their union with {∞}.
  static DefinableSubset embed(std::shared_ptr<const Parameter> p, const FCElement& a) {
    return make(std::move(p), a.cofinite ? in_u | out_u : 0, a.points, a.cofinite);
  }

  const std::shared_ptr<const Parameter>& param() const { return param_; }
  std::uint8_t pattern() const { return pattern_; }

  bool contains(std::uint64_t n) const {
    return pattern_member(n) != std::binary_search(flip_.begin(), flip_.end(), n);
  }
  bool contains_infinity() const { return infinity_; }

  bool natural_finite() const { return pattern_ == 0; }
  bool natural_cofinite() const { return pattern_ == (in_u | out_u); }
  bool is_lattice_element() const { return (natural_finite() && !infinity_) || (natural_cofinite() && infinity_); }
  /// Meets of embedded elements: finite sets, and anything containing ∞.
  bool is_filter_element() const { return natural_finite() || infinity_; }
  /// Joins of embedded elements: cofinite sets, and anything without ∞.
  bool is_ideal_element() const { return natural_cofinite() || !infinity_; }

  std::optional<FCElement> as_lattice_element() const {
    if (!is_lattice_element()) return std::nullopt;
    return natural_finite() ? FCElement::finite(flip_) : FCElement::cofinite_except(flip_);
  }

  DefinableSubset complement() const { return {param_, static_cast<std::uint8_t>(~pattern_ & 3), flip_, !infinity_}; }
  DefinableSubset meet(const DefinableSubset& o) const { return combine(o, pattern_ & o.pattern_, infinity_ && o.infinity_, true); }
  DefinableSubset join(const DefinableSubset& o) const { return combine(o, pattern_ | o.pattern_, infinity_ || o.infinity_, false); }
  bool leq(const DefinableSubset& o) const { return meet(o) == *this; }

  /// Least natural member; searches upward when the natural part is infinite.
  std::optional<std::uint64_t> min_natural(std::uint64_t search_limit = 1u << 20) const {
    if (pattern_ == 0) {
      if (flip_.empty()) return std::nullopt;
      return flip_.front();
    }
    for (std::uint64_t n = 0; n < search_limit; ++n)
      if (contains(n)) return n;
    throw Error(ErrorKind::symbolic_undecidable, "no natural member found below the search limit");
  }

  std::string describe() const {
    static const char* names[] = {"{}", "u", "N\\u", "N"};
    std::string s = pattern_ == 0 ? "{" : std::string(names[pattern_]) + (flip_.empty() ? "" : " xor {");
    if (pattern_ == 0 || !flip_.empty()) {
      for (std::size_t i = 0; i < flip_.size(); ++i) s += (i ? "," : "") + std::to_string(flip_[i]);
      s += "}";
    }
    if (pattern_ != 0 && param_) {
      const auto pos = s.find('u');
      if (pos != std::string::npos) s.replace(pos, 1, param_->name);
    }
    return infinity_ ? s + " + {inf}" : s;
  }

  friend bool operator==(const DefinableSubset& a, const DefinableSubset& b) {
    return a.param_ == b.param_ && a.pattern_ == b.pattern_ && a.flip_ == b.flip_ && a.infinity_ == b.infinity_;
  }

 private:
  DefinableSubset(std::shared_ptr<const Parameter> p, std::uint8_t pattern, std::vector<std::uint64_t> flip, bool inf)
      : param_(std::move(p)), pattern_(pattern), flip_(std::move(flip)), infinity_(inf) {}

  static DefinableSubset make(std::shared_ptr<const Parameter> p, std::uint8_t pattern, const std::vector<std::uint64_t>& members,
                              bool inf) {
    // `members` lists the points where membership differs from the pattern
    // for pattern 0 / full; normalize against the pattern.
    DefinableSubset d(std::move(p), pattern, {}, inf);
    std::set<std::uint64_t> pts(members.begin(), members.end());
    d.flip_.assign(pts.begin(), pts.end());
    return d;
  }

  bool pattern_member(std::uint64_t n) const {
    if (pattern_ == 0) return false;
    if (pattern_ == 3) return true;
    const bool m = param_->member(n);
    return pattern_ == in_u ? m : !m;
  }

  DefinableSubset combine(const DefinableSubset& o, int pattern, bool inf, bool is_meet) const {
    if (param_ != o.param_) throw Error(ErrorKind::outside_fragment, "subsets built from different parameters");
    DefinableSubset d(param_, static_cast<std::uint8_t>(pattern), {}, inf);
    std::set<std::uint64_t> candidates(flip_.begin(), flip_.end());
    candidates.insert(o.flip_.begin(), o.flip_.end());
    for (auto n : candidates) {
      const bool member = is_meet ? contains(n) && o.contains(n) : contains(n) || o.contains(n);
      if (member != d.pattern_member(n)) d.flip_.push_back(n);
    }
    return d;
  }

  std::shared_ptr<const Parameter> param_;
  std::uint8_t pattern_ = 0;
  std::vector<std::uint64_t> flip_;
  bool infinity_ = false;
};

// ---------------------------------------------------------------------------
// The modal algebra (B, ◇) with ◇ from the relation > on ℕ

struct GLVerdict {
  bool holds = false;
  std::string lhs;  // ◇(¬◇a ∧ a)
  std::string rhs;  // ◇a
};

inline GLVerdict gl_axiom_check(const FCElement& a) {
  const FCElement rhs = diamond(a);
  const FCElement lhs = diamond(rhs.complement().meet(a));
  return {rhs.leq(lhs), lhs.describe(), rhs.describe()};
}

/// The canonical extension P(ℕ∞) of B with ◇ extended by σ. Only the
/// fragment built from the registered parameter is decidable, and no
/// compactness routine is registered for this instance.
class FiniteCofiniteInstance : public SymbolicCompletion {
 public:
  explicit FiniteCofiniteInstance(std::shared_ptr<const Parameter> p = evens()) : param_(std::move(p)) {}

  std::string name() const override { return "finite-cofinite-gl"; }
  std::optional<CompactnessWitness> decide_compactness(CompactnessVariant) const override { return std::nullopt; }

  const std::shared_ptr<const Parameter>& param() const { return param_; }
  DefinableSubset embed(const FCElement& a) const { return DefinableSubset::embed(param_, a); }
  DefinableSubset infinity() const { return DefinableSubset::infinity(param_); }

  /// ◇^σ(u) = ∅ if u = ∅ and {∞} if u = {∞}. Otherwise, with m = min(u ∩ ℕ),
  /// it is e(↑(m+1)) = ↑(m+1) ∪ {∞}: it is ≥ ◇^σ({m}) = e(◇{m}) and ≤
  /// ◇^σ(e(↑m)). Its value on {∞} is ⋂{e(◇S) | S cofinite} = {∞}. Including
  /// ∞ in the image of a cofinite set follows the stated embedding.
  DefinableSubset diamond_sigma(const DefinableSubset& u) const {
    require(u);
    const auto m = u.min_natural();
    if (!m) return u.contains_infinity() ? infinity() : DefinableSubset::empty(param_);
    std::vector<std::uint64_t> below;
    for (std::uint64_t n = 0; n <= *m; ++n) below.push_back(n);
    return embed(FCElement::cofinite_except(std::move(below)));
  }

  /// ◇^σ(¬◇^σ a ∧ a) ≥ ◇^σ a in the canonical extension.
  GLVerdict gl_axiom_check_at(const DefinableSubset& a) const {
    require(a);
    const auto rhs = diamond_sigma(a);
    const auto lhs = diamond_sigma(rhs.complement().meet(a));
    return {rhs.leq(lhs), lhs.describe(), rhs.describe()};
  }

 private:
  void require(const DefinableSubset& u) const {
    if (u.param() != param_) throw Error(ErrorKind::outside_fragment, "point is not built from the registered parameter");
  }

  std::shared_ptr<const Parameter> param_;
};

struct GLSweep {
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::optional<FCElement> counterexample;
};

inline GLSweep gl_axiom_sweep(std::size_t trials, std::uint64_t seed = 1) {
  std::mt19937_64 rng(seed);
  GLSweep s;
  for (; s.trials < trials; ++s.trials) {
    const FCElement a = random_fc(rng);
    if (!gl_axiom_check(a).holds) {
      ++s.failures;
      if (!s.counterexample) s.counterexample = a;
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// The disjointness map f(b1, b2) = ∅ if b1 ∩ b2 = ∅, else X

struct DisjointnessVerdict {
  DefinableSubset sigma;  // f^σ(u, ¬u)
  DefinableSubset pi;     // f^π(u, ¬u)
  bool smooth = false;
  std::size_t pairs_checked = 0;  // bracketing pairs the argument was replayed on
  std::string sigma_witness;      // a disjoint pair inside a sample interval
  std::string pi_witness;         // an overlapping pair inside a sample interval
};

class DisjointnessInstance : public SymbolicCompletion {
 public:
  explicit DisjointnessInstance(std::shared_ptr<const Parameter> p = evens()) : param_(std::move(p)) {}

  std::string name() const override { return "disjointness-map"; }
  std::optional<CompactnessWitness> decide_compactness(CompactnessVariant) const override { return std::nullopt; }

  /// Envelopes of f at (u, ¬u). For u the image of a lattice element both
  /// are f(u, ¬u) = ∅. For u ⊆ X infinite and co-infinite: every bracketing
  /// interval holds a disjoint pair (s1, ¬s1 ∧ t2), since s1 ≤ u is finite;
  /// and an overlapping pair (s1 ∨ b, t2), since t2 ≥ ¬u ∋ ∞ is cofinite and
  /// meets u in some finite nonempty b. So f^σ = ∅ and f^π = X∞.
  DisjointnessVerdict envelopes(const DefinableSubset& u) const {
    if (u.param() != param_) throw Error(ErrorKind::outside_fragment, "point is not built from the registered parameter");
    const auto empty = DefinableSubset::empty(param_);
    const auto full = DefinableSubset::full(param_);
    DisjointnessVerdict v{empty, empty, true, 0, "", ""};
    if (u.is_lattice_element()) return v;
    if (u.contains_infinity() || u.natural_finite() || u.natural_cofinite())
      throw Error(ErrorKind::fragment_violation,
                  "u must be a subset of X that is neither finite nor cofinite (got " + u.describe() + ")");
    replay(u, v);
    v.pi = full;
    v.smooth = false;
    return v;
  }

 private:
  static bool disjoint(const DefinableSubset& a, const DefinableSubset& b) { return a.meet(b) == DefinableSubset::empty(a.param()); }

  // Replays both halves of the argument on a family of bracketing pairs
  // drawn from the fragment.
  void replay(const DefinableSubset& u, DisjointnessVerdict& v) const {
    const auto nu = u.complement();
    std::vector<std::uint64_t> in, out;
    for (std::uint64_t n = 0; in.size() < 3 || out.size() < 3; ++n) (u.contains(n) ? in : out).push_back(n);
    const auto fin = [&](std::vector<std::uint64_t> s) { return DefinableSubset::naturals(param_, s); };
    const auto full = DefinableSubset::full(param_);
    const std::vector<DefinableSubset> S1{fin({}), fin({in[0]}), fin({in[0], in[1]})};
    const std::vector<DefinableSubset> T1{u, u.join(fin({out[0]})), full};
    const std::vector<DefinableSubset> S2{fin({}), fin({out[1]}), nu};
    const std::vector<DefinableSubset> T2{full, full.meet(fin({in[2]}).complement())};
    for (const auto& s1 : S1)
      for (const auto& t1 : T1)
        for (const auto& s2 : S2)
          for (const auto& t2 : T2) {
            if (!s1.is_filter_element() || !s2.is_filter_element() || !t1.is_ideal_element() || !t2.is_ideal_element())
              throw std::logic_error("sample pair is not a filter/ideal pair");
            if (!s1.leq(u) || !u.leq(t1) || !s2.leq(nu) || !nu.leq(t2)) throw std::logic_error("sample pair does not bracket");
            ++v.pairs_checked;
            // σ side: s1 is finite, b2 = ¬s1 ∧ t2 is a lattice element.
            const auto b2 = s1.complement().meet(t2);
            if (!s1.is_lattice_element() || !b2.is_lattice_element() || !s2.leq(b2) || !b2.leq(t2) || !disjoint(s1, b2))
              throw std::logic_error("no disjoint pair in a bracketing interval");
            // π side: t2 is cofinite; b = {least point of u ∧ t2}.
            const auto m = u.meet(t2).min_natural();
            if (!m || !t2.is_lattice_element()) throw std::logic_error("u ∧ t2 is empty");
            const auto b1 = s1.join(fin({*m}));
            if (!b1.is_lattice_element() || !b1.leq(t1) || disjoint(b1, t2))
              throw std::logic_error("no overlapping pair in a bracketing interval");
            if (v.sigma_witness.empty()) {
              v.sigma_witness = "(" + s1.describe() + ", " + b2.describe() + ")";
              v.pi_witness = "(" + b1.describe() + ", " + t2.describe() + ")";
            }
          }
  }

  std::shared_ptr<const Parameter> param_;
};

inline DisjointnessVerdict disjointness_envelopes(const DefinableSubset& u) { return DisjointnessInstance(u.param()).envelopes(u); }

}  // namespace canext::symbolic
