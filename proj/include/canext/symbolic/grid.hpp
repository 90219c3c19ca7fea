#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "canext/order/catalog.hpp"
#include "canext/order/constructions.hpp"
#include "canext/order/lattice.hpp"

namespace canext::symbolic {

enum class GridKind { bottom, a, x, top };

/// Points of the grid lattice L = {0, 1, a_ij} and of its canonical
/// extension, which adds x_i = ⋀_j a_ij.
struct GridPoint {
  GridKind kind = GridKind::bottom;
  std::uint64_t i = 0;
  std::uint64_t j = 0;

  static GridPoint bottom() { return {GridKind::bottom, 0, 0}; }
  static GridPoint top() { return {GridKind::top, 0, 0}; }
  static GridPoint a(std::uint64_t i, std::uint64_t j) { return {GridKind::a, i, j}; }
  static GridPoint x(std::uint64_t i) { return {GridKind::x, i, 0}; }

  bool in_lattice() const { return kind != GridKind::x; }

  std::string name() const {
    switch (kind) {
      case GridKind::bottom: return "0";
      case GridKind::top: return "1";
      case GridKind::a: return "a" + std::to_string(i) + "_" + std::to_string(j);
      case GridKind::x: return "x" + std::to_string(i);
    }
    return "?";
  }

  friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

class GridInstance {
 public:
  /// a_ij ≥ a_kl iff i+j ≤ k+l and i ≥ k; x_i ≤ a_kl iff i ≤ k;
  /// x_i ≤ x_k iff i ≤ k; no a lies below an x.
  bool leq(const GridPoint& p, const GridPoint& q) const {
    if (p.kind == GridKind::bottom || q.kind == GridKind::top) return true;
    if (q.kind == GridKind::bottom || p.kind == GridKind::top) return p == q;
    if (p.kind == GridKind::a && q.kind == GridKind::a) return q.i + q.j <= p.i + p.j && q.i >= p.i;
    if (p.kind == GridKind::x) return p.i <= q.i;
    return false;
  }

  GridPoint meet(const GridPoint& p, const GridPoint& q) const {
    if (leq(p, q)) return p;
    if (leq(q, p)) return q;
    const std::uint64_t m = std::min(p.i, q.i);
    if (p.kind == GridKind::a && q.kind == GridKind::a)
      return GridPoint::a(m, std::max(p.i + p.j, q.i + q.j) - m);
    return GridPoint::x(m);
  }

  GridPoint join(const GridPoint& p, const GridPoint& q) const {
    if (leq(p, q)) return q;
    if (leq(q, p)) return p;
    const std::uint64_t M = std::max(p.i, q.i);
    if (p.kind == GridKind::x && q.kind == GridKind::x) return GridPoint::x(M);
    std::uint64_t s;
    if (p.kind == GridKind::a && q.kind == GridKind::a)
      s = std::min(p.i + p.j, q.i + q.j);
    else
      s = p.kind == GridKind::a ? p.i + p.j : q.i + q.j;
    return M <= s ? GridPoint::a(M, s - M) : GridPoint::top();
  }

  bool is_filter_element(const GridPoint&) const { return true; }
  bool is_ideal_element(const GridPoint& p) const { return p.in_lattice(); }

  /// Number of lattice elements above `p` (including p and 1); finite for
  /// every p ∈ L, which gives ACC.
  std::uint64_t up_set_size(const GridPoint& p) const {
    switch (p.kind) {
      case GridKind::top: return 1;
      case GridKind::a: {
        // a_pq with i ≤ p and p+q ≤ i+j
        const std::uint64_t s = p.i + p.j;
        std::uint64_t n = 0;
        for (std::uint64_t r = p.i; r <= s; ++r) n += s - r + 1;
        return n + 1;
      }
      default: throw Error(ErrorKind::unknown_element, p.name() + " has an infinite up-set");
    }
  }
};

struct GridNoncontinuity {
  GridPoint a;                      // a00
  GridPoint family_witness;         // x0
  std::string family;               // the directed family
  GridPoint lhs;                    // a00 ∧ ⋁ x_i
  GridPoint rhs;                    // ⋁ (a00 ∧ x_i)
  bool continuous = true;
  bool n5_sublattice = false;       // {1, a20, a11, a00, a02}
  bool acc_on_truncation = false;
  std::uint64_t truncation = 0;
};

/// {1, a20, a11, a00, a02} is closed under the closed-form meet and join and
/// is isomorphic to N5.
inline bool grid_n5_check() {
  const GridInstance g;
  const std::vector<GridPoint> pts{GridPoint::top(), GridPoint::a(2, 0), GridPoint::a(1, 1), GridPoint::a(0, 0),
                                   GridPoint::a(0, 2)};
  const auto member = [&](const GridPoint& p) { return std::find(pts.begin(), pts.end(), p) != pts.end(); };
  for (const auto& p : pts)
    for (const auto& q : pts)
      if (!member(g.meet(p, q)) || !member(g.join(p, q))) return false;
  std::vector<std::string> names;
  for (const auto& p : pts) names.push_back(p.name());
  const Lattice S = Lattice::from_predicate(names, [&](Elem u, Elem v) { return g.leq(pts[u], pts[v]); });
  return isomorphic(S, catalog::n5());
}

/// Lattice elements a_ij, i,j ≤ w, plus 0, x_0..x_w and 1, in that order.
inline std::vector<GridPoint> grid_window(std::uint64_t w) {
  std::vector<GridPoint> pts{GridPoint::bottom()};
  for (std::uint64_t i = 0; i <= w; ++i)
    for (std::uint64_t j = 0; j <= w; ++j) pts.push_back(GridPoint::a(i, j));
  for (std::uint64_t i = 0; i <= w; ++i) pts.push_back(GridPoint::x(i));
  pts.push_back(GridPoint::top());
  return pts;
}

/// Closed-form meets and joins of all points with indices ≤ N against the
/// lattice materialized on the window of indices ≤ 2N, which contains every
/// such meet and join. Also checks the closed-form up-set sizes there.
inline bool grid_truncation_check(std::uint64_t N = 6) {
  const GridInstance g;
  const auto pts = grid_window(2 * N);
  std::vector<std::string> names;
  for (const auto& p : pts) names.push_back(p.name());
  const Lattice L = Lattice::from_predicate(names, [&](Elem u, Elem v) { return g.leq(pts[u], pts[v]); });
  const auto small = [&](const GridPoint& p) { return p.i <= N && p.j <= N; };
  for (Elem u = 0; u < pts.size(); ++u) {
    if (!small(pts[u])) continue;
    for (Elem v = 0; v < pts.size(); ++v) {
      if (!small(pts[v])) continue;
      if (!(g.meet(pts[u], pts[v]) == pts[L.meet(u, v)])) return false;
      if (!(g.join(pts[u], pts[v]) == pts[L.join(u, v)])) return false;
    }
    if (pts[u].kind == GridKind::a) {
      std::uint64_t above = 0;
      for (Elem v = 0; v < pts.size(); ++v) above += pts[v].in_lattice() && L.leq(u, v);
      if (above != g.up_set_size(pts[u])) return false;
    }
  }
  return true;
}

inline GridNoncontinuity grid_noncontinuity(std::uint64_t truncation = 6) {
  const GridInstance g;
  GridNoncontinuity r;
  r.a = GridPoint::a(0, 0);
  r.family = "{x_i | i in N}";
  // ⋁ x_i: an upper bound of every x_i is a_kl with k ≥ i for all i, so only 1.
  r.lhs = g.meet(r.a, GridPoint::top());
  // a00 ∧ x_i = x_min(0,i) = x0 for every i, so the join of the family is x0.
  r.rhs = g.meet(r.a, GridPoint::x(0));
  for (std::uint64_t i = 1; i <= 8; ++i)
    if (!(g.meet(r.a, GridPoint::x(i)) == r.rhs)) throw std::logic_error("a00 ∧ x_i is not constant");
  r.family_witness = r.rhs;
  r.continuous = r.lhs == r.rhs;
  r.n5_sublattice = grid_n5_check();
  r.truncation = truncation;
  r.acc_on_truncation = grid_truncation_check(truncation);
  return r;
}

}  // namespace canext::symbolic
