#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "canext/core/errors.hpp"
#include "canext/core/limits.hpp"
#include "canext/order/lattice.hpp"

namespace canext {

struct CorpusEntry {
  std::string name;
  Lattice lattice;
  /// Canonical code of the poset between the bounds; unique per iso class.
  std::uint64_t code = 0;
};

namespace detail {

// A poset on m <= 6 points with natural labelling (i < j in the order implies
// i < j as integers); below[k] is the bitmask of elements strictly below k.
using Masks = std::vector<std::uint32_t>;

inline bool bounded_is_lattice(const Masks& below, std::size_t m) {
  Masks above(m, 0);
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t i = 0; i < m; ++i)
      if (below[k] >> i & 1) above[i] |= 1u << k;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      // Upper bounds among the middle elements, reflexively closed.
      const std::uint32_t ua = above[a] | 1u << a, ub = above[b] | 1u << b;
      const std::uint32_t la = below[a] | 1u << a, lb = below[b] | 1u << b;
      const std::uint32_t up = ua & ub, down = la & lb;
      if (up) {
        bool found = false;
        for (std::size_t c = 0; c < m && !found; ++c)
          if ((up >> c & 1) && (up & ~(above[c] | 1u << c)) == 0) found = true;
        if (!found) return false;
      }
      if (down) {
        bool found = false;
        for (std::size_t c = 0; c < m && !found; ++c)
          if ((down >> c & 1) && (down & ~(below[c] | 1u << c)) == 0) found = true;
        if (!found) return false;
      }
    }
  }
  return true;
}

/// Minimum over all linear extensions of the strict-order bit code.
inline std::uint64_t canonical_code(const Masks& below, std::size_t m) {
  std::uint64_t best = ~std::uint64_t{0};
  std::vector<int> pos(m, -1);
  std::vector<std::size_t> order;
  std::function<void(std::uint32_t)> extend = [&](std::uint32_t placed) {
    if (order.size() == m) {
      std::uint64_t code = 0;
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t i = 0; i < m; ++i)
          if (below[k] >> i & 1) code |= std::uint64_t{1} << (pos[i] * m + pos[k]);
      best = std::min(best, code);
      return;
    }
    for (std::size_t k = 0; k < m; ++k) {
      if ((placed >> k & 1) || (below[k] & ~placed) != 0) continue;
      pos[k] = static_cast<int>(order.size());
      order.push_back(k);
      extend(placed | 1u << k);
      order.pop_back();
    }
  };
  extend(0);
  return m == 0 ? 0 : best;
}

inline std::vector<std::string> corpus_names(std::size_t n) {
  std::vector<std::string> names{"0"};
  for (std::size_t i = 1; i + 1 < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i - 1)));
  if (n > 1) names.push_back("1");
  return names;
}

}  // namespace detail

/// All bounded lattices with exactly n elements, one per isomorphism class,
/// ordered by canonical code. Each is the poset strictly between the bounds
/// with 0 and 1 adjoined; candidates are generated as naturally labelled
/// posets and deduplicated by a canonical code over linear extensions.
inline std::vector<CorpusEntry> lattices_of_size(std::size_t n, const Limits& limits = Limits::from_env()) {
  if (n == 0) return {};
  if (n > limits.corpus_size || n > 8)
    throw Error(ErrorKind::cap_exceeded, "corpus generation is capped at " + std::to_string(std::min<std::size_t>(limits.corpus_size, 8)) +
                                             " elements");
  std::vector<CorpusEntry> out;
  if (n == 1) {
    out.push_back({"L1_0", Lattice::from_predicate({"0"}, [](Elem, Elem) { return true; }), 0});
    return out;
  }
  const std::size_t m = n - 2;
  std::map<std::uint64_t, detail::Masks> classes;
  detail::Masks below(m, 0);
  std::function<void(std::size_t)> grow = [&](std::size_t k) {
    if (k == m) {
      if (!detail::bounded_is_lattice(below, m)) return;
      classes.emplace(detail::canonical_code(below, m), below);
      return;
    }
    for (std::uint32_t d = 0; d < (1u << k); ++d) {
      bool closed = true;
      for (std::size_t i = 0; i < k && closed; ++i)
        if ((d >> i & 1) && (below[i] & ~d) != 0) closed = false;
      if (!closed) continue;
      below[k] = d;
      grow(k + 1);
    }
    below[k] = 0;
  };
  grow(0);
  std::size_t idx = 0;
  for (const auto& [code, masks] : classes) {
    const auto& mk = masks;
    auto leq = [&](Elem a, Elem b) {
      if (a == 0 || b == n - 1 || a == b) return true;
      if (b == 0 || a == n - 1) return false;
      return (mk[b - 1] >> (a - 1) & 1) != 0;
    };
    out.push_back({"L" + std::to_string(n) + "_" + std::to_string(idx++),
                   Lattice::from_predicate(detail::corpus_names(n), leq), code});
  }
  return out;
}

/// Every bounded lattice with 1..max_size elements.
inline std::vector<CorpusEntry> corpus(std::size_t max_size, const Limits& limits = Limits::from_env()) {
  std::vector<CorpusEntry> out;
  for (std::size_t n = 1; n <= max_size; ++n) {
    auto level = lattices_of_size(n, limits);
    out.insert(out.end(), std::make_move_iterator(level.begin()), std::make_move_iterator(level.end()));
  }
  return out;
}

}  // namespace canext
