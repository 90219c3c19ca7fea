#pragma once

#include <string>
#include <utility>
#include <vector>

#include "canext/order/constructions.hpp"
#include "canext/order/lattice.hpp"

namespace canext::catalog {

/// The n-element chain. Elements are named "0", then "a", "b", ..., then "1";
/// the 3-chain is 0 < a < 1.
inline Lattice chain(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::not_a_lattice, "empty chain");
  std::vector<std::string> names;
  names.reserve(n);
  if (n == 1) {
    names.push_back("0");
  } else {
    names.push_back("0");
    for (std::size_t i = 1; i + 1 < n; ++i)
      names.push_back(i <= 26 ? std::string(1, static_cast<char>('a' + i - 1)) : "m" + std::to_string(i));
    names.push_back("1");
  }
  return Lattice::from_predicate(std::move(names), [](Elem a, Elem b) { return a <= b; });
}

/// 0 < a < b < 1 and 0 < c < 1.
inline Lattice n5() {
  return Lattice::from_poset(
      Poset::from_covers({"0", "a", "b", "c", "1"}, {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}}));
}

inline Lattice m3() {
  return Lattice::from_poset(Poset::from_covers(
      {"0", "a", "b", "c", "1"}, {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}}));
}

/// 2^k as a power of the 2-chain, with tuple names like "(1,0)".
inline Lattice boolean(std::size_t k) {
  if (k == 0) return chain(1);
  if (k == 1) return chain(2);
  return power(chain(2), k);
}

/// The powerset of `atoms` under inclusion; element i is the subset whose
/// bitmask is i, named like "{x,y}".
inline Lattice powerset(const std::vector<std::string>& atoms) {
  const std::size_t k = atoms.size();
  const std::size_t n = std::size_t{1} << k;
  std::vector<std::string> names(n);
  for (std::size_t mask = 0; mask < n; ++mask) {
    std::string s = "{";
    bool first = true;
    for (std::size_t i = 0; i < k; ++i) {
      if (!(mask >> i & 1)) continue;
      if (!first) s += ",";
      s += atoms[i];
      first = false;
    }
    names[mask] = s + "}";
  }
  return Lattice::from_predicate(std::move(names), [](Elem a, Elem b) { return (a & ~b) == 0; });
}

}  // namespace canext::catalog
