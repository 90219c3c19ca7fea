#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace canext {

/// Index of an element inside a finite carrier.
using Elem = std::uint32_t;

/// A subset of a finite carrier {0, ..., n-1}.
using ElementSet = boost::dynamic_bitset<std::uint64_t>;

inline ElementSet empty_set(std::size_t n) { return ElementSet(n); }

inline ElementSet full_set(std::size_t n) {
  ElementSet s(n);
  s.set();
  return s;
}

inline ElementSet singleton(std::size_t n, Elem e) {
  ElementSet s(n);
  s.set(e);
  return s;
}

inline ElementSet make_set(std::size_t n, std::span<const Elem> elems) {
  ElementSet s(n);
  for (Elem e : elems) s.set(e);
  return s;
}

inline ElementSet make_set(std::size_t n, std::initializer_list<Elem> elems) {
  return make_set(n, std::span<const Elem>(elems.begin(), elems.size()));
}

template <class F>
void for_each_element(const ElementSet& s, F&& f) {
  for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i)) f(static_cast<Elem>(i));
}

inline std::vector<Elem> elements_of(const ElementSet& s) {
  std::vector<Elem> out;
  out.reserve(s.count());
  for_each_element(s, [&](Elem e) { out.push_back(e); });
  return out;
}

inline std::size_t hash_value(const ElementSet& s) noexcept {
  std::size_t h = std::hash<std::size_t>{}(s.size());
  std::vector<std::uint64_t> blocks(s.num_blocks());
  boost::to_block_range(s, blocks.begin());
  for (auto b : blocks) h ^= std::hash<std::uint64_t>{}(b) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return hash_value(s); }
};

}  // namespace canext
