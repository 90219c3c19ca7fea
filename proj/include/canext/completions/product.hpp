#pragma once

#include <vector>

#include "canext/completions/completion.hpp"
#include "canext/order/constructions.hpp"

namespace canext {

/// The product of completions: e(a_1..a_k) = (e_1(a_1), .., e_k(a_k)) on the
/// row-major carriers built by `product_of`.
inline Completion product_completion(const std::vector<const Completion*>& factors) {
  std::vector<const Lattice*> sources, targets;
  std::vector<std::size_t> source_sizes, target_sizes;
  for (const auto* c : factors) {
    sources.push_back(&c->L());
    targets.push_back(&c->C());
    source_sizes.push_back(c->L().size());
    target_sizes.push_back(c->C().size());
  }
  auto src = share(product_of(sources));
  auto dst = share(product_of(targets));
  ElemMap embed(src->size());
  for (Elem idx = 0; idx < src->size(); ++idx) {
    auto coords = product_coordinates(source_sizes, idx);
    for (std::size_t k = 0; k < factors.size(); ++k) coords[k] = factors[k]->embed[coords[k]];
    embed[idx] = product_index(target_sizes, coords);
  }
  return make_completion(std::move(src), std::move(dst), std::move(embed));
}

inline Completion product_completion(const Completion& a, const Completion& b) { return product_completion({&a, &b}); }

}  // namespace canext
