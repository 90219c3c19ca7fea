#pragma once

#include <cstddef>
#include <cstdlib>
#include <string>

namespace canext {

/// Size caps for the exhaustive routines. These are configuration, not
/// mathematical constants; `from_env` lets CANEXT_MAX_CARRIER raise or lower
/// every carrier cap at once.
struct Limits {
  std::size_t congruence_carrier = 8;
  std::size_t powerset_worlds = 6;
  std::size_t topology_carrier = 20;
  std::size_t certificate_carrier = 6;
  std::size_t product_carrier = 64;
  std::size_t free_generators = 4;
  std::size_t materialized_free_generators = 3;
  std::size_t corpus_size = 8;
  std::size_t open_family = std::size_t{1} << 20;

  static Limits from_env() {
    Limits limits;
    if (const char* raw = std::getenv("CANEXT_MAX_CARRIER"); raw != nullptr && *raw != '\0') {
      const auto cap = static_cast<std::size_t>(std::stoull(raw));
      limits.congruence_carrier = cap;
      limits.powerset_worlds = cap;
      limits.topology_carrier = cap;
      limits.certificate_carrier = cap;
      limits.product_carrier = cap;
      limits.corpus_size = cap;
    }
    return limits;
  }
};

}  // namespace canext
