#pragma once

#include "canext/completions/canonical.hpp"
#include "canext/completions/completion.hpp"
#include "canext/completions/macneille.hpp"
#include "canext/completions/product.hpp"
#include "canext/core/element_set.hpp"
#include "canext/core/errors.hpp"
#include "canext/core/limits.hpp"
#include "canext/duality/duality.hpp"
#include "canext/envelopes/envelopes.hpp"
#include "canext/fgv/fgv.hpp"
#include "canext/order/catalog.hpp"
#include "canext/order/congruence.hpp"
#include "canext/order/constructions.hpp"
#include "canext/order/corpus.hpp"
#include "canext/order/io.hpp"
#include "canext/order/lattice.hpp"
#include "canext/order/maps.hpp"
#include "canext/order/poset.hpp"
#include "canext/report/claims.hpp"
#include "canext/report/dot.hpp"
#include "canext/report/serialize.hpp"
#include "canext/symbolic/chain.hpp"
#include "canext/symbolic/finite_cofinite.hpp"
#include "canext/symbolic/grid.hpp"
#include "canext/topology/finite_topology.hpp"
#include "canext/topology/order_topologies.hpp"
