#pragma once

#include <memory>

#include "jhull/coeffs.hpp"
#include "jhull/dynamics.hpp"

namespace jhull {

/// Everything the hull and Ruelle computations share for one value of
/// lambda: the coefficient table, the map and its critical orbit. Immutable.
struct Model {
  std::shared_ptr<const CoeffTable> table;
  MapParams params;
  std::shared_ptr<const CriticalOrbit> orbit;

  static constexpr int kDefaultOrbitOrder = 160;

  static Model make(std::shared_ptr<const CoeffTable> table, int orbit_order = kDefaultOrbitOrder) {
    Model m;
    m.params = MapParams::make(table->lambda());
    m.orbit = std::make_shared<const CriticalOrbit>(m.params, orbit_order);
    m.table = std::move(table);
    return m;
  }

  double lambda() const { return params.lambda; }
  double xi() const { return params.xi; }
};

}  // namespace jhull
