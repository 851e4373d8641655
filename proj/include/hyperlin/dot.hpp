#pragma once

#include <string>

#include "hyperlin/hypergraph.hpp"

namespace hyperlin {

/// Incidence graph: vertices as circles, hyperedges as boxes.
std::string incidence_graph_dot(const Hypergraph& h);

/// Incidence graph of the unit contraction: units as boxes, hyperedges as
/// ellipses.
std::string contraction_dot(const Hypergraph& h);

/// Graph projection on the units.
std::string projection_dot(const Hypergraph& h);

}  // namespace hyperlin
