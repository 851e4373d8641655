#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hyperlin/hypergraph.hpp"
#include "hyperlin/randwalk.hpp"
#include "hyperlin/structures.hpp"

namespace hyperlin {

enum class CentralityKind { RWCloseness, RWBetweenness, UnitCloseness, UnitEccentricity, Perron };

std::string_view to_string(CentralityKind k);
/// Accepts rw-closeness, rw-betweenness, unit-closeness, unit-eccentricity,
/// perron. Throws UnknownLabel.
CentralityKind parse_centrality_kind(std::string_view name);

struct CentralityReport {
  CentralityKind kind = CentralityKind::RWCloseness;
  std::vector<std::string> labels;
  std::vector<double> values;
  std::optional<std::vector<Rational>> exact;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
};

nlohmann::ordered_json to_json(const CentralityReport& r);

/// c(v) = |V| / sum_u E_u^v. Throws Unreachable.
CentralityReport rw_closeness(const Hypergraph& h, const WalkPolicy& policy,
                              bool first_return = true);

/// Horizon-truncated random-walk betweenness,
///   c(w) = sum over u, v != w of N_T(u,v) / D_T(u,v),
/// D_T = sum_{t=1..T} P^t(u,v), N_T = D_T minus the same sum for the chain
/// with w removed. Pairs with D_T = 0 contribute 0. Throws BadHorizon.
CentralityReport rw_betweenness(const Hypergraph& h, const WalkPolicy& policy, std::size_t horizon);

/// Graph on the units of h; two units are adjacent when some hyperedge
/// contains both.
struct GraphProjection {
  UnitDecomposition units;
  std::vector<std::string> nodes;  // set_label of each unit
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // i < j
  std::vector<std::vector<std::size_t>> adjacency;

  /// BFS distances between units, -1 when disconnected.
  std::vector<std::vector<int>> distances() const;
};

GraphProjection graph_projection(const Hypergraph& h);

/// Pseudometric on vertices: distance between their units in the projection.
std::vector<std::vector<int>> vertex_unit_distances(const Hypergraph& h);

/// cl(v) = 1 / sum_u d(u, v). Throws TooFewEdges, Disconnected.
CentralityReport unit_closeness(const Hypergraph& h);

/// e(v) = max_u d(v, u). Throws Disconnected.
CentralityReport unit_eccentricity(const Hypergraph& h);

struct PerronOptions {
  double tol = 1e-12;
  std::size_t max_iterations = 100000;
  std::optional<std::vector<Rational>> edge_weights;  // default all ones
};

/// Power iteration on M_V(u,v) = sum_{e in E_u ∩ E_v} w(e) from the all-ones
/// vector, normalized to max-norm 1. Parameters record the Rayleigh estimate
/// of the spectral radius, the final residual and the iteration count.
/// Throws Disconnected, NoConvergence, WeightDomainMismatch.
CentralityReport perron_centrality(const Hypergraph& h, const PerronOptions& opts = {});

/// Labels attaining the maximum (within tol for float-only reports).
std::vector<std::string> c_center(const CentralityReport& r, double tol = 0);

}  // namespace hyperlin
