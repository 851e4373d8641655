#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hyperlin/hypergraph.hpp"
#include "hyperlin/linalg.hpp"

namespace hyperlin {

enum class PolicyKind { UniformNonLazy, UniformLazy, Custom };

std::string_view to_string(PolicyKind k);

/// How a walker at u picks a hyperedge (r) and then the next vertex (s).
/// Custom tables are keyed by labels; missing entries are zero.
struct WalkPolicy {
  PolicyKind kind = PolicyKind::UniformNonLazy;
  std::map<std::pair<std::string, std::string>, Rational> r;  // (u, e)
  std::map<std::tuple<std::string, std::string, std::string>, Rational> s;  // (u, e, v)

  static WalkPolicy non_lazy() { return {PolicyKind::UniformNonLazy, {}, {}}; }
  static WalkPolicy lazy() { return {PolicyKind::UniformLazy, {}, {}}; }
};

/// Accepts "nonlazy" and "lazy". Throws InvalidPolicy.
WalkPolicy parse_policy(std::string_view name);

struct TransitionMatrix {
  RationalMatrix p;
  WalkPolicy policy;
};

/// P_uv = sum over e in E_u ∩ E_v of r(u,e) s(u,e,v). Uniform policies use
/// r = 1/|E_u| and s = 1/(|e|-1) off u (non-lazy) or s = 1/|e| (lazy).
/// Throws IsolatedVertex, SingletonEdgeNonLazy, InvalidPolicy.
TransitionMatrix transition_matrix(const Hypergraph& h, const WalkPolicy& policy);

/// Throws BadDistribution unless init is nonnegative and sums to 1.
void check_distribution(const RationalVector& init);

/// Point mass on `vertex` over the row labels of p. Throws UnknownLabel.
RationalVector point_mass(const RationalMatrix& p, std::string_view vertex);

/// init^T P^t. Throws BadDistribution, DimensionMismatch.
RationalVector step_distribution(const RationalMatrix& p, const RationalVector& init, std::size_t t);

/// Expected hitting times of `target` from every vertex, by solving the
/// taboo system (Id - P_taboo) h = 1. The entry at the target itself is the
/// expected first-return time, or 0 with first_return = false.
/// Throws UnknownLabel, Unreachable.
RationalLabeledVector hitting_times(const RationalMatrix& p, std::string_view target,
                                    bool first_return = true);

/// Pr(X_t = target and X_j != target for 0 < j < t), t = 1..horizon.
/// Throws BadHorizon, BadDistribution, UnknownLabel.
std::vector<Rational> first_hit_probabilities(const RationalMatrix& p, const RationalVector& init,
                                              std::string_view target, std::size_t horizon);

/// Exact check of sum_{u in U} P_wu = sum_{v in V} P_wv for every w outside
/// U ∪ V. Throws NotDisjoint, UnknownLabel, InvalidPolicy (custom policy).
bool verify_partition_transition(const TransitionMatrix& t, const std::vector<std::string>& u,
                                 const std::vector<std::string>& v);

std::uint64_t splitmix64(std::uint64_t x);

struct SimulationOptions {
  std::size_t steps = 100;
  std::size_t trajectories = 1000;
  std::uint64_t seed = 0;
  std::optional<std::string> target;
  bool stop_at_hit = false;
};

struct SimulationResult {
  std::vector<std::uint64_t> visit_counts;      // per vertex, over t = 0..steps
  std::vector<std::uint64_t> final_counts;      // per vertex at t = steps (or the hit)
  std::vector<std::uint64_t> first_hit_histogram;  // index t = 0..steps, t = 0 unused
  std::uint64_t hits = 0;
  std::uint64_t misses = 0;
  double mean_first_hit = 0;  // over trajectories that hit
  double std_error = 0;
};

/// Trajectory i draws from mt19937_64 seeded with
/// splitmix64(seed ^ splitmix64(i)); uniforms are (x >> 11) * 2^-53.
SimulationResult simulate(const RationalMatrix& p, const RationalVector& init,
                          const SimulationOptions& opts);

nlohmann::ordered_json to_json(const SimulationResult& r, const std::vector<std::string>& labels);

}  // namespace hyperlin
