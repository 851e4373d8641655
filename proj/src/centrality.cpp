#include "hyperlin/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include <Eigen/Core>

#include "hyperlin/error.hpp"

namespace hyperlin {

std::string_view to_string(CentralityKind k) {
  switch (k) {
    case CentralityKind::RWCloseness: return "rw-closeness";
    case CentralityKind::RWBetweenness: return "rw-betweenness";
    case CentralityKind::UnitCloseness: return "unit-closeness";
    case CentralityKind::UnitEccentricity: return "unit-eccentricity";
    case CentralityKind::Perron: return "perron";
  }
  return "unknown";
}

CentralityKind parse_centrality_kind(std::string_view name) {
  for (auto k : {CentralityKind::RWCloseness, CentralityKind::RWBetweenness,
                 CentralityKind::UnitCloseness, CentralityKind::UnitEccentricity,
                 CentralityKind::Perron}) {
    if (name == to_string(k)) return k;
  }
  throw Error(ErrorCode::UnknownLabel, "unknown centrality '" + std::string(name) + "'");
}

nlohmann::ordered_json to_json(const CentralityReport& r) {
  nlohmann::ordered_json j;
  j["kind"] = to_string(r.kind);
  j["parameters"] = r.parameters;
  nlohmann::ordered_json values = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < r.labels.size(); ++i) values[r.labels[i]] = r.values[i];
  j["values"] = std::move(values);
  if (r.exact) {
    nlohmann::ordered_json exact = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < r.labels.size(); ++i) exact[r.labels[i]] = (*r.exact)[i].str();
    j["exact"] = std::move(exact);
  }
  return j;
}

namespace {

CentralityReport exact_report(CentralityKind kind, const Hypergraph& h, std::vector<Rational> exact) {
  CentralityReport r;
  r.kind = kind;
  r.labels = h.vertex_labels();
  for (const auto& x : exact) r.values.push_back(x.to_double());
  r.exact = std::move(exact);
  return r;
}

}  // namespace

CentralityReport rw_closeness(const Hypergraph& h, const WalkPolicy& policy, bool first_return) {
  const TransitionMatrix t = transition_matrix(h, policy);
  const auto n = static_cast<long>(h.num_vertices());
  std::vector<Rational> c;
  for (std::size_t v = 0; v < h.num_vertices(); ++v) {
    const auto times = hitting_times(t.p, h.vertex_label(v), first_return);
    c.push_back(Rational(n) / times.values.sum());
  }
  auto r = exact_report(CentralityKind::RWCloseness, h, std::move(c));
  r.parameters["policy"] = to_string(policy.kind);
  r.parameters["first_return"] = first_return;
  return r;
}

namespace {

// With P = M / d and M integral, returns S with
//   S / d^T = sum_{t=1..T} P^t,  S = sum_t M^t d^(T-t).
RationalDense scaled_power_sum(const RationalDense& m, const Rational& d, std::size_t horizon) {
  RationalDense power = m;
  RationalDense sum = m;
  for (std::size_t t = 2; t <= horizon; ++t) {
    power = (power * m).eval();
    sum = (sum * d + power).eval();
  }
  return sum;
}

}  // namespace

CentralityReport rw_betweenness(const Hypergraph& h, const WalkPolicy& policy, std::size_t horizon) {
  if (horizon < 1) throw Error(ErrorCode::BadHorizon, "horizon must be at least 1");
  const TransitionMatrix t = transition_matrix(h, policy);
  const Eigen::Index n = t.p.rows();

  // Work in integers: every N/D ratio is unchanged by the common d^T.
  const Rational d = common_denominator(t.p.values.data(), t.p.values.data() + t.p.values.size());
  const RationalDense m = t.p.values * d;
  const RationalDense full = scaled_power_sum(m, d, horizon);

  std::vector<Rational> c(static_cast<std::size_t>(n), Rational(0));
  for (Eigen::Index w = 0; w < n; ++w) {
    std::vector<Eigen::Index> keep;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i != w) keep.push_back(i);
    }
    const auto k = static_cast<Eigen::Index>(keep.size());
    RationalDense taboo(k, k);
    for (Eigen::Index i = 0; i < k; ++i) {
      for (Eigen::Index j = 0; j < k; ++j) taboo(i, j) = m(keep[i], keep[j]);
    }
    const RationalDense avoiding = k > 0 ? scaled_power_sum(taboo, d, horizon) : taboo;
    Rational total(0);
    for (Eigen::Index i = 0; i < k; ++i) {
      for (Eigen::Index j = 0; j < k; ++j) {
        const Rational& den = full(keep[i], keep[j]);
        if (den.is_zero()) continue;
        total += (den - avoiding(i, j)) / den;
      }
    }
    c[static_cast<std::size_t>(w)] = total;
  }
  auto r = exact_report(CentralityKind::RWBetweenness, h, std::move(c));
  r.parameters["policy"] = to_string(policy.kind);
  r.parameters["horizon"] = horizon;
  return r;
}

std::vector<std::vector<int>> GraphProjection::distances() const {
  const std::size_t k = nodes.size();
  std::vector<std::vector<int>> dist(k, std::vector<int>(k, -1));
  for (std::size_t s = 0; s < k; ++s) {
    std::deque<std::size_t> queue{s};
    dist[s][s] = 0;
    while (!queue.empty()) {
      const auto x = queue.front();
      queue.pop_front();
      for (auto y : adjacency[x]) {
        if (dist[s][y] < 0) {
          dist[s][y] = dist[s][x] + 1;
          queue.push_back(y);
        }
      }
    }
  }
  return dist;
}

GraphProjection graph_projection(const Hypergraph& h) {
  GraphProjection g;
  g.units = units(h);
  std::vector<std::vector<std::size_t>> stars;
  for (const auto& u : g.units.units) {
    g.nodes.push_back(set_label(u.members));
    std::vector<std::size_t> s;
    for (const auto& e : u.generator) s.push_back(h.edge_index(e));
    stars.push_back(std::move(s));
  }
  g.adjacency.resize(g.nodes.size());
  for (std::size_t i = 0; i < stars.size(); ++i) {
    for (std::size_t j = i + 1; j < stars.size(); ++j) {
      // A hyperedge holds a whole unit iff it lies in the unit's generator.
      std::vector<std::size_t> common;
      std::set_intersection(stars[i].begin(), stars[i].end(), stars[j].begin(), stars[j].end(),
                            std::back_inserter(common));
      if (common.empty()) continue;
      g.edges.emplace_back(i, j);
      g.adjacency[i].push_back(j);
      g.adjacency[j].push_back(i);
    }
  }
  return g;
}

std::vector<std::vector<int>> vertex_unit_distances(const Hypergraph& h) {
  const GraphProjection g = graph_projection(h);
  const auto unit_dist = g.distances();
  const auto& of = g.units.unit_of_vertex;
  std::vector<std::vector<int>> d(h.num_vertices(), std::vector<int>(h.num_vertices()));
  for (std::size_t u = 0; u < h.num_vertices(); ++u) {
    for (std::size_t v = 0; v < h.num_vertices(); ++v) d[u][v] = unit_dist[of[u]][of[v]];
  }
  return d;
}

namespace {

std::vector<std::vector<int>> connected_distances(const Hypergraph& h) {
  auto d = vertex_unit_distances(h);
  for (const auto& row : d) {
    if (std::any_of(row.begin(), row.end(), [](int x) { return x < 0; })) {
      throw Error(ErrorCode::Disconnected, "the graph projection is disconnected");
    }
  }
  return d;
}

}  // namespace

CentralityReport unit_closeness(const Hypergraph& h) {
  if (h.num_edges() < 2) {
    throw Error(ErrorCode::TooFewEdges, "unit closeness needs at least two hyperedges");
  }
  const auto d = connected_distances(h);
  std::vector<Rational> cl;
  for (std::size_t v = 0; v < h.num_vertices(); ++v) {
    long s = 0;
    for (std::size_t u = 0; u < h.num_vertices(); ++u) s += d[u][v];
    cl.push_back(Rational(1) / Rational(s));
  }
  return exact_report(CentralityKind::UnitCloseness, h, std::move(cl));
}

CentralityReport unit_eccentricity(const Hypergraph& h) {
  const auto d = connected_distances(h);
  std::vector<Rational> e;
  for (std::size_t v = 0; v < h.num_vertices(); ++v) {
    e.push_back(Rational(*std::max_element(d[v].begin(), d[v].end())));
  }
  return exact_report(CentralityKind::UnitEccentricity, h, std::move(e));
}

CentralityReport perron_centrality(const Hypergraph& h, const PerronOptions& opts) {
  const auto n = static_cast<Eigen::Index>(h.num_vertices());
  std::vector<double> w(h.num_edges(), 1.0);
  if (opts.edge_weights) {
    if (opts.edge_weights->size() != h.num_edges()) {
      throw Error(ErrorCode::WeightDomainMismatch, "one weight per hyperedge expected");
    }
    for (std::size_t e = 0; e < h.num_edges(); ++e) {
      if ((*opts.edge_weights)[e].sign() <= 0) {
        throw Error(ErrorCode::WeightDomainMismatch, "hyperedge weights must be positive");
      }
      w[e] = (*opts.edge_weights)[e].to_double();
    }
  }
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    for (auto u : h.edge(e)) {
      for (auto v : h.edge(e)) m(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v)) += w[e];
    }
  }

  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::deque<Eigen::Index> queue;
  if (n > 0) {
    queue.push_back(0);
    seen[0] = true;
  }
  while (!queue.empty()) {
    const auto x = queue.front();
    queue.pop_front();
    for (Eigen::Index y = 0; y < n; ++y) {
      if (!seen[static_cast<std::size_t>(y)] && m(x, y) > 0) {
        seen[static_cast<std::size_t>(y)] = true;
        queue.push_back(y);
      }
    }
  }
  if (n == 0 || std::find(seen.begin(), seen.end(), false) != seen.end() || m.diagonal().minCoeff() <= 0) {
    throw Error(ErrorCode::Disconnected, "M_V is not irreducible");
  }

  Eigen::VectorXd x = Eigen::VectorXd::Ones(n);
  std::size_t iter = 0;
  for (;; ++iter) {
    if (iter == opts.max_iterations) {
      throw Error(ErrorCode::NoConvergence,
                  "power iteration did not converge in " + std::to_string(opts.max_iterations) + " steps");
    }
    Eigen::VectorXd next = m * x;
    next /= next.cwiseAbs().maxCoeff();
    const double change = (next - x).cwiseAbs().maxCoeff();
    x = std::move(next);
    if (change < opts.tol) break;
  }
  const Eigen::VectorXd mx = m * x;
  const double radius = x.dot(mx) / x.dot(x);
  const double residual = (mx - radius * x).cwiseAbs().maxCoeff();

  CentralityReport r;
  r.kind = CentralityKind::Perron;
  r.labels = h.vertex_labels();
  r.values.assign(x.data(), x.data() + x.size());
  r.parameters["tol"] = opts.tol;
  r.parameters["iterations"] = iter + 1;
  r.parameters["spectral_radius"] = radius;
  r.parameters["residual"] = residual;
  return r;
}

std::vector<std::string> c_center(const CentralityReport& r, double tol) {
  std::vector<std::string> out;
  if (r.labels.empty()) return out;
  if (r.exact) {
    const Rational best = *std::max_element(r.exact->begin(), r.exact->end());
    for (std::size_t i = 0; i < r.labels.size(); ++i) {
      if ((*r.exact)[i] == best) out.push_back(r.labels[i]);
    }
    return out;
  }
  const double best = *std::max_element(r.values.begin(), r.values.end());
  for (std::size_t i = 0; i < r.labels.size(); ++i) {
    if (r.values[i] >= best - tol) out.push_back(r.labels[i]);
  }
  return out;
}

}  // namespace hyperlin
