#include "hyperlin/randwalk.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <random>
#include <set>

#include "hyperlin/error.hpp"

namespace hyperlin {

std::string_view to_string(PolicyKind k) {
  switch (k) {
    case PolicyKind::UniformNonLazy: return "nonlazy";
    case PolicyKind::UniformLazy: return "lazy";
    case PolicyKind::Custom: return "custom";
  }
  return "unknown";
}

WalkPolicy parse_policy(std::string_view name) {
  if (name == "nonlazy") return WalkPolicy::non_lazy();
  if (name == "lazy") return WalkPolicy::lazy();
  throw Error(ErrorCode::InvalidPolicy, "unknown walk policy '" + std::string(name) + "'");
}

namespace {

Rational lookup(const auto& table, const auto& key) {
  auto it = table.find(key);
  return it == table.end() ? Rational(0) : it->second;
}

void check_custom_keys(const Hypergraph& h, const WalkPolicy& policy) {
  for (const auto& [key, value] : policy.r) {
    const auto& [u, e] = key;
    const auto ui = h.find_vertex(u);
    const auto ei = h.find_edge(e);
    if (!ui || !ei || !h.contains(*ei, *ui) || value.sign() < 0) {
      throw Error(ErrorCode::InvalidPolicy, "bad r entry (" + u + ", " + e + ")");
    }
  }
  for (const auto& [key, value] : policy.s) {
    const auto& [u, e, v] = key;
    const auto ui = h.find_vertex(u);
    const auto ei = h.find_edge(e);
    const auto vi = h.find_vertex(v);
    if (!ui || !ei || !vi || !h.contains(*ei, *ui) || !h.contains(*ei, *vi) || value.sign() < 0) {
      throw Error(ErrorCode::InvalidPolicy, "bad s entry (" + u + ", " + e + ", " + v + ")");
    }
  }
}

std::size_t row_index(const RationalMatrix& p, std::string_view label) {
  auto it = std::find(p.row_labels.begin(), p.row_labels.end(), label);
  if (it == p.row_labels.end()) {
    throw Error(ErrorCode::UnknownLabel, "no vertex '" + std::string(label) + "'");
  }
  return static_cast<std::size_t>(it - p.row_labels.begin());
}

RationalDense drop_index(const RationalDense& p, Eigen::Index k) {
  const Eigen::Index n = p.rows();
  RationalDense out(n - 1, n - 1);
  for (Eigen::Index i = 0, oi = 0; i < n; ++i) {
    if (i == k) continue;
    for (Eigen::Index j = 0, oj = 0; j < n; ++j) {
      if (j == k) continue;
      out(oi, oj++) = p(i, j);
    }
    ++oi;
  }
  return out;
}

}  // namespace

TransitionMatrix transition_matrix(const Hypergraph& h, const WalkPolicy& policy) {
  const auto n = static_cast<Eigen::Index>(h.num_vertices());
  for (std::size_t v = 0; v < h.num_vertices(); ++v) {
    if (h.star_of(v).empty()) {
      throw Error(ErrorCode::IsolatedVertex, "vertex '" + h.vertex_label(v) + "' has an empty star");
    }
  }
  if (policy.kind == PolicyKind::UniformNonLazy) {
    for (std::size_t e = 0; e < h.num_edges(); ++e) {
      if (h.edge(e).size() < 2) {
        throw Error(ErrorCode::SingletonEdgeNonLazy,
                    "hyperedge '" + h.edge_label(e) + "' is a singleton; a non-lazy walk cannot leave it");
      }
    }
  }
  if (policy.kind == PolicyKind::Custom) check_custom_keys(h, policy);

  RationalDense p = RationalDense::Constant(n, n, Rational(0));
  for (std::size_t u = 0; u < h.num_vertices(); ++u) {
    const auto& star = h.star_of(u);
    Rational r_total(0);
    for (auto e : star) {
      const auto& members = h.edge(e);
      Rational r, s_total(0);
      if (policy.kind == PolicyKind::Custom) {
        r = lookup(policy.r, std::pair{h.vertex_label(u), h.edge_label(e)});
      } else {
        r = Rational(1, static_cast<long>(star.size()));
      }
      r_total += r;
      for (auto v : members) {
        Rational s;
        switch (policy.kind) {
          case PolicyKind::UniformNonLazy:
            s = v == u ? Rational(0) : Rational(1, static_cast<long>(members.size()) - 1);
            break;
          case PolicyKind::UniformLazy:
            s = Rational(1, static_cast<long>(members.size()));
            break;
          case PolicyKind::Custom:
            s = lookup(policy.s, std::tuple{h.vertex_label(u), h.edge_label(e), h.vertex_label(v)});
            break;
        }
        s_total += s;
        p(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v)) += r * s;
      }
      if (s_total != Rational(1)) {
        throw Error(ErrorCode::InvalidPolicy, "s(" + h.vertex_label(u) + ", " + h.edge_label(e) +
                                                  ", .) sums to " + s_total.str());
      }
    }
    if (r_total != Rational(1)) {
      throw Error(ErrorCode::InvalidPolicy,
                  "r(" + h.vertex_label(u) + ", .) sums to " + r_total.str());
    }
  }
  return {RationalMatrix(std::move(p), h.vertex_labels(), h.vertex_labels()), policy};
}

void check_distribution(const RationalVector& init) {
  Rational total(0);
  for (Eigen::Index i = 0; i < init.size(); ++i) {
    if (init(i).sign() < 0) throw Error(ErrorCode::BadDistribution, "negative probability");
    total += init(i);
  }
  if (total != Rational(1)) {
    throw Error(ErrorCode::BadDistribution, "initial distribution sums to " + total.str());
  }
}

RationalVector point_mass(const RationalMatrix& p, std::string_view vertex) {
  RationalVector x = RationalVector::Constant(p.rows(), Rational(0));
  x(static_cast<Eigen::Index>(row_index(p, vertex))) = 1;
  return x;
}

RationalVector step_distribution(const RationalMatrix& p, const RationalVector& init, std::size_t t) {
  if (init.size() != p.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "distribution length does not match P");
  }
  check_distribution(init);
  RationalVector x = init;
  for (std::size_t k = 0; k < t; ++k) x = (x.transpose() * p.values).transpose();
  return x;
}

RationalLabeledVector hitting_times(const RationalMatrix& p, std::string_view target,
                                    bool first_return) {
  const auto k = static_cast<Eigen::Index>(row_index(p, target));
  const Eigen::Index n = p.rows();

  // Backward search from the target over the support digraph.
  std::vector<bool> reaches(static_cast<std::size_t>(n), false);
  std::deque<Eigen::Index> queue{k};
  reaches[static_cast<std::size_t>(k)] = true;
  while (!queue.empty()) {
    const auto v = queue.front();
    queue.pop_front();
    for (Eigen::Index u = 0; u < n; ++u) {
      if (!reaches[static_cast<std::size_t>(u)] && !p(u, v).is_zero()) {
        reaches[static_cast<std::size_t>(u)] = true;
        queue.push_back(u);
      }
    }
  }
  for (Eigen::Index u = 0; u < n; ++u) {
    if (!reaches[static_cast<std::size_t>(u)]) {
      throw Error(ErrorCode::Unreachable, "'" + std::string(target) + "' is unreachable from '" +
                                              p.row_labels[static_cast<std::size_t>(u)] + "'");
    }
  }

  const RationalDense taboo = drop_index(p.values, k);
  const RationalDense system = RationalDense::Identity(n - 1, n - 1) - taboo;
  const RationalVector h = solve(system, RationalVector::Constant(n - 1, Rational(1)));

  RationalLabeledVector out;
  out.labels = p.row_labels;
  out.values = RationalVector::Constant(n, Rational(0));
  Rational ret(1);
  for (Eigen::Index u = 0, j = 0; u < n; ++u) {
    if (u == k) continue;
    out.values(u) = h(j);
    ret += p(k, u) * h(j);
    ++j;
  }
  out.values(k) = first_return ? ret : Rational(0);
  return out;
}

std::vector<Rational> first_hit_probabilities(const RationalMatrix& p, const RationalVector& init,
                                              std::string_view target, std::size_t horizon) {
  if (horizon < 1) throw Error(ErrorCode::BadHorizon, "horizon must be at least 1");
  if (init.size() != p.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "distribution length does not match P");
  }
  check_distribution(init);
  const auto k = static_cast<Eigen::Index>(row_index(p, target));
  const Eigen::Index n = p.rows();

  std::vector<Rational> out;
  // Mass that has not yet hit the target, after at least one step.
  RationalVector alive = (init.transpose() * p.values).transpose();
  out.push_back(alive(k));
  alive(k) = 0;
  for (std::size_t t = 2; t <= horizon; ++t) {
    RationalVector next = RationalVector::Constant(n, Rational(0));
    for (Eigen::Index u = 0; u < n; ++u) {
      if (alive(u).is_zero()) continue;
      for (Eigen::Index v = 0; v < n; ++v) {
        if (!p(u, v).is_zero()) next(v) += alive(u) * p(u, v);
      }
    }
    out.push_back(next(k));
    next(k) = 0;
    alive = std::move(next);
  }
  return out;
}

bool verify_partition_transition(const TransitionMatrix& t, const std::vector<std::string>& u,
                                 const std::vector<std::string>& v) {
  if (t.policy.kind == PolicyKind::Custom) {
    throw Error(ErrorCode::InvalidPolicy, "partition transition check needs a uniform policy");
  }
  std::set<std::size_t> ui, vi;
  for (const auto& l : u) ui.insert(row_index(t.p, l));
  for (const auto& l : v) vi.insert(row_index(t.p, l));
  for (auto x : ui) {
    if (vi.count(x)) throw Error(ErrorCode::NotDisjoint, "U and V share a vertex");
  }
  for (Eigen::Index w = 0; w < t.p.rows(); ++w) {
    const auto ws = static_cast<std::size_t>(w);
    if (ui.count(ws) || vi.count(ws)) continue;
    Rational diff(0);
    for (auto x : ui) diff += t.p(w, static_cast<Eigen::Index>(x));
    for (auto x : vi) diff -= t.p(w, static_cast<Eigen::Index>(x));
    if (!diff.is_zero()) return false;
  }
  return true;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

namespace {

struct Sampler {
  std::vector<double> cumulative;
  std::size_t last_positive = 0;

  explicit Sampler(const std::vector<double>& weights) {
    double acc = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      acc += weights[i];
      cumulative.push_back(acc);
      if (weights[i] > 0) last_positive = i;
    }
  }

  std::size_t draw(double u) const {
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    const auto i = static_cast<std::size_t>(it - cumulative.begin());
    return std::min(i, last_positive);
  }
};

}  // namespace

SimulationResult simulate(const RationalMatrix& p, const RationalVector& init,
                          const SimulationOptions& opts) {
  if (init.size() != p.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "distribution length does not match P");
  }
  check_distribution(init);
  const auto n = static_cast<std::size_t>(p.rows());
  std::optional<std::size_t> target;
  if (opts.target) target = row_index(p, *opts.target);

  auto to_weights = [](const auto& row) {
    std::vector<double> w;
    for (Eigen::Index i = 0; i < row.size(); ++i) w.push_back(row(i).to_double());
    return w;
  };
  const Sampler start(to_weights(init));
  std::vector<Sampler> rows;
  for (Eigen::Index u = 0; u < p.rows(); ++u) rows.emplace_back(to_weights(p.values.row(u)));

  SimulationResult out;
  out.visit_counts.assign(n, 0);
  out.final_counts.assign(n, 0);
  out.first_hit_histogram.assign(opts.steps + 1, 0);
  double sum = 0, sum_sq = 0;
  for (std::size_t i = 0; i < opts.trajectories; ++i) {
    std::mt19937_64 rng(splitmix64(opts.seed ^ splitmix64(i)));
    auto uniform = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    std::size_t x = start.draw(uniform());
    ++out.visit_counts[x];
    bool hit = false;
    for (std::size_t t = 1; t <= opts.steps; ++t) {
      x = rows[x].draw(uniform());
      ++out.visit_counts[x];
      if (target && x == *target && !hit) {
        hit = true;
        ++out.first_hit_histogram[t];
        sum += static_cast<double>(t);
        sum_sq += static_cast<double>(t) * static_cast<double>(t);
        if (opts.stop_at_hit) break;
      }
    }
    ++out.final_counts[x];
    if (target) ++(hit ? out.hits : out.misses);
  }
  if (out.hits > 0) {
    const double k = static_cast<double>(out.hits);
    out.mean_first_hit = sum / k;
    if (out.hits > 1) {
      const double var = std::max(0.0, (sum_sq - k * out.mean_first_hit * out.mean_first_hit) / (k - 1));
      out.std_error = std::sqrt(var / k);
    }
  }
  return out;
}

nlohmann::ordered_json to_json(const SimulationResult& r, const std::vector<std::string>& labels) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json visits = nlohmann::ordered_json::object();
  nlohmann::ordered_json finals = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    visits[labels[i]] = r.visit_counts[i];
    finals[labels[i]] = r.final_counts[i];
  }
  j["visit_counts"] = std::move(visits);
  j["final_counts"] = std::move(finals);
  if (r.hits + r.misses > 0) {
    j["hits"] = r.hits;
    j["misses"] = r.misses;
    j["first_hit_histogram"] = r.first_hit_histogram;
    j["mean_first_hit"] = r.mean_first_hit;
    j["std_error"] = r.std_error;
  }
  return j;
}

}  // namespace hyperlin
