// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hyperlin/centrality.hpp"
#include "hyperlin/randwalk.hpp"
#include "hyperlin/spectra.hpp"
#include "hyperlin/structures.hpp"
#include "support/testing.hpp"

using namespace hyperlin;
using hyperlin::testing::fixture;
using hyperlin::testing::labels;
using hyperlin::testing::rvec;

namespace {

class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  bool ok() const { return failed_ == 0; }
  std::string summary() const {
    std::ostringstream s;
    s << count_ - failed_ << "/" << count_ << " checks";
    for (const auto& f : failures_) s << "; " << f;
    return s.str();
  }

 private:
  std::size_t count_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
};

long nullity(const RationalDense& m) { return static_cast<long>(m.cols()) - static_cast<long>(rank(m)); }

RationalDense transposed(const RationalDense& m) { return m.transpose(); }

std::vector<Hypergraph> random_family(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<Hypergraph> out;
  for (int i = 0; i < count; ++i) out.push_back(testing::random_hypergraph(rng, 8, 8, 0.4));
  return out;
}

bool isolated_or_singleton(const Hypergraph& h) {
  for (std::size_t v = 0; v < h.num_vertices(); ++v) {
    if (h.star_of(v).empty()) return true;
  }
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    if (h.edge(e).size() < 2) return true;
  }
  return false;
}

// Replaces vertex i of h by copies[i] vertices with the same star.
Hypergraph blow_up(const Hypergraph& h, const std::vector<std::size_t>& copies) {
  std::vector<std::string> vertices;
  std::vector<std::vector<std::string>> clones(h.num_vertices());
  for (std::size_t v = 0; v < h.num_vertices(); ++v) {
    for (std::size_t k = 0; k < copies[v]; ++k) {
      clones[v].push_back(h.vertex_label(v) + "_" + std::to_string(k));
      vertices.push_back(clones[v].back());
    }
  }
  std::vector<Hyperedge> edges;
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    Hyperedge out{h.edge_label(e), {}};
    for (auto v : h.edge(e)) out.members.insert(out.members.end(), clones[v].begin(), clones[v].end());
    edges.push_back(std::move(out));
  }
  return Hypergraph(vertices, edges);
}

void criterion_1(Check& c) {
  const auto ha = fixture("h_a");
  const auto de = dependent_hyperedges(ha);
  c.expect(de && de->coefficients == rvec({1, -1, 1, -1, 0}), "H_A hyperedge certificate");
  const auto dv = dependent_vertices(ha);
  c.expect(dv && dv->support == labels({"1", "2", "3", "4"}) && is_sound(ha, *dv),
           "H_A vertex certificate support");
  std::mt19937_64 rng(101);
  for (int n = 3; n <= 10; ++n) {
    const auto fixed = fixture("h_lowtri_" + std::to_string(n));
    c.expect(determinant(incidence_matrix(fixed).values) == Rational(1), "lowtri fixture n=" + std::to_string(n));
    for (int k = 0; k < 5; ++k) {
      const auto h = testing::random_lower_triangular(rng, static_cast<std::size_t>(n));
      c.expect(determinant(incidence_matrix(h).values) == Rational(1), "random lowtri n=" + std::to_string(n));
    }
  }
  for (int n = 3; n <= 8; ++n) {
    const auto h = fixture("h_circ_" + std::to_string(n));
    const Rational want = Rational((n % 2 == 1 ? 1 : -1) * (n - 1));
    c.expect(determinant(incidence_matrix(h).values) == want, "circulant n=" + std::to_string(n));
  }
}

void criterion_2(Check& c) {
  const auto h = fixture("h_units");
  const auto u = units(h);
  const std::vector<std::vector<std::string>> members{{"1", "2"}, {"3", "4"}, {"5", "6", "7"},
                                                      {"8", "9"}, {"10"},     {"11"}};
  const std::vector<std::vector<std::string>> generators{{"e1", "e2"}, {"e2", "e3"}, {"e1", "e4"},
                                                         {"e4", "e5"}, {"e1", "e3", "e5"}, {"e1", "e5"}};
  c.expect(u.size() == 6, "six units");
  for (std::size_t i = 0; i < std::min<std::size_t>(u.size(), 6); ++i) {
    c.expect(u.units[i].members == members[i], "unit members " + std::to_string(i));
    c.expect(u.units[i].generator == generators[i], "unit generator " + std::to_string(i));
  }
  const auto k = unit_contraction(h);
  c.expect(k.contracted.num_vertices() == 6, "contraction has 6 vertices");
  c.expect(k.contracted.num_edges() == 5, "contraction has 5 hyperedges");
  std::vector<bool> hit(k.contracted.num_edges(), false);
  for (auto e : k.edge_map) hit[e] = true;
  c.expect(k.edge_map.size() == k.contracted.num_edges() &&
               std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }),
           "edge_map is a bijection");
}

void criterion_3(Check& c) {
  for (const auto& h : random_family(3, 500)) {
    const auto inc = incidence_matrix(h).values;
    const long nv = static_cast<long>(h.num_vertices());
    const long ne = static_cast<long>(h.num_edges());
    c.expect(rank(inc) == rank(transposed(inc)), "rank(I) = rank(I^T)");
    const long n_agh = nullity(build_A_GH(h).values);
    const long n_i = nullity(inc);
    const long n_it = nullity(transposed(inc));
    c.expect(n_agh == n_i + n_it, "nullity(A_GH) = nullity(I) + nullity(I^T)");
    c.expect(n_agh >= std::abs(nv - ne), "nullity(A_GH) >= ||V| - |E||");
    if (nv == ne) {
      c.expect((n_agh == 0) == (determinant(inc) != Rational(0)), "square: nonsingular A_GH iff det I != 0");
    }
  }
}

void criterion_4(Check& c) {
  auto agrees = [&](const Hypergraph& h, const std::vector<std::string>& u, const std::vector<std::string>& v) {
    const bool partition = verify_equal_edge_partition(h, u, v).holds;
    const bool null = is_exactly_zero(transposed(incidence_matrix(h).values) * indicator_difference(h, u, v));
    c.expect(partition == null, "partition test disagrees with null space test");
    return partition;
  };
  const auto heq = fixture("h_eq");
  c.expect(agrees(heq, {"1", "5"}, {"2", "3", "4"}), "H_eq U={1,5}, V={2,3,4}");

  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> side(0, 2);
  std::size_t positives = 0;
  for (const auto& h : random_family(4, 500)) {
    for (const auto& p : find_equal_edge_partitions(h, h.num_vertices())) {
      positives += agrees(h, p.u, p.v);
    }
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<std::string> u, v;
      for (const auto& label : h.vertex_labels()) {
        const int s = side(rng);
        if (s == 1) u.push_back(label);
        if (s == 2) v.push_back(label);
      }
      positives += agrees(h, u, v);
    }
  }
  c.expect(positives > 0, "random instances exercise the positive direction");
}

void criterion_5(Check& c) {
  const WeightPreset presets[] = {WeightPreset::Unit, WeightPreset::EdgeNormalized,
                                  WeightPreset::FullyNormalized};
  auto instances = random_family(5, 200);
  for (const char* name : {"h_a", "h_units", "h_eq", "h_cov", "h_cov_bar"}) instances.push_back(fixture(name));
  for (const auto& h : instances) {
    if (isolated_or_singleton(h)) continue;
    const auto basis = nullspace(incidence_matrix(h).transpose());
    for (auto preset : presets) {
      const auto w = make_weights(h, preset);
      for (const auto& x : basis.vectors) {
        const Certificate cert(CertificateKind::DependentVertices, h.vertex_labels(), x,
                               Annihilator::IncidenceTransposed);
        c.expect(verify_Q_annihilation(h, w, cert), "Q c = 0");
      }
    }
  }

  const auto hu = fixture("h_units");
  const double unit_values[] = {-2.0, -0.5, -0.25};
  for (std::size_t i = 0; i < 3; ++i) {
    const auto s = spectrum(hu, MatrixKind::A, make_weights(hu, presets[i]));
    c.expect(s.contains(unit_values[i]), "unit eigenvalue " + std::to_string(unit_values[i]));
    bool close = false;
    for (double x : s.values) close = close || std::abs(x - unit_values[i]) <= 1e-8;
    c.expect(close, "unit eigenvalue within 1e-8");
  }

  for (const auto& h : instances) {
    const auto s = spectrum(h, MatrixKind::AGH, make_weights(h, WeightPreset::Unit));
    const auto n = s.values.size();
    for (Eigen::Index i = 0; i < n; ++i) {
      c.expect(std::abs(s.values(i) + s.values(n - 1 - i)) <= 1e-8, "A_GH spectrum symmetric");
    }
  }
}

void criterion_6(Check& c) {
  auto instances = random_family(6, 200);
  for (const char* name : {"h_a", "h_units", "h_eq", "h_cov"}) instances.push_back(fixture(name));
  for (const auto& h : instances) {
    if (isolated_or_singleton(h)) continue;
    const auto t = transition_matrix(h, WalkPolicy::non_lazy());
    c.expect(t.p.values == build_A(h, make_weights(h, WeightPreset::FullyNormalized)).values,
             "non-lazy P equals normalized adjacency");
    for (const auto& p : find_equal_edge_partitions(h, h.num_vertices())) {
      c.expect(verify_partition_transition(t, p.u, p.v), "partition transition");
    }
  }

  const auto h = fixture("h_units");
  const auto u = units(h);
  for (auto policy : {WalkPolicy::non_lazy(), WalkPolicy::lazy()}) {
    const auto p = transition_matrix(h, policy).p;
    std::vector<RationalLabeledVector> to(h.num_vertices());
    for (std::size_t v = 0; v < h.num_vertices(); ++v) to[v] = hitting_times(p, h.vertex_label(v));
    for (const auto& unit : u.units) {
      for (std::size_t i = 0; i < unit.members.size(); ++i) {
        for (std::size_t j = i + 1; j < unit.members.size(); ++j) {
          const auto a = static_cast<Eigen::Index>(h.vertex_index(unit.members[i]));
          const auto b = static_cast<Eigen::Index>(h.vertex_index(unit.members[j]));
          c.expect(to[static_cast<std::size_t>(b)][a] == to[static_cast<std::size_t>(a)][b], "E_u^v = E_v^u");
          for (Eigen::Index w = 0; w < p.rows(); ++w) {
            if (w == a || w == b) continue;
            c.expect(to[static_cast<std::size_t>(a)][w] == to[static_cast<std::size_t>(b)][w], "E_w^u = E_w^v");
          }
        }
      }
    }
  }

  struct McCase {
    const char* fixture;
    WalkPolicy policy;
    const char* from;
    const char* target;
  };
  const McCase cases[] = {{"h_units", WalkPolicy::non_lazy(), "11", "1"},
                          {"h_units", WalkPolicy::lazy(), "3", "10"},
                          {"h_a", WalkPolicy::lazy(), "1", "5"}};
  for (const auto& mc : cases) {
    const auto hh = fixture(mc.fixture);
    const auto p = transition_matrix(hh, mc.policy).p;
    const double exact = hitting_times(p, mc.target)[static_cast<Eigen::Index>(hh.vertex_index(mc.from))].to_double();
    SimulationOptions opts;
    opts.steps = 100000;
    opts.trajectories = 100000;
    opts.seed = 20240601;
    opts.target = mc.target;
    opts.stop_at_hit = true;
    const auto r = simulate(p, point_mass(p, mc.from), opts);
    c.expect(r.misses == 0, "every trajectory hits the target");
    c.expect(std::abs(r.mean_first_hit - exact) <= 3 * r.std_error,
             std::string("Monte-Carlo mean within 3 SE on ") + mc.fixture);
  }
}

void criterion_7(Check& c) {
  const auto h = fixture("h_units");
  const auto u = units(h);
  auto constant_exact = [&](const CentralityReport& r, const std::string& what) {
    for (std::size_t a = 0; a < h.num_vertices(); ++a) {
      for (std::size_t b = a + 1; b < h.num_vertices(); ++b) {
        if (u.unit_of_vertex[a] == u.unit_of_vertex[b]) {
          c.expect(r.exact && (*r.exact)[a] == (*r.exact)[b], what + " constant on units");
        }
      }
    }
  };
  for (auto policy : {WalkPolicy::non_lazy(), WalkPolicy::lazy()}) {
    constant_exact(rw_closeness(h, policy), "rw_closeness");
    constant_exact(rw_betweenness(h, policy, 10), "rw_betweenness T=10");
    constant_exact(rw_betweenness(h, policy, 100), "rw_betweenness T=100");
  }
  constant_exact(unit_closeness(h), "unit_closeness");
  constant_exact(unit_eccentricity(h), "unit_eccentricity");

  const auto perron = perron_centrality(h);
  for (std::size_t a = 0; a < h.num_vertices(); ++a) {
    for (std::size_t b = a + 1; b < h.num_vertices(); ++b) {
      if (u.unit_of_vertex[a] == u.unit_of_vertex[b]) {
        c.expect(std::abs(perron.values[a] - perron.values[b]) <= 1e-10, "perron constant on units");
      }
    }
  }
  c.expect(perron.parameters["residual"].get<double>() < 1e-10, "Perron residual < 1e-10");
}

void criterion_8(Check& c) {
  const auto h = fixture("h_cov");
  const auto hbar = fixture("h_cov_bar");
  const auto f = testing::fixture_map("h_cov_map");
  c.expect(verify_covering_projection(h, hbar, f) == ProjectionClass::CardinalityPreservingCovering,
           "pair is a cardinality-preserving covering");

  const auto hu = fixture("h_units");
  const auto k = unit_contraction(hu);
  c.expect(verify_covering_projection(hu, k.contracted, contraction_vertex_map(hu, k)) == ProjectionClass::Covering,
           "unit contraction is a covering, not cardinality-preserving");

  const auto basis = nullspace(incidence_matrix(hbar).transpose());
  c.expect(!basis.vectors.empty(), "target has vertex dependences");
  for (const auto& x : basis.vectors) {
    const Certificate cert(CertificateKind::DependentVertices, hbar.vertex_labels(), x,
                           Annihilator::IncidenceTransposed);
    const auto pulled = pullback_dependent_set(h, hbar, f, cert);
    c.expect(is_sound(h, pulled) && !pulled.is_zero(), "pullback certificate verifies");
  }
}

void criterion_9(Check& c) {
  auto instances = random_family(9, 200);
  for (const char* name : {"h_a", "h_units", "h_eq", "h_cov"}) instances.push_back(fixture(name));

  // Blow-ups of nonsingular square hypergraphs: every unit adds |W| - 1 to
  // the nullity and nothing else does.
  std::mt19937_64 rng(90);
  std::uniform_int_distribution<std::size_t> copies(1, 3);
  for (int n = 3; n <= 8; ++n) {
    for (const auto& base : {fixture("h_lowtri_" + std::to_string(n)), fixture("h_circ_" + std::to_string(n))}) {
      std::vector<std::size_t> k(base.num_vertices());
      for (auto& x : k) x = copies(rng);
      instances.push_back(blow_up(base, k));
    }
  }

  std::size_t nonsingular_cases = 0;
  for (const auto& h : instances) {
    const auto k = unit_contraction(h);
    const auto big = build_A_GH(h);
    const auto small = build_A_GH(k.contracted);
    for (const auto& z : nullspace(small).vectors) {
      c.expect(is_exactly_zero(big.values * contraction_nullspace_lift(h, z).values), "lift is annihilated");
    }
    long excess = 0;
    for (const auto& unit : k.decomposition.units) excess += static_cast<long>(unit.members.size()) - 1;
    if (nullity(big.values) == excess) {
      ++nonsingular_cases;
      c.expect(determinant(small.values) != Rational(0), "contracted A_G nonsingular");
    }
  }
  c.expect(nonsingular_cases >= 12, "constructed instances reach the nullity bound");
}

}  // namespace

int main() {
  const std::vector<std::tuple<int, std::string, double, std::function<void(Check&)>>> criteria{
      {1, "worked example certificates and determinants", 1.0, criterion_1},
      {2, "units and unit contraction of H_units", 1.0, criterion_2},
      {3, "rank and nullity laws on 500 random hypergraphs", 30.0, criterion_3},
      {4, "equal edge partitions agree with the null space", 0.0, criterion_4},
      {5, "spectral consequences of dependences", 0.0, criterion_5},
      {6, "random walk transitions, hitting times, Monte-Carlo", 0.0, criterion_6},
      {7, "centralities constant on units", 0.0, criterion_7},
      {8, "covering projections and pullbacks", 0.0, criterion_8},
      {9, "contraction lifts and nonsingularity", 0.0, criterion_9},
  };
  int failed = 0;
  for (const auto& [id, title, budget, run] : criteria) {
    Check check;
    std::string error;
    const auto start = std::chrono::steady_clock::now();
    try {
      run(check);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = budget <= 0 || seconds < budget;
    const bool pass = error.empty() && check.ok() && in_time;
    std::printf("%s  criterion %d: %s (%.3f s", pass ? "PASS" : "FAIL", id, title.c_str(), seconds);
    if (budget > 0) std::printf(", limit %.0f s", budget);
    std::printf(") %s", check.summary().c_str());
    if (!error.empty()) std::printf("; exception: %s", error.c_str());
    if (!in_time) std::printf("; over time limit");
    std::printf("\n");
    failed += !pass;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
