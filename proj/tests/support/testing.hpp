#pragma once

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "hyperlin/hypergraph.hpp"
#include "hyperlin/structures.hpp"

namespace hyperlin::testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(HYPERLIN_FIXTURE_DIR) + "/" + name + ".json";
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline Hypergraph fixture(const std::string& name) {
  return parse(read_file(fixture_path(name)), InputFormat::Json);
}

inline VertexMap fixture_map(const std::string& name) {
  const auto j = nlohmann::json::parse(read_file(fixture_path(name)));
  return j.get<VertexMap>();
}

/// Lines-format shorthand, e.g. lines("e1: a b\ne2: b c").
inline Hypergraph lines(const std::string& text) { return parse(text, InputFormat::Lines); }

inline RationalVector rvec(std::initializer_list<long> values) {
  RationalVector v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (long x : values) v(i++) = Rational(x);
  return v;
}

inline std::vector<std::string> labels(std::initializer_list<const char*> xs) {
  return {xs.begin(), xs.end()};
}

/// Random hypergraph with 1..max_v vertices and 1..max_e hyperedges, each
/// vertex joining each hyperedge with probability `density`. Empty and
/// repeated member sets are redrawn (a few times, then dropped).
inline Hypergraph random_hypergraph(std::mt19937_64& rng, std::size_t max_v = 8,
                                    std::size_t max_e = 8, double density = 0.4) {
  std::uniform_int_distribution<std::size_t> nv(1, max_v), ne(1, max_e);
  std::bernoulli_distribution in(density);
  const std::size_t n = nv(rng), m = ne(rng);
  std::vector<std::string> vertices;
  for (std::size_t i = 0; i < n; ++i) vertices.push_back("v" + std::to_string(i + 1));
  std::set<std::vector<std::string>> seen;
  std::vector<Hyperedge> edges;
  for (std::size_t e = 0; e < m; ++e) {
    for (int attempt = 0; attempt < 20; ++attempt) {
      std::vector<std::string> members;
      for (const auto& v : vertices) {
        if (in(rng)) members.push_back(v);
      }
      if (members.empty() || !seen.insert(members).second) continue;
      edges.push_back({"e" + std::to_string(edges.size() + 1), members});
      break;
    }
  }
  return Hypergraph(vertices, edges);
}

/// Random member of the lower-triangular family: e_1 = {1}, i in e_i and
/// e_i a subset of {1..i}.
inline Hypergraph random_lower_triangular(std::mt19937_64& rng, std::size_t n) {
  std::bernoulli_distribution coin(0.5);
  std::vector<std::string> vertices;
  for (std::size_t i = 1; i <= n; ++i) vertices.push_back(std::to_string(i));
  std::vector<Hyperedge> edges;
  for (std::size_t i = 1; i <= n; ++i) {
    Hyperedge e{"e" + std::to_string(i), {}};
    for (std::size_t j = 1; j < i; ++j) {
      if (coin(rng)) e.members.push_back(std::to_string(j));
    }
    e.members.push_back(std::to_string(i));
    edges.push_back(std::move(e));
  }
  return Hypergraph(vertices, edges);
}

// Oracles independent of the exact elimination code.

/// Rank through a floating-point full-pivot LU; exact for small 0/1 input.
inline long float_rank(const RationalDense& m) {
  if (m.size() == 0) return 0;
  Eigen::FullPivLU<Eigen::MatrixXd> lu(to_double(m));
  lu.setThreshold(1e-9);
  return lu.rank();
}

inline double float_det(const RationalDense& m) {
  if (m.rows() == 0) return 1.0;
  return to_double(m).determinant();
}

inline Eigen::VectorXd reference_eigenvalues(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

/// Star equality computed straight from membership lists.
inline bool same_star(const Hypergraph& h, std::size_t a, std::size_t b) {
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    if (h.contains(e, a) != h.contains(e, b)) return false;
  }
  return true;
}

}  // namespace hyperlin::testing
