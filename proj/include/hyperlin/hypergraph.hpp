#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hyperlin/matrix.hpp"

namespace hyperlin {

struct Hyperedge {
  std::string label;
  std::vector<std::string> members;
};

/// Finite hypergraph with labeled vertices and labeled, pairwise distinct,
/// non-empty hyperedges. Vertex and hyperedge order is fixed at construction
/// and determines the row/column order of every derived matrix.
///
/// Members are stored as sorted vertex indices; `members(e)` reports them in
/// vertex declaration order.
class Hypergraph {
 public:
  Hypergraph() = default;
  /// Throws DuplicateLabel, UnknownVertex, EmptyHyperedge or
  /// DuplicateHyperedgeSet when the invariants do not hold. Repeated members
  /// inside one hyperedge collapse (a hyperedge is a set).
  Hypergraph(std::vector<std::string> vertices, const std::vector<Hyperedge>& edges);

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edge_labels_.size(); }

  const std::vector<std::string>& vertex_labels() const { return vertices_; }
  const std::vector<std::string>& edge_labels() const { return edge_labels_; }
  const std::string& vertex_label(std::size_t v) const { return vertices_[v]; }
  const std::string& edge_label(std::size_t e) const { return edge_labels_[e]; }

  std::optional<std::size_t> find_vertex(std::string_view label) const;
  std::optional<std::size_t> find_edge(std::string_view label) const;
  /// Throws UnknownVertex.
  std::size_t vertex_index(std::string_view label) const;
  /// Throws UnknownLabel.
  std::size_t edge_index(std::string_view label) const;

  /// Sorted vertex indices of hyperedge e.
  const std::vector<std::size_t>& edge(std::size_t e) const { return members_[e]; }
  /// Sorted hyperedge indices of the star of vertex v.
  const std::vector<std::size_t>& star_of(std::size_t v) const { return stars_[v]; }
  bool contains(std::size_t e, std::size_t v) const;

  std::vector<std::string> members(std::size_t e) const;
  std::vector<Hyperedge> hyperedges() const;

  /// Index of the hyperedge with exactly these (sorted) members.
  std::optional<std::size_t> find_edge_by_members(const std::vector<std::size_t>& sorted) const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.vertices_ == b.vertices_ && a.edge_labels_ == b.edge_labels_ &&
           a.members_ == b.members_;
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<std::string> edge_labels_;
  std::vector<std::vector<std::size_t>> members_;
  std::vector<std::vector<std::size_t>> stars_;
  std::unordered_map<std::string, std::size_t> vertex_index_;
  std::unordered_map<std::string, std::size_t> edge_index_;
};

enum class InputFormat { Json, Lines };

/// Parses either the canonical JSON form
///   {"vertices": [...], "hyperedges": {"e1": [...], ...}}
/// or the lines form: one `label: v1 v2 ...` per line, `#` comments, and an
/// optional `#vertices: a b c` header that declares (possibly isolated)
/// vertices ahead of those discovered through membership.
Hypergraph parse(std::string_view text, InputFormat format);
Hypergraph parse_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json to_json(const Hypergraph& h);
/// Canonical JSON text (two-space indent, trailing newline).
std::string serialize(const Hypergraph& h);

/// Labels of the hyperedges containing `vertex`. Throws UnknownVertex.
std::vector<std::string> star(const Hypergraph& h, std::string_view vertex);

/// 0/1 matrix, rows = vertices, columns = hyperedges, both in declared order.
RationalMatrix incidence_matrix(const Hypergraph& h);

/// Vertices are the hyperedges of h; hyperedges are the distinct stars of h.
/// Each dual hyperedge is labeled by the set of vertices that share that
/// star, e.g. "{1,2}". Throws EmptyStar on an isolated vertex.
Hypergraph dual(const Hypergraph& h);

struct IncidenceGraph {
  std::vector<std::string> left;   // vertices of h
  std::vector<std::string> right;  // hyperedges of h
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // (vertex, hyperedge)
};

IncidenceGraph incidence_graph(const Hypergraph& h);

/// Adjacency matrix of the incidence graph in block form [[0, I], [I^T, 0]],
/// labels = vertices followed by hyperedges.
RationalMatrix incidence_graph_adjacency(const Hypergraph& h);

/// Label used for a set of vertices, e.g. "{5,6,7}".
std::string set_label(const std::vector<std::string>& members);

}  // namespace hyperlin
