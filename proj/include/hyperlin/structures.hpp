#pragma once

// Linear-dependence substructures of a hypergraph and their exact
// certificates: dependent vertex/hyperedge sets, units and the unit
// contraction, equal partitions of hyperedges and of stars, star partitions,
// and covering projections with the pullback of vertex dependences.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperlin/hypergraph.hpp"
#include "hyperlin/linalg.hpp"

namespace hyperlin {

enum class CertificateKind {
  DependentVertices,
  DependentHyperedges,
  EqualEdgePartition,
  EqualStarPartition,
  StarPartition,
  UnitWitness,
};

/// Which matrix annihilates the coefficient vector.
enum class Annihilator { IncidenceTransposed, Incidence, IncidenceGraphAdjacency };

enum class Axis { Vertices, Hyperedges };

std::string_view to_string(CertificateKind k);
std::string_view to_string(Annihilator a);

/// Coefficient vector witnessing a linear dependence. `labels` is the full
/// axis the vector is indexed by (all vertices or all hyperedges of the
/// hypergraph); `support` lists the labels with nonzero coefficient.
struct Certificate {
  CertificateKind kind = CertificateKind::DependentVertices;
  std::vector<std::string> labels;
  RationalVector coefficients;
  std::vector<std::string> support;
  Annihilator annihilated_by = Annihilator::IncidenceTransposed;

  Certificate() = default;
  Certificate(CertificateKind k, std::vector<std::string> axis_labels, RationalVector coeffs,
              Annihilator by);

  Axis axis() const {
    return annihilated_by == Annihilator::Incidence ? Axis::Hyperedges : Axis::Vertices;
  }
  bool is_zero() const { return support.empty(); }
};

std::vector<std::string> support_of(const std::vector<std::string>& labels,
                                    const RationalVector& coefficients);

/// Exact soundness: labels match the hypergraph axis, the declared support
/// matches the coefficients, and the named matrix annihilates them.
bool is_sound(const Hypergraph& h, const Certificate& c);

nlohmann::ordered_json to_json(const Certificate& c);

/// Canonical certificate from the first free-variable nullspace vector of
/// I_H^T, scaled to a primitive integer vector with positive leading entry.
std::optional<Certificate> dependent_vertices(const Hypergraph& h);
/// Same over the columns of I_H.
std::optional<Certificate> dependent_hyperedges(const Hypergraph& h);
/// Dependence restricted to the rows (or columns) named in `subset`.
/// Throws UnknownLabel.
std::optional<Certificate> is_dependent_set(const Hypergraph& h,
                                            const std::vector<std::string>& subset, Axis axis);

struct Unit {
  std::vector<std::string> generator;  // common star, in hyperedge order
  std::vector<std::string> members;    // in vertex order
};

/// Partition of V(H) into classes of equal stars, ordered by first member.
struct UnitDecomposition {
  std::vector<Unit> units;
  std::vector<std::size_t> unit_of_vertex;  // vertex index -> unit index

  std::size_t size() const { return units.size(); }
};

UnitDecomposition units(const Hypergraph& h);
nlohmann::ordered_json to_json(const UnitDecomposition& u);

/// H / R_u(H): vertices are the units (labeled by set_label of the members),
/// hyperedge e becomes the set of units meeting it and keeps its label.
struct ContractionMap {
  Hypergraph contracted;
  UnitDecomposition decomposition;
  std::vector<std::size_t> vertex_map;  // vertex of H -> vertex of contraction
  std::vector<std::size_t> edge_map;    // hyperedge of H -> hyperedge of contraction
};

ContractionMap unit_contraction(const Hypergraph& h);

/// Decides through the incidence-graph null space that every difference
/// vector x_{w0,w} (w in W) is annihilated by A_{G_H} and that no vertex
/// outside W can be added while keeping that property.
/// Throws UnknownLabel, TooSmall.
bool verify_unit_maximality(const Hypergraph& h, const std::vector<std::string>& w);

/// Lifts z from the null space of A_{G_{H/R}} to the null space of A_{G_H}:
/// unit coordinates are spread evenly over the unit's members, hyperedge
/// coordinates are copied. z is indexed by contraction vertices followed by
/// contraction hyperedges. Throws DimensionMismatch, NotInNullspace.
RationalLabeledVector contraction_nullspace_lift(const Hypergraph& h, const RationalVector& z);

struct EqualPartitionCheck {
  bool holds = false;
  std::vector<std::pair<std::size_t, std::size_t>> per_edge;  // (|U∩e|, |V∩e|)
};

/// Throws NotDisjoint, UnknownLabel.
EqualPartitionCheck verify_equal_edge_partition(const Hypergraph& h,
                                                const std::vector<std::string>& u,
                                                const std::vector<std::string>& v);

struct VertexPartition {
  std::vector<std::string> u;
  std::vector<std::string> v;
  friend bool operator==(const VertexPartition&, const VertexPartition&) = default;
};

/// Every disjoint pair (U, V), U nonempty, |U|+|V| <= max_support, with
/// |U∩e| = |V∩e| for all e. The swap (V, U) of a pair is not listed again:
/// the first support vertex (in vertex order) always lies in U. Sorted by
/// support size, then lexicographically by vertex indices.
std::vector<VertexPartition> find_equal_edge_partitions(const Hypergraph& h,
                                                        std::size_t max_support = 8);

/// Stars of `parts` are pairwise disjoint and their union is the star of v0.
/// Throws UnknownLabel, Overlap.
bool verify_star_partition(const Hypergraph& h, const std::string& v0,
                           const std::vector<std::string>& parts);

/// |E_v ∩ E| = |E_v ∩ F| for every vertex v. Throws NotDisjoint, UnknownLabel.
bool verify_equal_star_partition(const Hypergraph& h, const std::vector<std::string>& e,
                                 const std::vector<std::string>& f);

enum class ProjectionClass { NotHomomorphism, Homomorphism, Covering, CardinalityPreservingCovering };

std::string_view to_string(ProjectionClass c);

using VertexMap = std::map<std::string, std::string>;

/// Throws UnknownLabel when f is not total on V(H) or maps outside V(Hbar).
ProjectionClass verify_covering_projection(const Hypergraph& h, const Hypergraph& hbar,
                                           const VertexMap& f);

/// x(u) = cert(f(u)). Throws NotCardinalityPreserving, InvalidCertificate.
Certificate pullback_dependent_set(const Hypergraph& h, const Hypergraph& hbar, const VertexMap& f,
                                   const Certificate& cert);

/// Vertex map of the unit contraction, keyed by labels.
VertexMap contraction_vertex_map(const Hypergraph& h, const ContractionMap& c);

/// Embeds a vertex vector (first) or hyperedge vector into R^{V(G_H)}.
RationalVector embed_vertices(const Hypergraph& h, const RationalVector& x);
RationalVector embed_hyperedges(const Hypergraph& h, const RationalVector& y);

/// Characteristic-vector difference chi_U - chi_V over V(H).
RationalVector indicator_difference(const Hypergraph& h, const std::vector<std::string>& u,
                                    const std::vector<std::string>& v);

}  // namespace hyperlin
