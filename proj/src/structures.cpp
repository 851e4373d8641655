#include "hyperlin/structures.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "hyperlin/error.hpp"

namespace hyperlin {

std::string_view to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::DependentVertices: return "DependentVertices";
    case CertificateKind::DependentHyperedges: return "DependentHyperedges";
    case CertificateKind::EqualEdgePartition: return "EqualEdgePartition";
    case CertificateKind::EqualStarPartition: return "EqualStarPartition";
    case CertificateKind::StarPartition: return "StarPartition";
    case CertificateKind::UnitWitness: return "UnitWitness";
  }
  return "Unknown";
}

std::string_view to_string(Annihilator a) {
  switch (a) {
    case Annihilator::IncidenceTransposed: return "I_H^T";
    case Annihilator::Incidence: return "I_H";
    case Annihilator::IncidenceGraphAdjacency: return "A_GH";
  }
  return "Unknown";
}

std::string_view to_string(ProjectionClass c) {
  switch (c) {
    case ProjectionClass::NotHomomorphism: return "NotHomomorphism";
    case ProjectionClass::Homomorphism: return "Homomorphism";
    case ProjectionClass::Covering: return "Covering";
    case ProjectionClass::CardinalityPreservingCovering: return "CardinalityPreservingCovering";
  }
  return "Unknown";
}

std::vector<std::string> support_of(const std::vector<std::string>& labels,
                                    const RationalVector& coefficients) {
  std::vector<std::string> out;
  for (Eigen::Index i = 0; i < coefficients.size(); ++i) {
    if (!coefficients(i).is_zero()) out.push_back(labels[static_cast<std::size_t>(i)]);
  }
  return out;
}

Certificate::Certificate(CertificateKind k, std::vector<std::string> axis_labels,
                         RationalVector coeffs, Annihilator by)
    : kind(k), labels(std::move(axis_labels)), coefficients(std::move(coeffs)), annihilated_by(by) {
  if (static_cast<std::size_t>(coefficients.size()) != labels.size()) {
    throw Error(ErrorCode::DimensionMismatch, "certificate length does not match its labels");
  }
  support = support_of(labels, coefficients);
}

namespace {

RationalMatrix annihilator_matrix(const Hypergraph& h, Annihilator a) {
  switch (a) {
    case Annihilator::IncidenceTransposed: return incidence_matrix(h).transpose();
    case Annihilator::Incidence: return incidence_matrix(h);
    case Annihilator::IncidenceGraphAdjacency: return incidence_graph_adjacency(h);
  }
  throw std::logic_error("unreachable annihilator");
}

std::vector<std::size_t> resolve_vertices(const Hypergraph& h,
                                          const std::vector<std::string>& labels) {
  std::vector<std::size_t> out;
  for (const auto& l : labels) {
    auto v = h.find_vertex(l);
    if (!v) throw Error(ErrorCode::UnknownLabel, "no vertex '" + l + "'");
    out.push_back(*v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::size_t> resolve_edges(const Hypergraph& h, const std::vector<std::string>& labels) {
  std::vector<std::size_t> out;
  for (const auto& l : labels) out.push_back(h.edge_index(l));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool intersects(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::vector<std::size_t> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  return !common.empty();
}

std::optional<Certificate> dependence_in(const RationalMatrix& m, CertificateKind kind,
                                         Annihilator by) {
  const auto basis = nullspace_vectors(m.values);
  if (basis.empty()) return std::nullopt;
  return Certificate(kind, m.col_labels, normalize_primitive(basis.front()), by);
}

}  // namespace

bool is_sound(const Hypergraph& h, const Certificate& c) {
  const RationalMatrix m = annihilator_matrix(h, c.annihilated_by);
  if (c.labels != m.col_labels || c.coefficients.size() != m.cols()) return false;
  if (c.support != support_of(c.labels, c.coefficients)) return false;
  return is_exactly_zero(m.values * c.coefficients);
}

nlohmann::ordered_json to_json(const Certificate& c) {
  nlohmann::ordered_json j;
  j["kind"] = to_string(c.kind);
  j["annihilated_by"] = to_string(c.annihilated_by);
  j["support"] = c.support;
  nlohmann::ordered_json coeffs = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < c.labels.size(); ++i) {
    coeffs[c.labels[i]] = c.coefficients(static_cast<Eigen::Index>(i)).str();
  }
  j["coefficients"] = std::move(coeffs);
  return j;
}

std::optional<Certificate> dependent_vertices(const Hypergraph& h) {
  return dependence_in(incidence_matrix(h).transpose(), CertificateKind::DependentVertices,
                       Annihilator::IncidenceTransposed);
}

std::optional<Certificate> dependent_hyperedges(const Hypergraph& h) {
  return dependence_in(incidence_matrix(h), CertificateKind::DependentHyperedges,
                       Annihilator::Incidence);
}

std::optional<Certificate> is_dependent_set(const Hypergraph& h,
                                            const std::vector<std::string>& subset, Axis axis) {
  const bool vertices = axis == Axis::Vertices;
  const auto ids = vertices ? resolve_vertices(h, subset) : resolve_edges(h, subset);
  if (ids.empty()) return std::nullopt;
  const RationalMatrix full =
      vertices ? incidence_matrix(h).transpose() : incidence_matrix(h);
  RationalDense sub(full.rows(), static_cast<Eigen::Index>(ids.size()));
  for (std::size_t k = 0; k < ids.size(); ++k) {
    sub.col(static_cast<Eigen::Index>(k)) = full.values.col(static_cast<Eigen::Index>(ids[k]));
  }
  const auto basis = nullspace_vectors(sub);
  if (basis.empty()) return std::nullopt;
  const RationalVector local = normalize_primitive(basis.front());
  RationalVector x = RationalVector::Constant(full.cols(), Rational(0));
  for (std::size_t k = 0; k < ids.size(); ++k) {
    x(static_cast<Eigen::Index>(ids[k])) = local(static_cast<Eigen::Index>(k));
  }
  return Certificate(vertices ? CertificateKind::DependentVertices
                              : CertificateKind::DependentHyperedges,
                     full.col_labels, std::move(x),
                     vertices ? Annihilator::IncidenceTransposed : Annihilator::Incidence);
}

UnitDecomposition units(const Hypergraph& h) {
  UnitDecomposition out;
  out.unit_of_vertex.resize(h.num_vertices());
  std::map<std::vector<std::size_t>, std::size_t> by_star;
  for (std::size_t v = 0; v < h.num_vertices(); ++v) {
    const auto& s = h.star_of(v);
    auto [it, inserted] = by_star.try_emplace(s, out.units.size());
    if (inserted) {
      Unit u;
      for (auto e : s) u.generator.push_back(h.edge_label(e));
      out.units.push_back(std::move(u));
    }
    out.units[it->second].members.push_back(h.vertex_label(v));
    out.unit_of_vertex[v] = it->second;
  }
  return out;
}

nlohmann::ordered_json to_json(const UnitDecomposition& u) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& unit : u.units) {
    nlohmann::ordered_json j;
    j["members"] = unit.members;
    j["generator"] = unit.generator;
    arr.push_back(std::move(j));
  }
  return arr;
}

ContractionMap unit_contraction(const Hypergraph& h) {
  ContractionMap out;
  out.decomposition = units(h);
  out.vertex_map = out.decomposition.unit_of_vertex;
  std::vector<std::string> unit_labels;
  for (const auto& u : out.decomposition.units) unit_labels.push_back(set_label(u.members));
  std::vector<Hyperedge> edges;
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    std::set<std::size_t> image;
    for (auto v : h.edge(e)) image.insert(out.vertex_map[v]);
    Hyperedge c{h.edge_label(e), {}};
    for (auto w : image) c.members.push_back(unit_labels[w]);
    edges.push_back(std::move(c));
    out.edge_map.push_back(e);
  }
  out.contracted = Hypergraph(std::move(unit_labels), edges);
  return out;
}

bool verify_unit_maximality(const Hypergraph& h, const std::vector<std::string>& w) {
  const auto ids = resolve_vertices(h, w);
  if (ids.size() < 2) {
    throw Error(ErrorCode::TooSmall, "a unit candidate needs at least two vertices");
  }
  const RationalMatrix a = incidence_graph_adjacency(h);
  const auto dim = a.rows();
  auto difference_annihilated = [&](std::size_t from, std::size_t to) {
    RationalVector x = RationalVector::Constant(dim, Rational(0));
    x(static_cast<Eigen::Index>(from)) = -1;
    x(static_cast<Eigen::Index>(to)) = 1;
    return is_exactly_zero(a.values * x);
  };
  const std::size_t base = ids.front();
  for (std::size_t i = 1; i < ids.size(); ++i) {
    if (!difference_annihilated(base, ids[i])) return false;
  }
  for (std::size_t u = 0; u < h.num_vertices(); ++u) {
    if (std::binary_search(ids.begin(), ids.end(), u)) continue;
    if (difference_annihilated(base, u)) return false;
  }
  return true;
}

RationalLabeledVector contraction_nullspace_lift(const Hypergraph& h, const RationalVector& z) {
  const ContractionMap c = unit_contraction(h);
  const RationalMatrix small = incidence_graph_adjacency(c.contracted);
  if (z.size() != small.cols()) {
    throw Error(ErrorCode::DimensionMismatch,
                "vector has " + std::to_string(z.size()) + " entries, contraction incidence graph has " +
                    std::to_string(small.cols()) + " nodes");
  }
  if (!is_exactly_zero(small.values * z)) {
    throw Error(ErrorCode::NotInNullspace, "vector is not annihilated by the contraction's A_G");
  }
  const auto nc = static_cast<Eigen::Index>(c.contracted.num_vertices());
  const auto n = static_cast<Eigen::Index>(h.num_vertices());
  RationalLabeledVector out;
  out.labels = incidence_graph_adjacency(h).row_labels;
  out.values = RationalVector::Constant(n + static_cast<Eigen::Index>(h.num_edges()), Rational(0));
  for (Eigen::Index v = 0; v < n; ++v) {
    const auto unit = c.vertex_map[static_cast<std::size_t>(v)];
    const auto size = static_cast<long>(c.decomposition.units[unit].members.size());
    out.values(v) = z(static_cast<Eigen::Index>(unit)) / Rational(size);
  }
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    out.values(n + static_cast<Eigen::Index>(e)) = z(nc + static_cast<Eigen::Index>(c.edge_map[e]));
  }
  return out;
}

EqualPartitionCheck verify_equal_edge_partition(const Hypergraph& h,
                                                const std::vector<std::string>& u,
                                                const std::vector<std::string>& v) {
  const auto ui = resolve_vertices(h, u);
  const auto vi = resolve_vertices(h, v);
  if (intersects(ui, vi)) throw Error(ErrorCode::NotDisjoint, "U and V share a vertex");
  EqualPartitionCheck out;
  out.holds = true;
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    std::size_t cu = 0, cv = 0;
    for (auto x : ui) cu += h.contains(e, x) ? 1 : 0;
    for (auto x : vi) cv += h.contains(e, x) ? 1 : 0;
    out.per_edge.emplace_back(cu, cv);
    if (cu != cv) out.holds = false;
  }
  return out;
}

namespace {

struct PartitionSearch {
  const Hypergraph& h;
  std::size_t max_support;
  std::vector<std::size_t> candidates;
  std::vector<long> edge_sum;
  std::vector<long> edge_remaining;  // undecided candidates per hyperedge
  std::vector<int> value;            // per candidate: -1, 0, +1
  std::vector<std::vector<int>> found;

  void run(std::size_t k, std::size_t used, bool seen_nonzero) {
    if (k == candidates.size()) {
      if (!seen_nonzero) return;
      for (long s : edge_sum) {
        if (s != 0) return;
      }
      found.push_back(value);
      return;
    }
    const std::size_t vertex = candidates[k];
    const auto& star = h.star_of(vertex);
    for (auto e : star) --edge_remaining[e];
    for (int val : {0, 1, -1}) {
      if (val != 0 && used == max_support) continue;
      if (val == -1 && !seen_nonzero) continue;  // first support vertex goes to U
      const std::size_t next_used = used + (val != 0 ? 1 : 0);
      const long budget = static_cast<long>(max_support - next_used);
      bool feasible = true;
      for (auto e : star) {
        edge_sum[e] += val;
        const long need = std::labs(edge_sum[e]);
        if (need > edge_remaining[e] || need > budget) feasible = false;
      }
      if (feasible) {
        value[k] = val;
        run(k + 1, next_used, seen_nonzero || val != 0);
        value[k] = 0;
      }
      for (auto e : star) edge_sum[e] -= val;
    }
    for (auto e : star) ++edge_remaining[e];
  }
};

}  // namespace

std::vector<VertexPartition> find_equal_edge_partitions(const Hypergraph& h,
                                                        std::size_t max_support) {
  // Candidate support: coordinates where some null space basis vector is nonzero.
  const auto basis = nullspace_vectors(incidence_matrix(h).transpose().values);
  PartitionSearch search{h, std::min(max_support, h.num_vertices()), {}, {}, {}, {}, {}};
  for (std::size_t v = 0; v < h.num_vertices(); ++v) {
    for (const auto& b : basis) {
      if (!b(static_cast<Eigen::Index>(v)).is_zero()) {
        search.candidates.push_back(v);
        break;
      }
    }
  }
  if (search.candidates.empty() || search.max_support == 0) return {};
  search.edge_sum.assign(h.num_edges(), 0);
  search.edge_remaining.assign(h.num_edges(), 0);
  for (auto v : search.candidates) {
    for (auto e : h.star_of(v)) ++search.edge_remaining[e];
  }
  search.value.assign(search.candidates.size(), 0);
  search.run(0, 0, false);

  struct Keyed {
    std::vector<std::size_t> support, u;
    VertexPartition p;
  };
  std::vector<Keyed> keyed;
  for (const auto& vals : search.found) {
    Keyed k;
    for (std::size_t i = 0; i < vals.size(); ++i) {
      if (vals[i] == 0) continue;
      const auto vertex = search.candidates[i];
      k.support.push_back(vertex);
      if (vals[i] > 0) {
        k.u.push_back(vertex);
        k.p.u.push_back(h.vertex_label(vertex));
      } else {
        k.p.v.push_back(h.vertex_label(vertex));
      }
    }
    keyed.push_back(std::move(k));
  }
  std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    if (a.support.size() != b.support.size()) return a.support.size() < b.support.size();
    if (a.support != b.support) return a.support < b.support;
    return a.u < b.u;
  });
  std::vector<VertexPartition> out;
  for (auto& k : keyed) out.push_back(std::move(k.p));
  return out;
}

bool verify_star_partition(const Hypergraph& h, const std::string& v0,
                           const std::vector<std::string>& parts) {
  const auto root = resolve_vertices(h, {v0}).front();
  const auto ids = resolve_vertices(h, parts);
  if (std::binary_search(ids.begin(), ids.end(), root)) {
    throw Error(ErrorCode::Overlap, "v0 '" + v0 + "' also appears among the parts");
  }
  std::vector<int> cover(h.num_edges(), 0);
  for (auto v : ids) {
    for (auto e : h.star_of(v)) ++cover[e];
  }
  std::vector<int> target(h.num_edges(), 0);
  for (auto e : h.star_of(root)) target[e] = 1;
  return cover == target;
}

bool verify_equal_star_partition(const Hypergraph& h, const std::vector<std::string>& e,
                                 const std::vector<std::string>& f) {
  const auto ei = resolve_edges(h, e);
  const auto fi = resolve_edges(h, f);
  if (intersects(ei, fi)) throw Error(ErrorCode::NotDisjoint, "E and F share a hyperedge");
  for (std::size_t v = 0; v < h.num_vertices(); ++v) {
    long diff = 0;
    for (auto x : ei) diff += h.contains(x, v) ? 1 : 0;
    for (auto x : fi) diff -= h.contains(x, v) ? 1 : 0;
    if (diff != 0) return false;
  }
  return true;
}

namespace {

std::vector<std::size_t> resolve_map(const Hypergraph& h, const Hypergraph& hbar,
                                     const VertexMap& f) {
  std::vector<std::size_t> image(h.num_vertices());
  for (std::size_t v = 0; v < h.num_vertices(); ++v) {
    auto it = f.find(h.vertex_label(v));
    if (it == f.end()) {
      throw Error(ErrorCode::UnknownLabel, "map is undefined on vertex '" + h.vertex_label(v) + "'");
    }
    auto target = hbar.find_vertex(it->second);
    if (!target) throw Error(ErrorCode::UnknownLabel, "map target '" + it->second + "' is not a vertex");
    image[v] = *target;
  }
  for (const auto& [from, to] : f) {
    if (!h.find_vertex(from)) throw Error(ErrorCode::UnknownLabel, "map source '" + from + "' is not a vertex");
  }
  return image;
}

}  // namespace

ProjectionClass verify_covering_projection(const Hypergraph& h, const Hypergraph& hbar,
                                           const VertexMap& f) {
  const auto image = resolve_map(h, hbar, f);
  std::vector<std::size_t> edge_image(h.num_edges());
  bool cardinality_preserving = true;
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    std::vector<std::size_t> img;
    for (auto v : h.edge(e)) img.push_back(image[v]);
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    auto target = hbar.find_edge_by_members(img);
    if (!target) return ProjectionClass::NotHomomorphism;
    edge_image[e] = *target;
    if (img.size() != h.edge(e).size()) cardinality_preserving = false;
  }
  std::vector<bool> hit(hbar.num_vertices(), false);
  for (auto t : image) hit[t] = true;
  const bool surjective = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  bool star_bijective = true;
  for (std::size_t v = 0; v < h.num_vertices() && star_bijective; ++v) {
    std::set<std::size_t> imgs;
    for (auto e : h.star_of(v)) imgs.insert(edge_image[e]);
    star_bijective = imgs.size() == h.star_of(v).size() &&
                     imgs.size() == hbar.star_of(image[v]).size();
  }
  if (!surjective || !star_bijective) return ProjectionClass::Homomorphism;
  return cardinality_preserving ? ProjectionClass::CardinalityPreservingCovering
                                : ProjectionClass::Covering;
}

Certificate pullback_dependent_set(const Hypergraph& h, const Hypergraph& hbar, const VertexMap& f,
                                   const Certificate& cert) {
  if (verify_covering_projection(h, hbar, f) != ProjectionClass::CardinalityPreservingCovering) {
    throw Error(ErrorCode::NotCardinalityPreserving,
                "pullback needs a cardinality preserving covering projection");
  }
  if (cert.annihilated_by != Annihilator::IncidenceTransposed || !is_sound(hbar, cert)) {
    throw Error(ErrorCode::InvalidCertificate,
                "certificate is not a vertex dependence of the target hypergraph");
  }
  const auto image = resolve_map(h, hbar, f);
  RationalVector x(static_cast<Eigen::Index>(h.num_vertices()));
  for (std::size_t v = 0; v < h.num_vertices(); ++v) {
    x(static_cast<Eigen::Index>(v)) = cert.coefficients(static_cast<Eigen::Index>(image[v]));
  }
  Certificate out(CertificateKind::DependentVertices, h.vertex_labels(), std::move(x),
                  Annihilator::IncidenceTransposed);
  if (!is_sound(h, out)) throw std::logic_error("pullback produced an unsound certificate");
  return out;
}

VertexMap contraction_vertex_map(const Hypergraph& h, const ContractionMap& c) {
  VertexMap f;
  for (std::size_t v = 0; v < h.num_vertices(); ++v) {
    f[h.vertex_label(v)] = c.contracted.vertex_label(c.vertex_map[v]);
  }
  return f;
}

RationalVector embed_vertices(const Hypergraph& h, const RationalVector& x) {
  const auto n = static_cast<Eigen::Index>(h.num_vertices());
  const auto m = static_cast<Eigen::Index>(h.num_edges());
  if (x.size() != n) throw Error(ErrorCode::DimensionMismatch, "vertex vector length");
  RationalVector out = RationalVector::Constant(n + m, Rational(0));
  out.head(n) = x;
  return out;
}

RationalVector embed_hyperedges(const Hypergraph& h, const RationalVector& y) {
  const auto n = static_cast<Eigen::Index>(h.num_vertices());
  const auto m = static_cast<Eigen::Index>(h.num_edges());
  if (y.size() != m) throw Error(ErrorCode::DimensionMismatch, "hyperedge vector length");
  RationalVector out = RationalVector::Constant(n + m, Rational(0));
  out.tail(m) = y;
  return out;
}

RationalVector indicator_difference(const Hypergraph& h, const std::vector<std::string>& u,
                                    const std::vector<std::string>& v) {
  RationalVector x = RationalVector::Constant(static_cast<Eigen::Index>(h.num_vertices()), Rational(0));
  for (auto i : resolve_vertices(h, u)) x(static_cast<Eigen::Index>(i)) += 1;
  for (auto i : resolve_vertices(h, v)) x(static_cast<Eigen::Index>(i)) -= 1;
  return x;
}

}  // namespace hyperlin
