#include "hyperlin/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "hyperlin/error.hpp"

namespace hyperlin {

Hypergraph::Hypergraph(std::vector<std::string> vertices, const std::vector<Hyperedge>& edges)
    : vertices_(std::move(vertices)) {
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    if (!vertex_index_.emplace(vertices_[v], v).second) {
      throw Error(ErrorCode::DuplicateLabel, "duplicate vertex '" + vertices_[v] + "'");
    }
  }
  stars_.resize(vertices_.size());
  std::map<std::vector<std::size_t>, std::string> seen_sets;
  for (const auto& e : edges) {
    if (!edge_index_.emplace(e.label, edge_labels_.size()).second) {
      throw Error(ErrorCode::DuplicateLabel, "duplicate hyperedge '" + e.label + "'");
    }
    if (e.members.empty()) {
      throw Error(ErrorCode::EmptyHyperedge, "hyperedge '" + e.label + "' has no members");
    }
    std::vector<std::size_t> ids;
    ids.reserve(e.members.size());
    for (const auto& m : e.members) {
      auto it = vertex_index_.find(m);
      if (it == vertex_index_.end()) {
        throw Error(ErrorCode::UnknownVertex,
                    "hyperedge '" + e.label + "' references undeclared vertex '" + m + "'");
      }
      ids.push_back(it->second);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    auto [pos, inserted] = seen_sets.emplace(ids, e.label);
    if (!inserted) {
      throw Error(ErrorCode::DuplicateHyperedgeSet,
                  "hyperedges '" + pos->second + "' and '" + e.label + "' have equal members");
    }
    const std::size_t idx = edge_labels_.size();
    for (auto v : ids) stars_[v].push_back(idx);
    edge_labels_.push_back(e.label);
    members_.push_back(std::move(ids));
  }
}

std::optional<std::size_t> Hypergraph::find_vertex(std::string_view label) const {
  auto it = vertex_index_.find(std::string(label));
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Hypergraph::find_edge(std::string_view label) const {
  auto it = edge_index_.find(std::string(label));
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Hypergraph::vertex_index(std::string_view label) const {
  if (auto v = find_vertex(label)) return *v;
  throw Error(ErrorCode::UnknownVertex, "no vertex '" + std::string(label) + "'");
}

std::size_t Hypergraph::edge_index(std::string_view label) const {
  if (auto e = find_edge(label)) return *e;
  throw Error(ErrorCode::UnknownLabel, "no hyperedge '" + std::string(label) + "'");
}

bool Hypergraph::contains(std::size_t e, std::size_t v) const {
  return std::binary_search(members_[e].begin(), members_[e].end(), v);
}

std::vector<std::string> Hypergraph::members(std::size_t e) const {
  std::vector<std::string> out;
  out.reserve(members_[e].size());
  for (auto v : members_[e]) out.push_back(vertices_[v]);
  return out;
}

std::vector<Hyperedge> Hypergraph::hyperedges() const {
  std::vector<Hyperedge> out;
  out.reserve(num_edges());
  for (std::size_t e = 0; e < num_edges(); ++e) out.push_back({edge_labels_[e], members(e)});
  return out;
}

std::optional<std::size_t> Hypergraph::find_edge_by_members(
    const std::vector<std::size_t>& sorted) const {
  if (sorted.empty()) return std::nullopt;
  // Every candidate contains sorted.front(); scan only its star.
  for (auto e : stars_[sorted.front()]) {
    if (members_[e] == sorted) return e;
  }
  return std::nullopt;
}

namespace {

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

Hypergraph parse_lines(std::string_view text) {
  std::vector<std::string> vertices;
  std::unordered_map<std::string, bool> known;
  auto declare = [&](const std::string& v) {
    if (known.emplace(v, true).second) vertices.push_back(v);
  };
  std::vector<Hyperedge> edges;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto nl = text.find('\n', start);
    const auto raw = text.substr(start, nl == std::string_view::npos ? text.npos : nl - start);
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    const auto line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      constexpr std::string_view header = "#vertices:";
      if (line.substr(0, header.size()) == header) {
        for (auto& v : split_ws(line.substr(header.size()))) declare(v);
      }
      continue;
    }
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw Error(ErrorCode::SyntaxError,
                  "line " + std::to_string(line_no) + ": expected 'label: members'");
    }
    const auto label = trim(line.substr(0, colon));
    if (label.empty() || label.find_first_of(" \t") != std::string_view::npos) {
      throw Error(ErrorCode::SyntaxError,
                  "line " + std::to_string(line_no) + ": malformed hyperedge label");
    }
    Hyperedge e{std::string(label), split_ws(line.substr(colon + 1))};
    for (const auto& m : e.members) declare(m);
    edges.push_back(std::move(e));
  }
  return Hypergraph(std::move(vertices), edges);
}

}  // namespace

Hypergraph parse_json(const nlohmann::ordered_json& j) {
  try {
    if (!j.is_object()) throw Error(ErrorCode::SyntaxError, "top level must be an object");
    auto vertices = j.at("vertices").get<std::vector<std::string>>();
    std::vector<Hyperedge> edges;
    const auto& hedges = j.at("hyperedges");
    if (!hedges.is_object()) throw Error(ErrorCode::SyntaxError, "'hyperedges' must be an object");
    for (const auto& [label, members] : hedges.items()) {
      edges.push_back({label, members.get<std::vector<std::string>>()});
    }
    return Hypergraph(std::move(vertices), edges);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::SyntaxError, std::string("hypergraph JSON: ") + e.what());
  }
}

Hypergraph parse(std::string_view text, InputFormat format) {
  if (format == InputFormat::Lines) return parse_lines(text);
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::SyntaxError, e.what());
  }
  return parse_json(j);
}

nlohmann::ordered_json to_json(const Hypergraph& h) {
  nlohmann::ordered_json j;
  j["vertices"] = h.vertex_labels();
  nlohmann::ordered_json edges = nlohmann::ordered_json::object();
  for (std::size_t e = 0; e < h.num_edges(); ++e) edges[h.edge_label(e)] = h.members(e);
  j["hyperedges"] = std::move(edges);
  return j;
}

std::string serialize(const Hypergraph& h) { return to_json(h).dump(2) + "\n"; }

std::vector<std::string> star(const Hypergraph& h, std::string_view vertex) {
  std::vector<std::string> out;
  for (auto e : h.star_of(h.vertex_index(vertex))) out.push_back(h.edge_label(e));
  return out;
}

RationalMatrix incidence_matrix(const Hypergraph& h) {
  RationalDense m = RationalDense::Constant(static_cast<Eigen::Index>(h.num_vertices()),
                                            static_cast<Eigen::Index>(h.num_edges()), Rational(0));
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    for (auto v : h.edge(e)) m(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(e)) = 1;
  }
  return RationalMatrix(std::move(m), h.vertex_labels(), h.edge_labels());
}

std::string set_label(const std::vector<std::string>& members) {
  std::string out = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out += ',';
    out += members[i];
  }
  return out + "}";
}

Hypergraph dual(const Hypergraph& h) {
  std::map<std::vector<std::size_t>, std::vector<std::string>> by_star;
  std::vector<std::vector<std::size_t>> order;
  for (std::size_t v = 0; v < h.num_vertices(); ++v) {
    const auto& s = h.star_of(v);
    if (s.empty()) {
      throw Error(ErrorCode::EmptyStar, "vertex '" + h.vertex_label(v) + "' has an empty star");
    }
    auto [it, inserted] = by_star.try_emplace(s);
    if (inserted) order.push_back(s);
    it->second.push_back(h.vertex_label(v));
  }
  std::vector<Hyperedge> edges;
  for (const auto& s : order) {
    Hyperedge e{set_label(by_star[s]), {}};
    for (auto idx : s) e.members.push_back(h.edge_label(idx));
    edges.push_back(std::move(e));
  }
  return Hypergraph(h.edge_labels(), edges);
}

IncidenceGraph incidence_graph(const Hypergraph& h) {
  IncidenceGraph g{h.vertex_labels(), h.edge_labels(), {}};
  for (std::size_t v = 0; v < h.num_vertices(); ++v) {
    for (auto e : h.star_of(v)) g.edges.emplace_back(v, e);
  }
  return g;
}

RationalMatrix incidence_graph_adjacency(const Hypergraph& h) {
  const auto n = static_cast<Eigen::Index>(h.num_vertices());
  const auto m = static_cast<Eigen::Index>(h.num_edges());
  const RationalMatrix inc = incidence_matrix(h);
  RationalDense a = RationalDense::Constant(n + m, n + m, Rational(0));
  a.topRightCorner(n, m) = inc.values;
  a.bottomLeftCorner(m, n) = inc.values.transpose();
  std::vector<std::string> labels = h.vertex_labels();
  labels.insert(labels.end(), h.edge_labels().begin(), h.edge_labels().end());
  if (std::set<std::string>(labels.begin(), labels.end()).size() != labels.size()) {
    // A vertex and a hyperedge share a name; keep the node sets apart.
    for (Eigen::Index i = 0; i < n + m; ++i) {
      labels[static_cast<std::size_t>(i)] = (i < n ? "v:" : "e:") + labels[static_cast<std::size_t>(i)];
    }
  }
  return RationalMatrix(std::move(a), labels, labels);
}

}  // namespace hyperlin
