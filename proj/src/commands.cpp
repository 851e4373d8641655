#include "hyperlin/commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include <openssl/evp.h>

#include <CLI11.hpp>

#include "hyperlin/centrality.hpp"
#include "hyperlin/dot.hpp"
#include "hyperlin/error.hpp"
#include "hyperlin/linalg.hpp"
#include "hyperlin/randwalk.hpp"
#include "hyperlin/spectra.hpp"
#include "hyperlin/structures.hpp"

namespace hyperlin {

using json = nlohmann::ordered_json;

std::string input_digest(const Hypergraph& h) {
  const std::string text = serialize(h);
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr);
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) {
    hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  }
  return "sha256:" + hex.str();
}

namespace {

json labeled(const std::vector<std::string>& labels, const RationalVector& v) {
  json j = json::object();
  for (std::size_t i = 0; i < labels.size(); ++i) j[labels[i]] = v(static_cast<Eigen::Index>(i)).str();
  return j;
}

struct Outcome {
  std::string status;
  json witness = json::object();
};

Outcome verdict(bool ok, json witness = json::object()) {
  return {ok ? "pass" : "fail", std::move(witness)};
}

Outcome not_applicable(const std::string& reason) {
  return {"not-applicable", {{"reason", reason}}};
}

RationalVector unit_pair_vector(const Hypergraph& h, const Unit& u) {
  RationalVector x = RationalVector::Constant(static_cast<Eigen::Index>(h.num_vertices()), Rational(0));
  x(static_cast<Eigen::Index>(h.vertex_index(u.members[0]))) = 1;
  x(static_cast<Eigen::Index>(h.vertex_index(u.members[1]))) = -1;
  return x;
}

SpectrumOptions grouping(double tol) {
  SpectrumOptions o;
  o.group_tol = tol;
  return o;
}

PerronOptions power_tolerance(double tol) {
  PerronOptions o;
  o.tol = tol;
  return o;
}

bool constant_on_units(const UnitDecomposition& d, const std::vector<Rational>& values) {
  for (std::size_t v = 0; v < values.size(); ++v) {
    for (std::size_t u = 0; u < v; ++u) {
      if (d.unit_of_vertex[u] == d.unit_of_vertex[v] && values[u] != values[v]) return false;
    }
  }
  return true;
}

}  // namespace

json theorem_checks(const Hypergraph& h, double tol) {
  json checks = json::array();
  auto run = [&](const char* name, auto&& body) {
    Outcome o;
    try {
      o = body();
    } catch (const Error& e) {
      o = not_applicable(e.what());
    }
    checks.push_back({{"name", name}, {"status", o.status}, {"witness", std::move(o.witness)}});
  };

  const auto n = static_cast<long>(h.num_vertices());
  const auto m = static_cast<long>(h.num_edges());
  const RationalMatrix inc = incidence_matrix(h);
  const RationalMatrix agh = build_A_GH(h);
  const long rank_i = rank(inc.values);
  const long nullity_agh = (n + m) - rank(agh.values);
  const auto vertex_cert = dependent_vertices(h);
  const auto edge_cert = dependent_hyperedges(h);
  const UnitDecomposition decomposition = units(h);
  const std::size_t partition_cap = std::min<std::size_t>(8, h.num_vertices());

  run("rank_equality", [&] {
    const long rank_t = rank(inc.values.transpose());
    return verdict(rank_i == rank_t, {{"rank_I", rank_i}, {"rank_I_T", rank_t}});
  });
  run("nullity_block_identity", [&] {
    return verdict(nullity_agh == (m - rank_i) + (n - rank_i),
                   {{"nullity_A_GH", nullity_agh}, {"nullity_I", m - rank_i}, {"nullity_I_T", n - rank_i}});
  });
  run("nullity_lower_bound", [&] {
    return verdict(nullity_agh >= std::labs(n - m), {{"nullity_A_GH", nullity_agh}, {"bound", std::labs(n - m)}});
  });
  run("zero_eigenvalue_dependence", [&] {
    const bool dependent = vertex_cert.has_value() || edge_cert.has_value();
    return verdict((nullity_agh > 0) == dependent,
                   {{"nullity_A_GH", nullity_agh}, {"dependent", dependent}});
  });
  run("square_nonsingularity", [&] {
    if (n != m) return not_applicable("|V| != |E|");
    const Rational det = determinant(inc.values);
    return verdict((nullity_agh == 0) == !det.is_zero(), {{"det_I", det.str()}, {"nullity_A_GH", nullity_agh}});
  });
  run("certificate_soundness", [&] {
    bool ok = true;
    json w = json::object();
    if (vertex_cert) {
      ok = ok && is_sound(h, *vertex_cert);
      w["vertices"] = vertex_cert->support;
    }
    if (edge_cert) {
      ok = ok && is_sound(h, *edge_cert);
      w["hyperedges"] = edge_cert->support;
    }
    if (!vertex_cert && !edge_cert) return not_applicable("no dependence");
    return verdict(ok, std::move(w));
  });
  run("agh_zero_eigenvalue", [&] {
    const Spectrum s = spectrum(h, MatrixKind::AGH, make_weights(h, WeightPreset::Unit), grouping(tol));
    const int zero = s.multiplicity_of(0.0);
    return verdict(zero == nullity_agh, {{"float_multiplicity", zero}, {"nullity_A_GH", nullity_agh}});
  });
  run("agh_spectrum_symmetric", [&] {
    const Spectrum s = spectrum(h, MatrixKind::AGH, make_weights(h, WeightPreset::Unit), grouping(tol));
    const Eigen::Index k = s.values.size();
    double worst = 0;
    for (Eigen::Index i = 0; i < k; ++i) worst = std::max(worst, std::abs(s.values(i) + s.values(k - 1 - i)));
    return verdict(worst <= tol, {{"max_asymmetry", worst}});
  });
  run("units_sound", [&] {
    std::size_t total = 0;
    bool ok = true;
    for (const auto& u : decomposition.units) {
      total += u.members.size();
      for (const auto& v : u.members) ok = ok && star(h, v) == u.generator;
      if (u.members.size() >= 2) ok = ok && verify_unit_maximality(h, u.members);
    }
    return verdict(ok && total == h.num_vertices(), {{"units", decomposition.size()}});
  });
  run("contraction_edge_bijection", [&] {
    const ContractionMap c = unit_contraction(h);
    std::vector<std::size_t> image = c.edge_map;
    std::sort(image.begin(), image.end());
    const bool ok = c.contracted.num_edges() == h.num_edges() &&
                    std::adjacent_find(image.begin(), image.end()) == image.end();
    return verdict(ok, {{"contracted_vertices", c.contracted.num_vertices()},
                        {"contracted_hyperedges", c.contracted.num_edges()}});
  });
  run("contraction_covering", [&] {
    const ContractionMap c = unit_contraction(h);
    const auto cls = verify_covering_projection(h, c.contracted, contraction_vertex_map(h, c));
    const bool ok = cls == ProjectionClass::Covering || cls == ProjectionClass::CardinalityPreservingCovering;
    return verdict(ok, {{"class", to_string(cls)}});
  });
  run("contraction_lift", [&] {
    const ContractionMap c = unit_contraction(h);
    const auto basis = nullspace_vectors(incidence_graph_adjacency(c.contracted).values);
    bool ok = true;
    for (const auto& z : basis) {
      ok = ok && is_exactly_zero(agh.values * contraction_nullspace_lift(h, z).values);
    }
    return verdict(ok, {{"lifted_vectors", basis.size()}});
  });
  run("unit_singularity_removal", [&] {
    long excess = 0;
    for (const auto& u : decomposition.units) excess += static_cast<long>(u.members.size()) - 1;
    if (nullity_agh != excess) return not_applicable("nullity differs from the unit excess");
    const ContractionMap c = unit_contraction(h);
    const Rational det = determinant(incidence_graph_adjacency(c.contracted).values);
    return verdict(!det.is_zero() && decomposition.size() == h.num_edges(),
                   {{"det_A_G_contracted", det.str()}, {"units", decomposition.size()}});
  });
  run("q_annihilation", [&] {
    if (!vertex_cert) return not_applicable("vertices are independent");
    json w = json::object();
    bool ok = true;
    for (auto p : {WeightPreset::Unit, WeightPreset::EdgeNormalized, WeightPreset::FullyNormalized}) {
      try {
        const bool zero = verify_Q_annihilation(h, make_weights(h, p), *vertex_cert);
        ok = ok && zero;
        w[std::string(to_string(p))] = zero;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::WeightDomainMismatch) throw;
        w[std::string(to_string(p))] = "not-applicable";
      }
    }
    return verdict(ok, std::move(w));
  });
  run("unit_adjacency_eigenvalues", [&] {
    const WeightScheme unit = make_weights(h, WeightPreset::Unit);
    const Spectrum s = spectrum(h, MatrixKind::A, unit, grouping(tol));
    json w = json::array();
    bool ok = true;
    for (const auto& u : decomposition.units) {
      if (u.members.size() < 2) continue;
      const Certificate c(CertificateKind::UnitWitness, h.vertex_labels(), unit_pair_vector(h, u),
                          Annihilator::IncidenceTransposed);
      const auto ev = verify_A_eigenvalue(h, unit, c);
      const Rational expected(-static_cast<long>(u.generator.size()));
      const bool found = ev && *ev == expected && s.contains(expected.to_double());
      ok = ok && found;
      w.push_back({{"unit", set_label(u.members)}, {"eigenvalue", expected.str()}, {"in_spectrum", found}});
    }
    if (w.empty()) return not_applicable("no unit with two or more members");
    return verdict(ok, std::move(w));
  });
  const auto partitions = find_equal_edge_partitions(h, partition_cap);
  run("equal_partition_nullspace", [&] {
    if (partitions.empty()) return not_applicable("no equal partition within the support cap");
    bool ok = true;
    for (const auto& p : partitions) {
      const bool counted = verify_equal_edge_partition(h, p.u, p.v).holds;
      const bool annihilated = is_exactly_zero(inc.values.transpose() * indicator_difference(h, p.u, p.v));
      ok = ok && counted && annihilated;
    }
    return verdict(ok, {{"partitions", partitions.size()}, {"max_support", partition_cap}});
  });
  run("partition_transition", [&] {
    if (partitions.empty()) return not_applicable("no equal partition within the support cap");
    const TransitionMatrix t = transition_matrix(h, WalkPolicy::non_lazy());
    bool ok = true;
    for (const auto& p : partitions) ok = ok && verify_partition_transition(t, p.u, p.v);
    return verdict(ok, {{"partitions", partitions.size()}});
  });
  run("walk_row_stochastic", [&] {
    bool ok = true;
    json w = json::object();
    for (auto policy : {WalkPolicy::non_lazy(), WalkPolicy::lazy()}) {
      try {
        const TransitionMatrix t = transition_matrix(h, policy);
        bool rows = true;
        for (Eigen::Index i = 0; i < t.p.rows(); ++i) rows = rows && t.p.values.row(i).sum() == Rational(1);
        ok = ok && rows;
        w[std::string(to_string(policy.kind))] = rows;
      } catch (const Error& e) {
        if (e.code() == ErrorCode::IsolatedVertex) throw;
        w[std::string(to_string(policy.kind))] = "not-applicable";
      }
    }
    return verdict(ok, std::move(w));
  });
  run("walk_unit_symmetry", [&] {
    const TransitionMatrix t = transition_matrix(h, WalkPolicy::non_lazy());
    bool ok = true, any = false;
    for (const auto& u : decomposition.units) {
      if (u.members.size() < 2) continue;
      any = true;
      const auto a = static_cast<Eigen::Index>(h.vertex_index(u.members[0]));
      for (std::size_t k = 1; k < u.members.size(); ++k) {
        const auto b = static_cast<Eigen::Index>(h.vertex_index(u.members[k]));
        for (Eigen::Index w = 0; w < t.p.rows(); ++w) {
          if (w == a || w == b) continue;
          ok = ok && t.p(w, a) == t.p(w, b) && t.p(a, w) == t.p(b, w);
        }
      }
    }
    if (!any) return not_applicable("no unit with two or more members");
    return verdict(ok);
  });
  run("hitting_unit_symmetry", [&] {
    const TransitionMatrix t = transition_matrix(h, WalkPolicy::non_lazy());
    bool ok = true;
    json w = json::array();
    for (const auto& u : decomposition.units) {
      if (u.members.size() < 2) continue;
      const auto a = static_cast<Eigen::Index>(h.vertex_index(u.members[0]));
      const auto b = static_cast<Eigen::Index>(h.vertex_index(u.members[1]));
      const auto to_a = hitting_times(t.p, u.members[0]);
      const auto to_b = hitting_times(t.p, u.members[1]);
      bool pair = to_a.values(b) == to_b.values(a);
      for (Eigen::Index x = 0; x < t.p.rows(); ++x) {
        if (x != a && x != b) pair = pair && to_a.values(x) == to_b.values(x);
      }
      ok = ok && pair;
      w.push_back({{"pair", {u.members[0], u.members[1]}}, {"mutual", to_a.values(b).str()}, {"symmetric", pair}});
    }
    if (w.empty()) return not_applicable("no unit with two or more members");
    return verdict(ok, std::move(w));
  });
  run("closeness_unit_constancy", [&] {
    const CentralityReport r = rw_closeness(h, WalkPolicy::non_lazy());
    return verdict(constant_on_units(decomposition, *r.exact));
  });
  return checks;
}

namespace {

struct CommonArgs {
  std::string file;
  std::string format = "auto";
};

std::string read_input(const std::string& path) {
  namespace fs = std::filesystem;
  std::vector<fs::path> candidates{path};
  if (const char* dir = std::getenv("HYPERLIN_FIXTURES")) {
    candidates.emplace_back(fs::path(dir) / path);
    candidates.emplace_back(fs::path(dir) / fs::path(path).filename());
  }
  for (const auto& c : candidates) {
    std::error_code ec;
    if (!fs::is_regular_file(c, ec)) continue;
    std::ifstream in(c, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.good() || in.eof()) return buf.str();
  }
  throw Error(ErrorCode::IoError, "cannot read input file '" + path + "'");
}

Hypergraph load(const CommonArgs& a) {
  InputFormat fmt = InputFormat::Lines;
  if (a.format == "json" || (a.format == "auto" && a.file.ends_with(".json"))) fmt = InputFormat::Json;
  return parse(read_input(a.file), fmt);
}

json report(const Hypergraph& h, const std::string& command, json parameters, json results,
            json checks = json::array()) {
  json j;
  j["input_digest"] = input_digest(h);
  j["command"] = command;
  j["parameters"] = std::move(parameters);
  j["results"] = std::move(results);
  j["theorem_checks"] = std::move(checks);
  return j;
}

json certificate_or_null(const std::optional<Certificate>& c) {
  return c ? to_json(*c) : json(nullptr);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Linear dependence, spectra, walks and centralities of finite hypergraphs", "hyperlin"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "hyperlin 0.1.0");

  CommonArgs common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", common.file, "Hypergraph file (.json or lines format)")->required();
    sub->add_option("--format", common.format, "Input format")
        ->check(CLI::IsMember({"auto", "json", "lines"}));
  };

  std::string axis = "vertices";
  std::vector<std::string> set;
  std::size_t max_support = 8;
  std::string matrix = "A_GH";
  std::string weights = "unit";
  bool det = false;
  double tol = 1e-8;
  std::string policy = "nonlazy";
  std::size_t steps = 10;
  std::uint64_t seed = 0;
  std::size_t trajectories = 1000;
  std::string from;
  std::string target;
  bool no_return = false;
  std::string kind;
  std::size_t horizon = 10;
  double perron_tol = 1e-12;
  std::string which = "incidence";

  auto* units_cmd = app.add_subcommand("units", "Unit decomposition");
  add_common(units_cmd);
  auto* contract_cmd = app.add_subcommand("contract", "Unit contraction");
  add_common(contract_cmd);
  auto* nullspace_cmd = app.add_subcommand("nullspace", "Null space basis and canonical certificate");
  add_common(nullspace_cmd);
  nullspace_cmd->add_option("--axis", axis)->check(CLI::IsMember({"vertices", "hyperedges", "agh"}));
  auto* certify_cmd = app.add_subcommand("certify", "Dependence certificate inside a given set");
  add_common(certify_cmd);
  certify_cmd->add_option("--set", set, "Comma separated labels")->delimiter(',')->required();
  certify_cmd->add_option("--axis", axis)->check(CLI::IsMember({"vertices", "hyperedges"}));
  auto* partitions_cmd = app.add_subcommand("partitions", "Equal partitions of hyperedges");
  add_common(partitions_cmd);
  partitions_cmd->add_option("--max-support", max_support);
  auto* spectra_cmd = app.add_subcommand("spectra", "Exact matrix, float spectrum, determinant");
  add_common(spectra_cmd);
  spectra_cmd->add_option("--matrix", matrix)
      ->check(CLI::IsMember({"I", "Q", "A", "L", "D", "K", "AGH", "A_GH"}));
  spectra_cmd->add_option("--weights", weights)->check(CLI::IsMember({"unit", "edgenorm", "fullnorm"}));
  spectra_cmd->add_flag("--det", det, "Exact determinant");
  spectra_cmd->add_option("--tol", tol, "Eigenvalue grouping tolerance")->check(CLI::NonNegativeNumber);
  auto* walk_cmd = app.add_subcommand("walk", "Transition matrix, distributions, simulation");
  add_common(walk_cmd);
  walk_cmd->add_option("--policy", policy)->check(CLI::IsMember({"nonlazy", "lazy"}));
  walk_cmd->add_option("--steps", steps);
  walk_cmd->add_option("--seed", seed);
  walk_cmd->add_option("--trajectories", trajectories);
  walk_cmd->add_option("--from", from, "Start vertex (default: first vertex)");
  walk_cmd->add_option("--target", target, "Vertex whose first hit is tracked");
  auto* hitting_cmd = app.add_subcommand("hitting", "Exact expected hitting times");
  add_common(hitting_cmd);
  hitting_cmd->add_option("--policy", policy)->check(CLI::IsMember({"nonlazy", "lazy"}));
  hitting_cmd->add_option("--target", target)->required();
  hitting_cmd->add_flag("--no-return", no_return, "Report 0 at the target instead of the return time");
  auto* centrality_cmd = app.add_subcommand("centrality", "Vertex centralities");
  add_common(centrality_cmd);
  centrality_cmd->add_option("--kind", kind)
      ->required()
      ->check(CLI::IsMember({"rw-closeness", "rw-betweenness", "unit-closeness", "unit-eccentricity", "perron"}));
  centrality_cmd->add_option("--policy", policy)->check(CLI::IsMember({"nonlazy", "lazy"}));
  centrality_cmd->add_option("--horizon", horizon);
  centrality_cmd->add_option("--tol", perron_tol, "Power iteration tolerance")->check(CLI::NonNegativeNumber);
  auto* check_cmd = app.add_subcommand("check", "Run every applicable theorem check");
  add_common(check_cmd);
  check_cmd->add_option("--tol", tol, "Float comparison tolerance")->check(CLI::NonNegativeNumber);
  auto* dot_cmd = app.add_subcommand("dot", "Graphviz export");
  add_common(dot_cmd);
  dot_cmd->add_option("--which", which)->check(CLI::IsMember({"incidence", "contraction", "projection"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    const Hypergraph h = load(common);
    auto emit = [&](const json& j) { out << j.dump(2) << "\n"; };

    if (units_cmd->parsed()) {
      const auto d = units(h);
      emit(report(h, "units", json::object(), {{"count", d.size()}, {"units", to_json(d)}}));
    } else if (contract_cmd->parsed()) {
      const ContractionMap c = unit_contraction(h);
      json vmap = json::object();
      for (const auto& [k, v] : contraction_vertex_map(h, c)) vmap[k] = v;
      json vertex_map = json::object();
      for (const auto& v : h.vertex_labels()) vertex_map[v] = vmap[v];
      emit(report(h, "contract", json::object(),
                  {{"contracted", to_json(c.contracted)},
                   {"vertex_map", std::move(vertex_map)},
                   {"units", to_json(c.decomposition)}}));
    } else if (nullspace_cmd->parsed()) {
      RationalMatrix mat;
      std::string annihilator;
      std::optional<Certificate> cert;
      if (axis == "vertices") {
        mat = incidence_matrix(h).transpose();
        annihilator = "I_H^T";
        cert = dependent_vertices(h);
      } else if (axis == "hyperedges") {
        mat = incidence_matrix(h);
        annihilator = "I_H";
        cert = dependent_hyperedges(h);
      } else {
        mat = build_A_GH(h);
        annihilator = "A_GH";
      }
      const NullspaceBasis basis = nullspace(mat);
      json vectors = json::array();
      for (const auto& v : basis.vectors) vectors.push_back(labeled(basis.ambient_labels, v));
      json results = {{"annihilator", annihilator},
                      {"dimension", basis.dimension()},
                      {"basis", std::move(vectors)}};
      if (axis != "agh") results["certificate"] = certificate_or_null(cert);
      emit(report(h, "nullspace", {{"axis", axis}}, std::move(results)));
    } else if (certify_cmd->parsed()) {
      const auto cert = is_dependent_set(h, set, axis == "vertices" ? Axis::Vertices : Axis::Hyperedges);
      emit(report(h, "certify", {{"axis", axis}, {"set", set}},
                  {{"dependent", cert.has_value()}, {"certificate", certificate_or_null(cert)}}));
    } else if (partitions_cmd->parsed()) {
      const auto found = find_equal_edge_partitions(h, max_support);
      json list = json::array();
      for (const auto& p : found) list.push_back({{"U", p.u}, {"V", p.v}});
      emit(report(h, "partitions", {{"max_support", max_support}},
                  {{"count", found.size()}, {"partitions", std::move(list)}}));
    } else if (spectra_cmd->parsed()) {
      const MatrixKind mk = parse_matrix_kind(matrix);
      const WeightScheme w = mk == MatrixKind::I || mk == MatrixKind::AGH
                                 ? make_weights(h, WeightPreset::Unit)
                                 : make_weights(h, parse_weight_preset(weights));
      const RationalMatrix mat = build_matrix(h, mk, w);
      json results = {{"matrix", to_json(mat)}};
      if (det) results["determinant"] = determinant(mat.values).str();
      if (mk != MatrixKind::I) results["spectrum"] = to_json(spectrum(h, mk, w, grouping(tol)));
      emit(report(h, "spectra",
                  {{"matrix", to_string(mk)}, {"weights", w.name}, {"det", det}, {"tol", tol}},
                  std::move(results)));
    } else if (walk_cmd->parsed()) {
      const TransitionMatrix t = transition_matrix(h, parse_policy(policy));
      const std::string start = from.empty() ? h.vertex_label(0) : from;
      const RationalVector init = point_mass(t.p, start);
      SimulationOptions opts;
      opts.steps = steps;
      opts.trajectories = trajectories;
      opts.seed = seed;
      if (!target.empty()) opts.target = target;
      json results = {{"transition", to_json(t.p)},
                      {"distribution", labeled(t.p.row_labels, step_distribution(t.p, init, steps))}};
      if (!target.empty()) {
        json probs = json::array();
        if (steps > 0) {
          for (const auto& q : first_hit_probabilities(t.p, init, target, steps)) probs.push_back(q.str());
        }
        results["first_hit_probabilities"] = std::move(probs);
        const auto times = hitting_times(t.p, target);
        results["expected_hitting_time"] =
            times.values(static_cast<Eigen::Index>(h.vertex_index(start))).str();
      }
      results["simulation"] = to_json(simulate(t.p, init, opts), t.p.row_labels);
      json params = {{"policy", policy}, {"steps", steps}, {"seed", seed},
                     {"trajectories", trajectories}, {"from", start}};
      if (!target.empty()) params["target"] = target;
      emit(report(h, "walk", std::move(params), std::move(results)));
    } else if (hitting_cmd->parsed()) {
      const TransitionMatrix t = transition_matrix(h, parse_policy(policy));
      const auto times = hitting_times(t.p, target, !no_return);
      json floats = json::object();
      for (std::size_t i = 0; i < times.labels.size(); ++i) {
        floats[times.labels[i]] = times.values(static_cast<Eigen::Index>(i)).to_double();
      }
      emit(report(h, "hitting", {{"policy", policy}, {"target", target}, {"first_return", !no_return}},
                  {{"times", labeled(times.labels, times.values)}, {"times_float", std::move(floats)}}));
    } else if (centrality_cmd->parsed()) {
      CentralityReport r;
      json params = {{"kind", kind}};
      switch (parse_centrality_kind(kind)) {
        case CentralityKind::RWCloseness:
          r = rw_closeness(h, parse_policy(policy));
          params["policy"] = policy;
          break;
        case CentralityKind::RWBetweenness:
          r = rw_betweenness(h, parse_policy(policy), horizon);
          params["policy"] = policy;
          params["horizon"] = horizon;
          break;
        case CentralityKind::UnitCloseness:
          r = unit_closeness(h);
          break;
        case CentralityKind::UnitEccentricity:
          r = unit_eccentricity(h);
          break;
        case CentralityKind::Perron:
          r = perron_centrality(h, power_tolerance(perron_tol));
          params["tol"] = perron_tol;
          break;
      }
      json results = to_json(r);
      results["c_center"] = c_center(r, 10 * perron_tol);
      emit(report(h, "centrality", std::move(params), std::move(results)));
    } else if (check_cmd->parsed()) {
      json checks = theorem_checks(h, tol);
      const bool failed = std::any_of(checks.begin(), checks.end(),
                                      [](const json& c) { return c["status"] == "fail"; });
      const RationalMatrix agh = build_A_GH(h);
      const auto size = static_cast<long>(h.num_vertices() + h.num_edges());
      json results = {{"vertices", h.num_vertices()},
                      {"hyperedges", h.num_edges()},
                      {"rank_I", rank(incidence_matrix(h).values)},
                      {"nullity_A_GH", size - rank(agh.values)},
                      {"units", units(h).size()},
                      {"passed", !failed}};
      emit(report(h, "check", {{"tol", tol}}, std::move(results), std::move(checks)));
      if (failed) {
        err << "hyperlin: theorem check failed\n";
        return kExitCheckFailed;
      }
    } else if (dot_cmd->parsed()) {
      if (which == "incidence") out << incidence_graph_dot(h);
      if (which == "contraction") out << contraction_dot(h);
      if (which == "projection") out << projection_dot(h);
    }
  } catch (const Error& e) {
    err << "hyperlin: " << e.what() << "\n";
    return is_input_error(e.code()) ? kExitInput : kExitPrecondition;
  }
  return kExitOk;
}

}  // namespace hyperlin
