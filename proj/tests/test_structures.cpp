#include <random>

#include <doctest.h>

#include "hyperlin/structures.hpp"
#include "support/testing.hpp"

using namespace hyperlin;
using hyperlin::testing::fixture;
using hyperlin::testing::labels;
using hyperlin::testing::lines;
using hyperlin::testing::rvec;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::SyntaxError;
}

// All (U, V) with chi_U - chi_V in the left null space of I, enumerated over
// assignments {0, +1, -1} per vertex with the first nonzero fixed to +1.
std::vector<VertexPartition> brute_force_partitions(const Hypergraph& h, std::size_t max_support) {
  const std::size_t n = h.num_vertices();
  std::vector<VertexPartition> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  for (std::size_t code = 1; code < total; ++code) {
    std::vector<int> sign(n);
    std::size_t c = code;
    for (std::size_t i = 0; i < n; ++i) {
      sign[i] = static_cast<int>(c % 3) == 2 ? -1 : static_cast<int>(c % 3);
      c /= 3;
    }
    const auto first = std::find_if(sign.begin(), sign.end(), [](int s) { return s != 0; });
    if (*first != 1) continue;
    if (static_cast<std::size_t>(std::count_if(sign.begin(), sign.end(), [](int s) { return s != 0; })) >
        max_support)
      continue;
    bool ok = true;
    for (std::size_t e = 0; e < h.num_edges() && ok; ++e) {
      int sum = 0;
      for (std::size_t v = 0; v < n; ++v) {
        if (h.contains(e, v)) sum += sign[v];
      }
      ok = sum == 0;
    }
    if (!ok) continue;
    VertexPartition p;
    for (std::size_t v = 0; v < n; ++v) {
      if (sign[v] == 1) p.u.push_back(h.vertex_label(v));
      if (sign[v] == -1) p.v.push_back(h.vertex_label(v));
    }
    out.push_back(p);
  }
  return out;
}

bool same_partitions(std::vector<VertexPartition> a, std::vector<VertexPartition> b) {
  auto key = [](const VertexPartition& p) { return std::make_pair(p.u, p.v); };
  auto cmp = [&](const VertexPartition& x, const VertexPartition& y) { return key(x) < key(y); };
  std::sort(a.begin(), a.end(), cmp);
  std::sort(b.begin(), b.end(), cmp);
  return a == b;
}

}  // namespace

TEST_SUITE("structures") {
  TEST_CASE("dependent vertices and hyperedges of H_A") {
    const auto h = fixture("h_a");
    const auto dv = dependent_vertices(h);
    REQUIRE(dv);
    CHECK(dv->coefficients == rvec({1, -1, 1, -1, 0}));
    CHECK(dv->support == labels({"1", "2", "3", "4"}));
    CHECK(is_sound(h, *dv));

    const auto de = dependent_hyperedges(h);
    REQUIRE(de);
    CHECK(de->coefficients == rvec({1, -1, 1, -1, 0}));
    CHECK(de->annihilated_by == Annihilator::Incidence);
    CHECK(is_sound(h, *de));

    const auto subset = is_dependent_set(h, {"1", "2", "3", "4"}, Axis::Vertices);
    REQUIRE(subset);
    CHECK(subset->coefficients == rvec({1, -1, 1, -1, 0}));
    CHECK_FALSE(is_dependent_set(h, {"1", "2", "3"}, Axis::Vertices));
    CHECK_FALSE(is_dependent_set(h, {}, Axis::Hyperedges));
    CHECK(code_of([&] { is_dependent_set(h, {"nope"}, Axis::Vertices); }) == ErrorCode::UnknownLabel);
  }

  TEST_CASE("independent families") {
    CHECK_FALSE(dependent_vertices(lines("e1: a\ne2: a b")));
    CHECK_FALSE(dependent_hyperedges(lines("e1: a\ne2: a b")));
    CHECK_FALSE(dependent_hyperedges(lines("e1: a")));
    const auto single = dependent_vertices(lines("e1: a b"));
    REQUIRE(single);
    CHECK(single->coefficients == rvec({1, -1}));
  }

  TEST_CASE("certificate soundness rejects tampering") {
    const auto h = fixture("h_a");
    auto c = *dependent_vertices(h);
    c.coefficients(4) = Rational(1);
    CHECK_FALSE(is_sound(h, c));
    auto d = *dependent_vertices(h);
    d.support.pop_back();
    CHECK_FALSE(is_sound(h, d));
    auto e = *dependent_vertices(h);
    e.labels[0] = "x";
    CHECK_FALSE(is_sound(h, e));
  }

  TEST_CASE("certificate json") {
    const auto j = to_json(*dependent_vertices(fixture("h_a")));
    CHECK(j["kind"] == "DependentVertices");
    CHECK(j["support"].size() == 4);
  }

  TEST_CASE("units of H_units") {
    const auto h = fixture("h_units");
    const auto u = units(h);
    REQUIRE(u.size() == 6);
    CHECK(u.units[0].members == labels({"1", "2"}));
    CHECK(u.units[0].generator == labels({"e1", "e2"}));
    CHECK(u.units[1].members == labels({"3", "4"}));
    CHECK(u.units[1].generator == labels({"e2", "e3"}));
    CHECK(u.units[2].members == labels({"5", "6", "7"}));
    CHECK(u.units[2].generator == labels({"e1", "e4"}));
    CHECK(u.units[3].members == labels({"8", "9"}));
    CHECK(u.units[3].generator == labels({"e4", "e5"}));
    CHECK(u.units[4].members == labels({"10"}));
    CHECK(u.units[4].generator == labels({"e1", "e3", "e5"}));
    CHECK(u.units[5].members == labels({"11"}));
    CHECK(u.units[5].generator == labels({"e1", "e5"}));
    CHECK(u.unit_of_vertex[6] == 2);
    CHECK(to_json(u).size() == 6);
  }

  TEST_CASE("unit contraction of H_units") {
    const auto h = fixture("h_units");
    const auto c = unit_contraction(h);
    CHECK(c.contracted.num_vertices() == 6);
    CHECK(c.contracted.num_edges() == 5);
    CHECK(c.contracted.vertex_labels() == labels({"{1,2}", "{3,4}", "{5,6,7}", "{8,9}", "{10}", "{11}"}));
    CHECK(c.contracted.edge_labels() == h.edge_labels());
    CHECK(c.edge_map == std::vector<std::size_t>{0, 1, 2, 3, 4});
    CHECK(c.contracted.members(0) == labels({"{1,2}", "{5,6,7}", "{10}", "{11}"}));
    CHECK(c.contracted.members(3) == labels({"{5,6,7}", "{8,9}"}));
    CHECK(units(c.contracted).size() == 6);

    const auto f = contraction_vertex_map(h, c);
    CHECK(f.at("6") == "{5,6,7}");
    CHECK(verify_covering_projection(h, c.contracted, f) == ProjectionClass::Covering);
  }

  TEST_CASE("unit maximality") {
    const auto h = fixture("h_units");
    CHECK(verify_unit_maximality(h, {"5", "6", "7"}));
    CHECK(verify_unit_maximality(h, {"1", "2"}));
    CHECK_FALSE(verify_unit_maximality(h, {"5", "6"}));
    CHECK_FALSE(verify_unit_maximality(h, {"1", "3"}));
    CHECK(code_of([&] { verify_unit_maximality(h, {"1"}); }) == ErrorCode::TooSmall);
    CHECK(code_of([&] { verify_unit_maximality(h, {"1", "zz"}); }) == ErrorCode::UnknownLabel);
  }

  TEST_CASE("contraction nullspace lift") {
    const auto h = fixture("h_units");
    const auto c = unit_contraction(h);
    const auto small = incidence_graph_adjacency(c.contracted);
    const auto big = incidence_graph_adjacency(h);
    const auto basis = nullspace(small);
    for (const auto& z : basis.vectors) {
      const auto lifted = contraction_nullspace_lift(h, z);
      CHECK(lifted.labels == big.row_labels);
      CHECK(is_exactly_zero(big.values * lifted.values));
    }
    CHECK(code_of([&] { contraction_nullspace_lift(h, rvec({1, 2})); }) == ErrorCode::DimensionMismatch);
    RationalVector bad = RationalVector::Constant(small.cols(), Rational(0));
    bad(0) = Rational(1);
    CHECK(code_of([&] { contraction_nullspace_lift(h, bad); }) == ErrorCode::NotInNullspace);
  }

  TEST_CASE("equal edge partitions") {
    const auto h = fixture("h_a");
    const auto check = verify_equal_edge_partition(h, {"1", "3"}, {"2", "4"});
    CHECK(check.holds);
    CHECK(check.per_edge.size() == 5);
    CHECK(check.per_edge[0] == std::make_pair<std::size_t, std::size_t>(1, 1));
    CHECK_FALSE(verify_equal_edge_partition(h, {"1"}, {"2"}).holds);
    CHECK(code_of([&] { verify_equal_edge_partition(h, {"1", "2"}, {"2"}); }) == ErrorCode::NotDisjoint);

    const auto found = find_equal_edge_partitions(h);
    REQUIRE(found.size() == 1);
    CHECK(found[0].u == labels({"1", "3"}));
    CHECK(found[0].v == labels({"2", "4"}));

    const auto eq = find_equal_edge_partitions(fixture("h_eq"));
    REQUIRE_FALSE(eq.empty());
    CHECK(eq[0].u == labels({"1"}));
    CHECK(eq[0].v == labels({"5"}));
    CHECK(same_partitions(eq, brute_force_partitions(fixture("h_eq"), 8)));
  }

  TEST_CASE("partition search agrees with enumeration") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
      const auto h = testing::random_hypergraph(rng, 7, 6, 0.4);
      for (std::size_t budget : {2u, 4u, 7u}) {
        CAPTURE(serialize(h));
        CAPTURE(budget);
        const auto found = find_equal_edge_partitions(h, budget);
        CHECK(same_partitions(found, brute_force_partitions(h, budget)));
        for (const auto& p : found) CHECK(verify_equal_edge_partition(h, p.u, p.v).holds);
      }
    }
  }

  TEST_CASE("star partitions") {
    const auto h = lines("e1: a b\ne2: a c\ne3: d");
    CHECK(verify_star_partition(h, "a", {"b", "c"}));
    CHECK_FALSE(verify_star_partition(h, "a", {"b"}));
    CHECK_FALSE(verify_star_partition(h, "a", {"b", "d"}));
    CHECK(code_of([&] { verify_star_partition(h, "a", {"a", "b"}); }) == ErrorCode::Overlap);
    CHECK(code_of([&] { verify_star_partition(h, "q", {"b"}); }) == ErrorCode::UnknownLabel);
  }

  TEST_CASE("equal star partitions") {
    const auto h = fixture("h_a");
    CHECK(verify_equal_star_partition(h, {"e1", "e3"}, {"e2", "e4"}));
    CHECK_FALSE(verify_equal_star_partition(h, {"e1"}, {"e2"}));
    CHECK(code_of([&] { verify_equal_star_partition(h, {"e1"}, {"e1"}); }) == ErrorCode::NotDisjoint);
    CHECK(code_of([&] { verify_equal_star_partition(h, {"x"}, {"e1"}); }) == ErrorCode::UnknownLabel);
  }

  TEST_CASE("covering projection and pullback") {
    const auto h = fixture("h_cov");
    const auto hbar = fixture("h_cov_bar");
    const auto f = testing::fixture_map("h_cov_map");
    CHECK(verify_covering_projection(h, hbar, f) == ProjectionClass::CardinalityPreservingCovering);

    const auto basis = nullspace(incidence_matrix(hbar).transpose());
    CHECK(basis.dimension() == 4);
    for (const auto& x : basis.vectors) {
      const Certificate cert(CertificateKind::DependentVertices, hbar.vertex_labels(), x,
                             Annihilator::IncidenceTransposed);
      const auto pulled = pullback_dependent_set(h, hbar, f, cert);
      CHECK(is_sound(h, pulled));
      CHECK(pulled.coefficients(0) == x(0));
      CHECK(pulled.coefficients(8) == x(0));
    }

    VertexMap collapse;
    for (const auto& v : h.vertex_labels()) collapse[v] = "1";
    CHECK(verify_covering_projection(h, hbar, collapse) == ProjectionClass::NotHomomorphism);
    auto partial = f;
    partial.erase("u1");
    CHECK(code_of([&] { verify_covering_projection(h, hbar, partial); }) == ErrorCode::UnknownLabel);

    const auto hu = fixture("h_units");
    const auto c = unit_contraction(hu);
    const auto cert = dependent_vertices(c.contracted);
    if (cert) {
      CHECK(code_of([&] { pullback_dependent_set(hu, c.contracted, contraction_vertex_map(hu, c), *cert); }) ==
            ErrorCode::NotCardinalityPreserving);
    }
    const Certificate bogus(CertificateKind::DependentVertices, hbar.vertex_labels(),
                            RationalVector::Constant(8, Rational(1)), Annihilator::IncidenceTransposed);
    CHECK(code_of([&] { pullback_dependent_set(h, hbar, f, bogus); }) == ErrorCode::InvalidCertificate);
  }

  TEST_CASE("homomorphism that is not a covering") {
    const auto h = lines("e1: a b");
    const auto hbar = lines("f1: x y\nf2: y z");
    const VertexMap f{{"a", "x"}, {"b", "y"}};
    CHECK(verify_covering_projection(h, hbar, f) == ProjectionClass::Homomorphism);
  }

  TEST_CASE("embedding helpers") {
    const auto h = fixture("h_a");
    const auto x = indicator_difference(h, {"1", "3"}, {"2", "4"});
    CHECK(x == rvec({1, -1, 1, -1, 0}));
    const auto ag = incidence_graph_adjacency(h);
    CHECK(is_exactly_zero(ag.values * embed_vertices(h, x)));
    CHECK(is_exactly_zero(ag.values * embed_hyperedges(h, rvec({1, -1, 1, -1, 0}))));
    CHECK(embed_vertices(h, x).size() == 10);
  }
}
