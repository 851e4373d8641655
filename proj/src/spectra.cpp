#include "hyperlin/spectra.hpp"

#include <algorithm>
#include <cmath>

#include "hyperlin/error.hpp"

namespace hyperlin {

std::string_view to_string(WeightPreset p) {
  switch (p) {
    case WeightPreset::Unit: return "unit";
    case WeightPreset::EdgeNormalized: return "edgenorm";
    case WeightPreset::FullyNormalized: return "fullnorm";
  }
  return "unknown";
}

WeightPreset parse_weight_preset(std::string_view name) {
  if (name == "unit") return WeightPreset::Unit;
  if (name == "edgenorm") return WeightPreset::EdgeNormalized;
  if (name == "fullnorm") return WeightPreset::FullyNormalized;
  throw Error(ErrorCode::UnknownLabel, "unknown weight scheme '" + std::string(name) + "'");
}

bool WeightScheme::unit_vertex_weights() const {
  return std::all_of(vertex_weights.begin(), vertex_weights.end(),
                     [](const Rational& r) { return r == Rational(1); });
}

WeightScheme make_weights(const Hypergraph& h, WeightPreset preset) {
  WeightScheme w;
  w.name = std::string(to_string(preset));
  w.vertex_weights.assign(h.num_vertices(), Rational(1));
  w.edge_weights.assign(h.num_edges(), Rational(1));
  if (preset == WeightPreset::Unit) return w;
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    const auto size = static_cast<long>(h.edge(e).size());
    if (size < 2) {
      throw Error(ErrorCode::WeightDomainMismatch,
                  "hyperedge '" + h.edge_label(e) + "' is a singleton; 1/(|e|-1) is undefined");
    }
    w.edge_weights[e] = Rational(1, size - 1);
  }
  if (preset == WeightPreset::FullyNormalized) {
    for (std::size_t v = 0; v < h.num_vertices(); ++v) {
      const auto degree = static_cast<long>(h.star_of(v).size());
      if (degree == 0) {
        throw Error(ErrorCode::WeightDomainMismatch,
                    "vertex '" + h.vertex_label(v) + "' has an empty star; 1/|E_v| is undefined");
      }
      w.vertex_weights[v] = Rational(1, degree);
    }
  }
  return w;
}

void check_weights(const Hypergraph& h, const WeightScheme& w) {
  if (w.vertex_weights.size() != h.num_vertices() || w.edge_weights.size() != h.num_edges()) {
    throw Error(ErrorCode::WeightDomainMismatch, "weight scheme does not match the hypergraph");
  }
  auto positive = [](const Rational& r) { return r.sign() > 0; };
  if (!std::all_of(w.vertex_weights.begin(), w.vertex_weights.end(), positive) ||
      !std::all_of(w.edge_weights.begin(), w.edge_weights.end(), positive)) {
    throw Error(ErrorCode::WeightDomainMismatch, "weights must be strictly positive");
  }
}

std::string_view to_string(MatrixKind k) {
  switch (k) {
    case MatrixKind::I: return "I";
    case MatrixKind::Q: return "Q";
    case MatrixKind::A: return "A";
    case MatrixKind::L: return "L";
    case MatrixKind::D: return "D";
    case MatrixKind::K: return "K";
    case MatrixKind::AGH: return "A_GH";
  }
  return "unknown";
}

MatrixKind parse_matrix_kind(std::string_view name) {
  if (name == "I") return MatrixKind::I;
  if (name == "Q") return MatrixKind::Q;
  if (name == "A") return MatrixKind::A;
  if (name == "L") return MatrixKind::L;
  if (name == "D") return MatrixKind::D;
  if (name == "K") return MatrixKind::K;
  if (name == "AGH" || name == "A_GH") return MatrixKind::AGH;
  throw Error(ErrorCode::UnknownLabel, "unknown matrix '" + std::string(name) + "'");
}

RationalMatrix build_Q(const Hypergraph& h, const WeightScheme& w) {
  check_weights(h, w);
  const auto n = static_cast<Eigen::Index>(h.num_vertices());
  RationalDense q = RationalDense::Constant(n, n, Rational(0));
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    for (auto u : h.edge(e)) {
      const Rational weight = w.vertex_weights[u] * w.edge_weights[e];
      for (auto v : h.edge(e)) {
        q(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v)) += weight;
      }
    }
  }
  return RationalMatrix(std::move(q), h.vertex_labels(), h.vertex_labels());
}

RationalMatrix build_A(const Hypergraph& h, const WeightScheme& w) {
  RationalMatrix a = build_Q(h, w);
  for (Eigen::Index i = 0; i < a.rows(); ++i) a(i, i) = 0;
  return a;
}

RationalMatrix build_D(const Hypergraph& h, const WeightScheme& w) {
  check_weights(h, w);
  const auto n = static_cast<Eigen::Index>(h.num_vertices());
  RationalDense d = RationalDense::Constant(n, n, Rational(0));
  for (std::size_t v = 0; v < h.num_vertices(); ++v) {
    Rational sum(0);
    for (auto e : h.star_of(v)) sum += w.edge_weights[e];
    d(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(v)) = w.vertex_weights[v] * sum;
  }
  return RationalMatrix(std::move(d), h.vertex_labels(), h.vertex_labels());
}

RationalMatrix build_K(const Hypergraph& h, const WeightScheme& w) {
  const RationalMatrix a = build_A(h, w);
  RationalDense k = RationalDense::Constant(a.rows(), a.cols(), Rational(0));
  for (Eigen::Index i = 0; i < a.rows(); ++i) k(i, i) = a.values.row(i).sum();
  return RationalMatrix(std::move(k), a.row_labels, a.col_labels);
}

RationalMatrix build_L(const Hypergraph& h, const WeightScheme& w) {
  const RationalMatrix a = build_A(h, w);
  RationalDense l = -a.values;
  for (Eigen::Index i = 0; i < a.rows(); ++i) l(i, i) = a.values.row(i).sum();
  return RationalMatrix(std::move(l), a.row_labels, a.col_labels);
}

RationalMatrix build_A_GH(const Hypergraph& h) { return incidence_graph_adjacency(h); }

RationalMatrix build_matrix(const Hypergraph& h, MatrixKind kind, const WeightScheme& w) {
  switch (kind) {
    case MatrixKind::I: return incidence_matrix(h);
    case MatrixKind::Q: return build_Q(h, w);
    case MatrixKind::A: return build_A(h, w);
    case MatrixKind::L: return build_L(h, w);
    case MatrixKind::D: return build_D(h, w);
    case MatrixKind::K: return build_K(h, w);
    case MatrixKind::AGH: return build_A_GH(h);
  }
  throw std::logic_error("unreachable matrix kind");
}

Eigen::VectorXd jacobi_eigenvalues(const Eigen::MatrixXd& m, double tol, int max_sweeps) {
  const Eigen::Index n = m.rows();
  Eigen::MatrixXd a = m;
  const double threshold = tol * std::max(1.0, a.norm());
  auto off_norm = [&] {
    double s = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        if (i != j) s += a(i, j) * a(i, j);
      }
    }
    return std::sqrt(s);
  };

  int sweep = 0;
  while (off_norm() >= threshold) {
    if (sweep++ == max_sweeps) {
      throw Error(ErrorCode::NoConvergence,
                  "Jacobi did not converge in " + std::to_string(max_sweeps) + " sweeps");
    }
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
      }
    }
  }
  Eigen::VectorXd values = a.diagonal();
  std::sort(values.begin(), values.end());
  return values;
}

int Spectrum::multiplicity_of(double x) const {
  for (const auto& e : entries) {
    if (std::abs(e.value - x) <= tol) return e.multiplicity;
  }
  return 0;
}

Spectrum eigenvalues_sym(const RationalMatrix& m, std::string kind, const SpectrumOptions& opts) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::NotSymmetrizable, "matrix " + kind + " is not square");
  }
  const Eigen::Index n = m.rows();
  Eigen::MatrixXd sym(n, n);
  if (opts.similarity_diagonal) {
    const auto& d = *opts.similarity_diagonal;
    if (static_cast<Eigen::Index>(d.size()) != n ||
        std::any_of(d.begin(), d.end(), [](const Rational& r) { return r.sign() <= 0; })) {
      throw Error(ErrorCode::NotSymmetrizable, "similarity diagonal must be positive and match");
    }
    RationalDense s(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) s(i, j) = m(i, j) / d[static_cast<std::size_t>(i)];
    }
    if (!is_symmetric(s)) {
      throw Error(ErrorCode::NotSymmetrizable, "matrix " + kind + " is not diag(d) times a symmetric matrix");
    }
    Eigen::VectorXd root(n);
    for (Eigen::Index i = 0; i < n; ++i) root(i) = std::sqrt(d[static_cast<std::size_t>(i)].to_double());
    sym = root.asDiagonal() * to_double(s) * root.asDiagonal();
    sym = 0.5 * (sym + sym.transpose()).eval();
  } else {
    if (!is_symmetric(m.values)) {
      throw Error(ErrorCode::NotSymmetrizable, "matrix " + kind + " is not symmetric");
    }
    sym = to_double(m.values);
  }

  Spectrum out;
  out.kind = std::move(kind);
  out.tol = opts.group_tol;
  out.values = jacobi_eigenvalues(sym, opts.jacobi_tol, opts.max_sweeps);
  for (Eigen::Index i = 0; i < out.values.size();) {
    Eigen::Index j = i + 1;
    double sum = out.values(i);
    while (j < out.values.size() && out.values(j) - out.values(j - 1) <= opts.group_tol) {
      sum += out.values(j);
      ++j;
    }
    out.entries.push_back({sum / static_cast<double>(j - i), static_cast<int>(j - i)});
    i = j;
  }
  return out;
}

Spectrum spectrum(const Hypergraph& h, MatrixKind kind, const WeightScheme& w,
                  const SpectrumOptions& opts) {
  const RationalMatrix m = build_matrix(h, kind, w);
  SpectrumOptions o = opts;
  if ((kind == MatrixKind::Q || kind == MatrixKind::A || kind == MatrixKind::L) &&
      !w.unit_vertex_weights()) {
    o.similarity_diagonal = w.vertex_weights;
  }
  return eigenvalues_sym(m, std::string(to_string(kind)), o);
}

nlohmann::ordered_json to_json(const Spectrum& s) {
  nlohmann::ordered_json j;
  j["matrix"] = s.kind;
  j["tol"] = s.tol;
  auto eigs = nlohmann::ordered_json::array();
  for (const auto& e : s.entries) {
    // Values within tol of zero print as 0.
    const double v = std::abs(e.value) <= s.tol ? 0.0 : e.value;
    eigs.push_back({{"value", v}, {"multiplicity", e.multiplicity}});
  }
  j["eigs"] = std::move(eigs);
  return j;
}

namespace {

void require_vertex_axis(const Hypergraph& h, const Certificate& cert) {
  if (cert.annihilated_by != Annihilator::IncidenceTransposed || cert.labels != h.vertex_labels() ||
      cert.coefficients.size() != static_cast<Eigen::Index>(h.num_vertices())) {
    throw Error(ErrorCode::InvalidCertificate, "certificate is not indexed by the vertices");
  }
  if (support_of(cert.labels, cert.coefficients).empty()) {
    throw Error(ErrorCode::InvalidCertificate, "certificate is zero");
  }
}

void require_sound_vertex_certificate(const Hypergraph& h, const Certificate& cert) {
  require_vertex_axis(h, cert);
  if (!is_sound(h, cert)) {
    throw Error(ErrorCode::InvalidCertificate, "certificate is not annihilated by I_H^T");
  }
}

std::optional<Rational> constant_on_support(const Certificate& cert,
                                            const std::vector<Rational>& values) {
  std::optional<Rational> c;
  for (Eigen::Index i = 0; i < cert.coefficients.size(); ++i) {
    if (cert.coefficients(i).is_zero()) continue;
    const Rational& v = values[static_cast<std::size_t>(i)];
    if (!c) {
      c = v;
    } else if (*c != v) {
      return std::nullopt;
    }
  }
  return c;
}

}  // namespace

bool verify_Q_annihilation(const Hypergraph& h, const WeightScheme& w, const Certificate& cert) {
  require_vertex_axis(h, cert);
  return is_exactly_zero(build_Q(h, w).values * cert.coefficients);
}

std::optional<Rational> verify_A_eigenvalue(const Hypergraph& h, const WeightScheme& w,
                                            const Certificate& cert) {
  require_sound_vertex_certificate(h, cert);
  const RationalMatrix d = build_D(h, w);
  std::vector<Rational> diag;
  for (Eigen::Index i = 0; i < d.rows(); ++i) diag.push_back(d(i, i));
  const auto c = constant_on_support(cert, diag);
  if (!c) return std::nullopt;
  const RationalVector residual = build_A(h, w).values * cert.coefficients + cert.coefficients * *c;
  if (!is_exactly_zero(residual)) throw std::logic_error("A x != -c x for a sound certificate");
  return -*c;
}

std::optional<Rational> verify_L_eigenvalue(const Hypergraph& h, const WeightScheme& w,
                                            const Certificate& cert) {
  require_sound_vertex_certificate(h, cert);
  const RationalMatrix q = build_Q(h, w);
  std::vector<Rational> row_sums;
  for (Eigen::Index i = 0; i < q.rows(); ++i) row_sums.push_back(q.values.row(i).sum());
  const auto c = constant_on_support(cert, row_sums);
  if (!c) return std::nullopt;
  const RationalVector residual = build_L(h, w).values * cert.coefficients - cert.coefficients * *c;
  if (!is_exactly_zero(residual)) throw std::logic_error("L x != c x for a sound certificate");
  return *c;
}

}  // namespace hyperlin
