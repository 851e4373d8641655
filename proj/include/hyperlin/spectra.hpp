#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>
#include <json.hpp>

#include "hyperlin/hypergraph.hpp"
#include "hyperlin/structures.hpp"

namespace hyperlin {

enum class WeightPreset { Unit, EdgeNormalized, FullyNormalized };

std::string_view to_string(WeightPreset p);
/// Accepts "unit", "edgenorm", "fullnorm". Throws UnknownLabel.
WeightPreset parse_weight_preset(std::string_view name);

/// Strictly positive weights on the vertices and hyperedges of one
/// hypergraph, indexed in declaration order.
struct WeightScheme {
  std::string name;
  std::vector<Rational> vertex_weights;
  std::vector<Rational> edge_weights;

  bool unit_vertex_weights() const;
};

/// unit: w_V = 1, w_E = 1. edgenorm: w_E(e) = 1/(|e|-1). fullnorm:
/// additionally w_V(v) = 1/|E_v|. Throws WeightDomainMismatch on a singleton
/// hyperedge (edgenorm, fullnorm) or an empty star (fullnorm).
WeightScheme make_weights(const Hypergraph& h, WeightPreset preset);

/// Throws WeightDomainMismatch when sizes do not match h or a weight is not
/// strictly positive.
void check_weights(const Hypergraph& h, const WeightScheme& w);

enum class MatrixKind { I, Q, A, L, D, K, AGH };

std::string_view to_string(MatrixKind k);
/// Accepts I, Q, A, L, D, K, AGH (or A_GH). Throws UnknownLabel.
MatrixKind parse_matrix_kind(std::string_view name);

/// Q = D_V I D_E I^T.
RationalMatrix build_Q(const Hypergraph& h, const WeightScheme& w);
/// Q with its diagonal zeroed.
RationalMatrix build_A(const Hypergraph& h, const WeightScheme& w);
/// diag(w_V(v) * sum_{e in E_v} w_E(e)); equals the diagonal of Q.
RationalMatrix build_D(const Hypergraph& h, const WeightScheme& w);
/// diag(A * 1).
RationalMatrix build_K(const Hypergraph& h, const WeightScheme& w);
/// K - A.
RationalMatrix build_L(const Hypergraph& h, const WeightScheme& w);
RationalMatrix build_A_GH(const Hypergraph& h);

RationalMatrix build_matrix(const Hypergraph& h, MatrixKind kind, const WeightScheme& w);

/// Cyclic Jacobi eigenvalues of a real symmetric matrix, ascending. Sweeps
/// stop once the off-diagonal Frobenius norm drops below
/// tol * max(1, ||m||_F). Throws NoConvergence after max_sweeps.
Eigen::VectorXd jacobi_eigenvalues(const Eigen::MatrixXd& m, double tol = 1e-12,
                                   int max_sweeps = 100);

struct SpectrumEntry {
  double value = 0;
  int multiplicity = 0;
};

struct Spectrum {
  std::string kind;
  double tol = 1e-8;
  std::vector<SpectrumEntry> entries;  // ascending
  Eigen::VectorXd values;              // all eigenvalues, ascending

  /// Multiplicity of the group within tol of x, 0 if none.
  int multiplicity_of(double x) const;
  bool contains(double x) const { return multiplicity_of(x) > 0; }
};

struct SpectrumOptions {
  double group_tol = 1e-8;
  double jacobi_tol = 1e-12;
  int max_sweeps = 100;
  /// Positive diagonal d with m = diag(d) * S, S symmetric. The spectrum is
  /// taken of diag(d)^{1/2} S diag(d)^{1/2}, which is similar to m.
  std::optional<std::vector<Rational>> similarity_diagonal;
};

/// Throws NotSymmetrizable when m is not symmetric (or not of the declared
/// diag(d) * S form).
Spectrum eigenvalues_sym(const RationalMatrix& m, std::string kind,
                         const SpectrumOptions& opts = {});

/// Builds the matrix and supplies the D_V similarity for Q, A and L.
Spectrum spectrum(const Hypergraph& h, MatrixKind kind, const WeightScheme& w,
                  const SpectrumOptions& opts = {});

nlohmann::ordered_json to_json(const Spectrum& s);

/// Exact Q c = 0 for a vertex-axis certificate. Throws InvalidCertificate on
/// a zero certificate or one over the wrong axis.
bool verify_Q_annihilation(const Hypergraph& h, const WeightScheme& w, const Certificate& cert);

/// When D is constant (= c) on the support of a sound vertex certificate,
/// checks A x = -c x exactly and returns -c. Returns nullopt otherwise.
/// Throws InvalidCertificate.
std::optional<Rational> verify_A_eigenvalue(const Hypergraph& h, const WeightScheme& w,
                                            const Certificate& cert);

/// Same with L and c = (K + D)_vv = sum_u q_vu.
std::optional<Rational> verify_L_eigenvalue(const Hypergraph& h, const WeightScheme& w,
                                            const Certificate& cert);

}  // namespace hyperlin
