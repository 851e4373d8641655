#include "hyperlin/linalg.hpp"

namespace hyperlin {

NullspaceBasis nullspace(const RationalMatrix& m) {
  NullspaceBasis out;
  out.vectors = nullspace_vectors(m.values);
  out.ambient_labels = m.col_labels;
  return out;
}

RationalVector normalize_primitive(const RationalVector& v) {
  Eigen::Index first = 0;
  while (first < v.size() && v(first).is_zero()) ++first;
  if (first == v.size()) return v;

  mpz_class den_lcm = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v(i).gmp().get_den_mpz_t());
  }
  mpz_class num_gcd = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const mpq_class scaled = v(i).gmp() * den_lcm;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), mpz_class(scaled).get_mpz_t());
  }
  Rational factor(mpq_class(den_lcm, num_gcd));
  if (v(first).sign() < 0) factor = -factor;
  return v * factor;
}

nlohmann::ordered_json to_json(const RationalMatrix& m) {
  nlohmann::ordered_json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["row_labels"] = m.row_labels;
  j["col_labels"] = m.col_labels;
  auto entries = nlohmann::ordered_json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index k = 0; k < m.cols(); ++k) entries.push_back(m(i, k).str());
  }
  j["entries"] = std::move(entries);
  return j;
}

RationalMatrix matrix_from_json(const nlohmann::ordered_json& j) {
  try {
    const auto rows = j.at("rows").get<Eigen::Index>();
    const auto cols = j.at("cols").get<Eigen::Index>();
    const auto& entries = j.at("entries");
    if (rows < 0 || cols < 0 || entries.size() != static_cast<std::size_t>(rows * cols)) {
      throw Error(ErrorCode::SyntaxError, "entries length must equal rows*cols");
    }
    RationalDense values(rows, cols);
    std::size_t idx = 0;
    for (Eigen::Index i = 0; i < rows; ++i) {
      for (Eigen::Index k = 0; k < cols; ++k) {
        values(i, k) = Rational::parse(entries.at(idx++).get<std::string>());
      }
    }
    return RationalMatrix(std::move(values), j.at("row_labels").get<std::vector<std::string>>(),
                          j.at("col_labels").get<std::vector<std::string>>());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::SyntaxError, std::string("matrix JSON: ") + e.what());
  }
}

nlohmann::ordered_json vector_to_json(const RationalVector& v) {
  auto arr = nlohmann::ordered_json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v(i).str());
  return arr;
}

}  // namespace hyperlin
