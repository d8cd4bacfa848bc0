#pragma once

#include <string>
#include <vector>

#include "support.hpp"
#include "tdpair/leonard.hpp"
#include "tdpair/td_system.hpp"

namespace tdpair::testing {

inline Matrix block_diagonal(const Matrix& a, const Matrix& b) {
  Matrix out(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
  return out;
}

inline TDPair direct_sum(const TDPair& x, const TDPair& y) {
  return {block_diagonal(x.A, y.A), block_diagonal(x.A_star, y.A_star)};
}

/// First system (forward orderings) of a shipped preset.
inline TDSystem preset_system(const std::string& name, std::size_t d) {
  return validate_td_pair(generate_preset(name, d)).front();
}

inline TDSystem reduced_preset_system(const std::string& name, std::size_t d, std::uint64_t p) {
  return validate_td_pair(leonard_matrices(reduce_parameters(preset_parameters(name, d), Field::prime(p)))).front();
}

/// (name, d) pairs covering every shipped family at every supported diameter.
inline std::vector<std::pair<std::string, std::size_t>> all_presets(std::size_t max_d = 8) {
  std::vector<std::pair<std::string, std::size_t>> out;
  for (const auto& name : preset_names())
    for (std::size_t d = 1; d <= max_d; ++d) out.emplace_back(name, d);
  return out;
}

inline Matrix from_rows(Field f, const std::vector<std::vector<long long>>& rows) {
  Matrix m(f, rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = f.from_int(rows[i][j]);
  return m;
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

/// A = sum of diag(1,-1) in each tensor slot and A* = sum of the given 2x2
/// matrices (eigenvalues +-1) in each slot. Diameter = number of factors.
inline TDPair tensor_pair(const std::vector<std::vector<std::vector<long long>>>& stars) {
  const Field q = Field::rational();
  const Matrix a1 = from_rows(q, {{1, 0}, {0, -1}});
  const std::size_t k = stars.size();
  std::size_t n = 1;
  for (std::size_t t = 0; t < k; ++t) n *= 2;
  TDPair p{Matrix(q, n, n), Matrix(q, n, n)};
  for (std::size_t slot = 0; slot < k; ++slot) {
    Matrix ta = Matrix::identity(q, 1), ts = Matrix::identity(q, 1);
    for (std::size_t t = 0; t < k; ++t) {
      const Matrix id = Matrix::identity(q, 2);
      ta = kron(ta, t == slot ? a1 : id);
      ts = kron(ts, t == slot ? from_rows(q, stars[t]) : id);
    }
    p.A += ta;
    p.A_star += ts;
  }
  return p;
}

/// Shape (1, 2, 1).
inline TDPair tensor_pair() { return tensor_pair({{{0, 1}, {1, 0}}, {{2, 3}, {-1, -2}}}); }
/// Shape (1, 3, 3, 1).
inline TDPair tensor_triple() { return tensor_pair({{{0, 1}, {1, 0}}, {{2, 3}, {-1, -2}}, {{3, -4}, {2, -3}}}); }

}  // namespace tdpair::testing
