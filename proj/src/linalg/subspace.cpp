#include "tdpair/subspace.hpp"

#include <string>

namespace tdpair {

namespace {

Matrix nonzero_rows(const Echelon& e) {
  Matrix out(e.reduced.field(), e.pivots.size(), e.reduced.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    for (std::size_t j = 0; j < e.reduced.cols(); ++j) out(i, j) = e.reduced(i, j);
  }
  return out;
}

void check_compatible(const Subspace& a, const Subspace& b, const char* op) {
  if (a.field() != b.field()) throw Error(ErrorCode::FieldMismatch, op);
  if (a.ambient() != b.ambient()) throw Error(ErrorCode::DimensionMismatch, std::string(op) + ": ambient dimensions differ");
}

}  // namespace

Subspace Subspace::zero(Field field, std::size_t ambient) { return Subspace(Matrix(field, 0, ambient)); }

Subspace Subspace::full(Field field, std::size_t ambient) { return Subspace(Matrix::identity(field, ambient)); }

Subspace Subspace::row_span(const Matrix& rows) { return Subspace(nonzero_rows(rref(rows))); }

Subspace Subspace::span(Field field, std::size_t ambient, const std::vector<Vector>& vectors) {
  if (vectors.empty()) return zero(field, ambient);
  for (const auto& v : vectors) {
    if (v.size() != ambient) throw Error(ErrorCode::DimensionMismatch, "span: vector length differs from ambient");
  }
  return row_span(Matrix::from_rows(field, vectors));
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient()) throw Error(ErrorCode::DimensionMismatch, "contains: vector length");
  // Reduce v against the echelon basis; pivots are the first nonzero column of each row.
  Vector r = v;
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    std::size_t pivot = 0;
    while (basis_(i, pivot).is_zero()) ++pivot;
    if (r[pivot].is_zero()) continue;
    const Scalar c = r[pivot];
    for (std::size_t j = pivot; j < ambient(); ++j) r[j] -= c * basis_(i, j);
  }
  return tdpair::is_zero(r);
}

bool Subspace::contains(const Subspace& other) const {
  check_compatible(*this, other, "contains");
  for (std::size_t i = 0; i < other.dim(); ++i) {
    if (!contains(other.basis_.row(i))) return false;
  }
  return true;
}

Subspace kernel(const Matrix& m) {
  const Echelon e = rref(m);
  const Field f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(f, m.cols());
    v[free] = f.one();
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return Subspace::span(f, m.cols(), basis);
}

Subspace image(const Matrix& m) { return Subspace::row_span(m.transpose()); }

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  check_compatible(a, b, "sum");
  return Subspace::row_span(a.basis().vstack(b.basis()));
}

Subspace subspace_sum(const std::vector<Subspace>& parts, Field field, std::size_t ambient) {
  Matrix stacked(field, 0, ambient);
  for (const auto& p : parts) {
    if (p.field() != field || p.ambient() != ambient) throw Error(ErrorCode::DimensionMismatch, "sum of incompatible subspaces");
    stacked = stacked.vstack(p.basis());
  }
  return Subspace::row_span(stacked);
}

Subspace subspace_intersection(const Subspace& a, const Subspace& b) {
  check_compatible(a, b, "intersection");
  const std::size_t n = a.ambient();
  const Field f = a.field();
  // Rows (u | u) for u in a and (w | 0) for w in b; after echelon reduction the
  // rows whose left half vanishes carry a basis of the intersection on the right.
  Matrix z(f, a.dim() + b.dim(), 2 * n);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      z(i, j) = a.basis()(i, j);
      z(i, n + j) = a.basis()(i, j);
    }
  }
  for (std::size_t i = 0; i < b.dim(); ++i) {
    for (std::size_t j = 0; j < n; ++j) z(a.dim() + i, j) = b.basis()(i, j);
  }
  const Echelon e = rref(z);
  std::vector<Vector> out;
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] < n) continue;
    Vector v(n, f.zero());
    for (std::size_t j = 0; j < n; ++j) v[j] = e.reduced(i, n + j);
    out.push_back(std::move(v));
  }
  return Subspace::span(f, n, out);
}

Subspace apply(const Matrix& m, const Subspace& w) {
  if (m.cols() != w.ambient()) throw Error(ErrorCode::DimensionMismatch, "apply: ambient mismatch");
  if (w.is_zero()) return Subspace::zero(m.field(), m.rows());
  return Subspace::row_span((m * w.as_columns()).transpose());
}

std::optional<std::size_t> first_dependent_summand(const std::vector<Subspace>& parts) {
  if (parts.empty()) return std::nullopt;
  Matrix stacked(parts.front().field(), 0, parts.front().ambient());
  std::size_t expected = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    stacked = stacked.vstack(parts[i].basis());
    expected += parts[i].dim();
    if (stacked.rank() != expected) return i;
  }
  return std::nullopt;
}

Decomposition certify_direct_sum(const std::vector<Subspace>& parts) {
  if (parts.empty()) throw Error(ErrorCode::NotSpanning, "empty list of summands");
  const Field f = parts.front().field();
  const std::size_t n = parts.front().ambient();
  for (const auto& p : parts) {
    if (p.field() != f) throw Error(ErrorCode::FieldMismatch, "summands over different fields");
    if (p.ambient() != n) throw Error(ErrorCode::DimensionMismatch, "summands in different ambient spaces");
  }
  if (auto bad = first_dependent_summand(parts)) {
    throw Error(ErrorCode::NotDirect, "summand " + std::to_string(*bad) + " meets the sum of the earlier summands");
  }
  std::size_t total = 0;
  for (const auto& p : parts) total += p.dim();
  if (total != n) {
    throw Error(ErrorCode::NotSpanning,
                "summands have total dimension " + std::to_string(total) + " in a space of dimension " + std::to_string(n));
  }
  Decomposition dec;
  dec.summands_ = parts;
  dec.ambient_ = n;
  dec.rank_ = total;
  return dec;
}

std::vector<Matrix> projections_of(const Decomposition& dec) {
  const std::size_t n = dec.ambient();
  const Field f = dec[0].field();
  std::vector<Vector> columns;
  for (const auto& s : dec.summands()) {
    for (auto& v : s.vectors()) columns.push_back(std::move(v));
  }
  const Matrix basis = Matrix::from_columns(f, columns, n);
  const Matrix coords = basis.inverse();
  std::vector<Matrix> out;
  std::size_t offset = 0;
  for (const auto& s : dec.summands()) {
    // B_i (rows of B^{-1} for block i)
    Matrix rows(f, s.dim(), n);
    for (std::size_t i = 0; i < s.dim(); ++i) {
      for (std::size_t j = 0; j < n; ++j) rows(i, j) = coords(offset + i, j);
    }
    out.push_back(basis.column_block(offset, s.dim()) * rows);
    offset += s.dim();
  }
  return out;
}

}  // namespace tdpair
