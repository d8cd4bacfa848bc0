#include <gtest/gtest.h>

#include <functional>

#include "support.hpp"
#include "tdpair/linear_system.hpp"
#include "tdpair/polynomial.hpp"
#include "tdpair/subspace.hpp"

using namespace tdpair;
using namespace tdpair::testing;

namespace {

Subspace span_of(Field f, std::size_t n, std::initializer_list<std::initializer_list<long long>> vs) {
  std::vector<Vector> out;
  for (const auto& v : vs) {
    Vector x;
    for (long long c : v) x.push_back(f.from_int(c));
    out.push_back(x);
  }
  return Subspace::span(f, n, out);
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::Usage;
}

}  // namespace

TEST(Kernel, IdentityAndZero) {
  EXPECT_TRUE(kernel(Matrix::identity(QQ, 3)).is_zero());
  EXPECT_EQ(kernel(Matrix(QQ, 3, 3)), Subspace::full(QQ, 3));
}

TEST(Kernel, DiagonalWithOneZero) {
  // Null space of diag(1,0,2): solving x1 = 0, 2 x3 = 0 leaves x2 free.
  const Subspace k = kernel(mat(QQ, {{1, 0, 0}, {0, 0, 0}, {0, 0, 2}}));
  EXPECT_EQ(k, span_of(QQ, 3, {{0, 1, 0}}));
}

TEST(Kernel, RectangularMatrix) {
  // x + y + z = 0 ; y - z = 0  ->  span{(-2, 1, 1)}
  const Subspace k = kernel(mat(QQ, {{1, 1, 1}, {0, 1, -1}}));
  EXPECT_EQ(k, span_of(QQ, 3, {{-2, 1, 1}}));
}

TEST(Image, IdentityZeroAndOuterProduct) {
  EXPECT_EQ(image(Matrix::identity(QQ, 3)), Subspace::full(QQ, 3));
  EXPECT_TRUE(image(Matrix(QQ, 3, 3)).is_zero());
  const Matrix u = mat(QQ, {{1}, {2}, {-3}});
  const Matrix v = mat(QQ, {{4, 0, 5}});
  EXPECT_EQ(image(u * v), span_of(QQ, 3, {{1, 2, -3}}));
}

TEST(Subspaces, SumAndIntersectionExamples) {
  const Subspace e1 = span_of(QQ, 4, {{1, 0, 0, 0}});
  const Subspace e2 = span_of(QQ, 4, {{0, 1, 0, 0}});
  EXPECT_EQ(subspace_sum(e1, Subspace::zero(QQ, 4)), e1);
  EXPECT_EQ(subspace_sum(e1, e2), span_of(QQ, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}}));
  EXPECT_EQ(subspace_intersection(e1, Subspace::full(QQ, 4)), e1);
  EXPECT_TRUE(subspace_intersection(e1, e2).is_zero());
  const Subspace a = span_of(QQ, 4, {{1, 1, 0, 0}, {0, 0, 1, 0}});
  const Subspace b = span_of(QQ, 4, {{1, 1, 0, 0}, {0, 0, 0, 1}});
  EXPECT_EQ(subspace_intersection(a, b), span_of(QQ, 4, {{1, 1, 0, 0}}));
}

TEST(Subspaces, AmbientMismatchIsRejected) {
  EXPECT_EQ(code_of([] { subspace_sum(Subspace::full(QQ, 2), Subspace::full(QQ, 3)); }), ErrorCode::DimensionMismatch);
  EXPECT_EQ(code_of([] { subspace_intersection(Subspace::full(QQ, 2), Subspace::full(Field::prime(5), 2)); }),
            ErrorCode::FieldMismatch);
}

TEST(Subspaces, CanonicalBasisIsIndependentOfGenerators) {
  const Subspace a = span_of(QQ, 3, {{1, 2, 3}, {0, 1, 1}});
  const Subspace b = span_of(QQ, 3, {{1, 3, 4}, {2, 5, 7}, {1, 2, 3}});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.basis(), b.basis());
}

TEST(DirectSum, CoordinateAxes) {
  const Decomposition dec = certify_direct_sum(
      {span_of(QQ, 3, {{1, 0, 0}}), span_of(QQ, 3, {{0, 1, 0}}), span_of(QQ, 3, {{0, 0, 1}})});
  EXPECT_EQ(dec.certified_rank(), 3u);
  const auto p = projections_of(dec);
  ASSERT_EQ(p.size(), 3u);
  EXPECT_EQ(p[0], mat(QQ, {{1, 0, 0}, {0, 0, 0}, {0, 0, 0}}));
  EXPECT_EQ(p[1], mat(QQ, {{0, 0, 0}, {0, 1, 0}, {0, 0, 0}}));
  EXPECT_EQ(p[2], mat(QQ, {{0, 0, 0}, {0, 0, 0}, {0, 0, 1}}));
}

TEST(DirectSum, RepeatedSummandIsNotDirect) {
  const Subspace e1 = span_of(QQ, 3, {{1, 0, 0}});
  try {
    certify_direct_sum({e1, e1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotDirect);
    EXPECT_NE(std::string(e.what()).find("summand 1"), std::string::npos);
  }
  EXPECT_EQ(code_of([&] { certify_direct_sum({e1, span_of(QQ, 3, {{0, 1, 0}})}); }), ErrorCode::NotSpanning);
}

TEST(DirectSum, ProjectionsAlongSkewComplement) {
  // Q^2 = span{(1,0)} + span{(1,1)}; projection onto the first along the second
  // sends (x, y) to (x - y, 0).
  const auto p = projections_of(certify_direct_sum({span_of(QQ, 2, {{1, 0}}), span_of(QQ, 2, {{1, 1}})}));
  EXPECT_EQ(p[0], mat(QQ, {{1, -1}, {0, 0}}));
  EXPECT_EQ(p[1], mat(QQ, {{0, 1}, {0, 1}}));
}

TEST(PolyEval, Examples) {
  Gen gen(3);
  const Matrix m = gen.matrix(QQ, 4, 4);
  EXPECT_EQ(matrix_poly_eval(Polynomial::x(QQ), m), m);
  EXPECT_EQ(matrix_poly_eval(Polynomial::constant(QQ.one()), m), Matrix::identity(QQ, 4));
  const Polynomial p = Polynomial::from_roots(QQ, {q(1), q(2)});
  EXPECT_TRUE(matrix_poly_eval(p, mat(QQ, {{1, 0}, {0, 2}})).is_zero());
}

TEST(Polynomial, DivisionAndGcd) {
  const Polynomial a = Polynomial::from_roots(QQ, {q(1), q(2), q(3)});
  const Polynomial b = Polynomial::from_roots(QQ, {q(2), q(5)});
  EXPECT_EQ(gcd(a, b), Polynomial::linear(q(2)));
  auto [quot, rem] = a.divmod(b);
  EXPECT_EQ(quot * b + rem, a);
  EXPECT_LT(rem.degree(), b.degree());
  EXPECT_EQ(a.derivative().eval(q(0)), q(11));
  EXPECT_TRUE(Polynomial(QQ, {QQ.zero(), QQ.zero()}).is_zero());
  EXPECT_EQ(Polynomial(QQ).degree(), -1);
}

TEST(LinalgProperty, SumIntersectionDimensionFormula) {
  Gen gen(2024);
  for (const Field f : {QQ, Field::prime(3), Field::prime(101)}) {
    for (int trial = 0; trial < 60; ++trial) {
      const Subspace a = gen.subspace(f, 6, 5);
      const Subspace b = gen.subspace(f, 6, 5);
      const Subspace s = subspace_sum(a, b);
      const Subspace i = subspace_intersection(a, b);
      EXPECT_EQ(s.dim() + i.dim(), a.dim() + b.dim());
      EXPECT_TRUE(s.contains(a) && s.contains(b));
      EXPECT_TRUE(a.contains(i) && b.contains(i));
      EXPECT_EQ(subspace_intersection(a, b), subspace_intersection(b, a));
    }
  }
}

TEST(LinalgProperty, RankNullity) {
  Gen gen(7);
  for (int trial = 0; trial < 40; ++trial) {
    const auto r = static_cast<std::size_t>(gen.integer(0, 4));
    const Matrix m = gen.low_rank(QQ, 5, 6, r);
    EXPECT_EQ(kernel(m).dim() + image(m).dim(), 6u);
    EXPECT_EQ(image(m).dim(), m.rank());
    EXPECT_TRUE((m * kernel(m).as_columns()).is_zero());
  }
}

TEST(LinalgProperty, ProjectionsResolveIdentity) {
  Gen gen(99);
  for (int trial = 0; trial < 25; ++trial) {
    const Matrix b = gen.invertible(QQ, 5);
    std::vector<Subspace> parts;
    std::size_t col = 0;
    while (col < 5) {
      const auto width = static_cast<std::size_t>(gen.integer(1, static_cast<long long>(5 - col)));
      parts.push_back(Subspace::row_span(b.column_block(col, width).transpose()));
      col += width;
    }
    const auto p = projections_of(certify_direct_sum(parts));
    Matrix total(QQ, 5, 5);
    for (std::size_t i = 0; i < p.size(); ++i) {
      total += p[i];
      EXPECT_EQ(image(p[i]), parts[i]);
      for (std::size_t j = 0; j < p.size(); ++j) {
        EXPECT_EQ(p[i] * p[j], i == j ? p[i] : Matrix(QQ, 5, 5));
      }
      // (P_i - I) vanishes on summand i
      EXPECT_TRUE(((p[i] - Matrix::identity(QQ, 5)) * parts[i].as_columns()).is_zero());
    }
    EXPECT_EQ(total, Matrix::identity(QQ, 5));
  }
}

TEST(LinalgProperty, PolyEvalIsMultiplicativeAndCommutesWithSimilarity) {
  Gen gen(17);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix m = gen.matrix(QQ, 4, 4, 3);
    const Matrix s = gen.invertible(QQ, 4);
    std::vector<Scalar> pc, qc;
    for (int k = 0; k < 4; ++k) pc.push_back(gen.scalar(QQ));
    for (int k = 0; k < 3; ++k) qc.push_back(gen.scalar(QQ));
    const Polynomial p(QQ, pc), r(QQ, qc);
    EXPECT_EQ(matrix_poly_eval(p * r, m), matrix_poly_eval(p, m) * matrix_poly_eval(r, m));
    EXPECT_EQ(matrix_poly_eval(p, s * m * s.inverse()), s * matrix_poly_eval(p, m) * s.inverse());
  }
}

TEST(LinalgProperty, InverseRoundTrip) {
  Gen gen(5);
  for (const Field f : {QQ, Field::prime(13)}) {
    for (int trial = 0; trial < 20; ++trial) {
      const Matrix m = gen.invertible(f, 5);
      EXPECT_EQ(m * m.inverse(), Matrix::identity(f, 5));
    }
  }
  EXPECT_EQ(code_of([] { mat(QQ, {{1, 2}, {2, 4}}).inverse(); }), ErrorCode::Singular);
}

TEST(AffineSolver, UniqueSolutionAndNullity) {
  // x + y = 3, x - y = 1
  AffineSolver s(QQ, 2);
  s.add_equation(vec(QQ, {1, 1}), q(3));
  EXPECT_EQ(s.nullity(), 1u);
  s.add_equation(vec(QQ, {1, -1}), q(1));
  s.add_equation(vec(QQ, {2, 0}), q(4));
  EXPECT_TRUE(s.consistent());
  EXPECT_EQ(s.nullity(), 0u);
  EXPECT_EQ(*s.particular_solution(), vec(QQ, {2, 1}));
  s.add_equation(vec(QQ, {0, 1}), q(2));
  EXPECT_FALSE(s.consistent());
}

TEST(AffineSolver, SandwichRecoversMatrix) {
  // With P = Q = I the sandwich pins X to M.
  Gen gen(8);
  const Matrix m = gen.matrix(QQ, 3, 3);
  AffineSolver s(QQ, 9);
  add_sandwich(s, Matrix::identity(QQ, 3), Matrix::identity(QQ, 3), m);
  ASSERT_EQ(s.nullity(), 0u);
  EXPECT_EQ(unknown_matrix(*s.particular_solution(), QQ, 3), m);
}

TEST(AffineSolver, CommutantOfDiagonalMatrix) {
  // Matrices commuting with diag(1,2,2) form a 1 + 4 = 5 dimensional space.
  AffineSolver s(QQ, 9);
  add_commutator(s, mat(QQ, {{1, 0, 0}, {0, 2, 0}, {0, 0, 2}}), Matrix(QQ, 3, 3));
  EXPECT_TRUE(s.consistent());
  EXPECT_EQ(s.nullity(), 5u);
}
