#include <gtest/gtest.h>

#include "support.hpp"

using namespace srank;
using namespace testing_support;

namespace {

Tensor e(int n, int i) { return basis_vector(n, i - 1); }

}  // namespace

TEST(Symmetrize, Examples) {
  const Tensor s = symmetrize(tensor_product(e(2, 1), e(2, 2)));
  EXPECT_EQ(s.symmetry(), Symmetry::symmetric);
  EXPECT_EQ(s.at({0, 1}), Complex(0.5));
  EXPECT_EQ(s.at({1, 0}), Complex(0.5));
  EXPECT_EQ(s.at({0, 0}), Complex(0.0));

  const Tensor v = random_symmetric(3, 3);
  EXPECT_LT(max_abs_diff(symmetrize(v), v), 1e-14);

  const Tensor a = tensor_product(e(2, 1), e(2, 2)) - tensor_product(e(2, 2), e(2, 1));
  EXPECT_EQ(symmetrize(a).max_abs(), 0.0);
}

TEST(Antisymmetrize, Examples) {
  const Tensor w = antisymmetrize(tensor_product(e(2, 1), e(2, 2)));
  EXPECT_EQ(w.symmetry(), Symmetry::antisymmetric);
  EXPECT_EQ(w.at({0, 1}), Complex(0.5));
  EXPECT_EQ(w.at({1, 0}), Complex(-0.5));
  EXPECT_EQ(antisymmetrize(tensor_product(e(2, 1), e(2, 1))).max_abs(), 0.0);
  EXPECT_LT(antisymmetrize(random_symmetric(3, 2)).max_abs(), 1e-15);
}

TEST(Projectors, IdempotentSelfAdjointOrthogonal) {
  for (int k = 2; k <= 4; ++k) {
    const Tensor u = random_tensor(4, k), w = random_tensor(4, k);
    EXPECT_LT(max_abs_diff(symmetrize(symmetrize(u)), symmetrize(u)), 1e-13);
    EXPECT_LT(max_abs_diff(antisymmetrize(antisymmetrize(u)), antisymmetrize(u)), 1e-13);
    EXPECT_LT(std::abs(inner_product(symmetrize(u), w) - inner_product(u, symmetrize(w))), 1e-12);
    EXPECT_LT(std::abs(inner_product(antisymmetrize(u), w) - inner_product(u, antisymmetrize(w))), 1e-12);
    EXPECT_LT(symmetrize(antisymmetrize(u)).max_abs(), 1e-14);
    EXPECT_LT(symmetry_defect(symmetrize(u), Symmetry::symmetric), 1e-14);
    EXPECT_LT(symmetry_defect(antisymmetrize(u), Symmetry::antisymmetric), 1e-14);
  }
}

TEST(Projectors, OrderGuard) {
  EXPECT_THROW(symmetrize(Tensor(1, kMaxProjectorOrder + 1)), Error);
}

TEST(VeeWedge, Examples) {
  const Tensor v = vee(e(2, 1), e(2, 2));
  EXPECT_EQ(v.at({0, 1}), Complex(0.5));
  EXPECT_EQ(v.at({1, 0}), Complex(0.5));

  // e2 ^ (e3 - e1) = e1^e2 + e2^e3
  const Tensor lhs = wedge(e(3, 2), e(3, 3) - e(3, 1));
  const Tensor rhs = wedge(e(3, 1), e(3, 2)) + wedge(e(3, 2), e(3, 3));
  EXPECT_LT(max_abs_diff(lhs, rhs), 1e-15);

  const Tensor odd = random_vector(3);
  EXPECT_LT(wedge(odd, odd).max_abs(), 1e-15);
  const Tensor odd3 = random_antisymmetric(4, 3);
  EXPECT_LT(wedge(odd3, odd3).max_abs(), 1e-14);
}

TEST(VeeWedge, GradedCommutativity) {
  for (int ka = 1; ka <= 2; ++ka)
    for (int kb = 1; kb <= 2; ++kb) {
      const Tensor a = random_tensor(3, ka), b = random_tensor(3, kb);
      const double sign = (ka * kb) % 2 ? -1.0 : 1.0;
      EXPECT_LT(max_abs_diff(wedge(a, b), Complex(sign) * wedge(b, a)), 1e-13);
      EXPECT_LT(max_abs_diff(vee(a, b), vee(b, a)), 1e-13);
    }
}

TEST(VeeWedge, DimensionMismatch) { EXPECT_THROW(vee(e(2, 1), e(3, 1)), Error); }

TEST(Permanent, Examples) {
  Matrix ones(2, 2);
  ones(0, 0) = ones(0, 1) = ones(1, 0) = ones(1, 1) = 1.0;
  EXPECT_EQ(permanent(ones), Complex(2.0));
  for (int m = 1; m <= 5; ++m) EXPECT_LT(std::abs(determinant(Matrix::identity(m)) - 1.0), 1e-15);
  Matrix abcd(2, 2);
  abcd(0, 0) = Complex(1, 2);
  abcd(0, 1) = Complex(3, -1);
  abcd(1, 0) = Complex(0.5, 0);
  abcd(1, 1) = Complex(-2, 1);
  EXPECT_LT(std::abs(permanent(abcd) - (abcd(0, 0) * abcd(1, 1) + abcd(0, 1) * abcd(1, 0))), 1e-14);
  EXPECT_EQ(permanent(Matrix(0, 0)), Complex(1.0));
}

TEST(Permanent, MatchesDefinition) {
  for (int m = 1; m <= 6; ++m) {
    Matrix a(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) a(i, j) = random_complex();
    const Complex p = permanent_by_definition(a);
    const Complex d = determinant_by_definition(a);
    EXPECT_LT(std::abs(permanent(a) - p), 1e-10 * std::max(1.0, std::abs(p)));
    EXPECT_LT(std::abs(determinant(a) - d), 1e-10 * std::max(1.0, std::abs(d)));
  }
}

TEST(Permanent, SizeGuard) { EXPECT_THROW(permanent(Matrix(kMaxPermanentSize + 1, kMaxPermanentSize + 1)), Error); }

TEST(InducedBasis, Examples) {
  const auto a32 = induced_basis(3, 2, BasisKind::antisymmetric);
  ASSERT_EQ(a32.size(), 3u);
  for (const auto& b : a32) {
    const Tensor expect = Complex(std::sqrt(2.0)) *
                          wedge(e(3, b.indices[0]), e(3, b.indices[1]));
    EXPECT_LT(max_abs_diff(b.tensor, expect), 1e-15);
  }
  EXPECT_EQ(induced_basis(3, 3, BasisKind::symmetric).size(), 10u);
  EXPECT_TRUE(induced_basis(2, 3, BasisKind::antisymmetric).empty());
}

TEST(InducedBasis, CardinalityAndOrthonormality) {
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k <= 3; ++k)
      for (auto kind : {BasisKind::symmetric, BasisKind::antisymmetric}) {
        const auto basis = induced_basis(n, k, kind);
        const long long expect = kind == BasisKind::symmetric ? binomial(n + k - 1, k) : binomial(n, k);
        ASSERT_EQ(static_cast<long long>(basis.size()), expect);
        for (std::size_t i = 0; i < basis.size(); ++i)
          for (std::size_t j = 0; j < basis.size(); ++j)
            EXPECT_NEAR(std::abs(inner_product(basis[i].tensor, basis[j].tensor)), i == j ? 1.0 : 0.0, 1e-12);
      }
}

TEST(InducedBasis, Normalization) {
  for (const auto& b : induced_basis(3, 3, BasisKind::symmetric)) {
    double expect = 6.0;
    for (int m : b.multiplicities) expect /= static_cast<double>(factorial(m));
    EXPECT_NEAR(b.normalization, std::sqrt(expect), 1e-14);
  }
  for (const auto& b : induced_basis(4, 3, BasisKind::antisymmetric)) EXPECT_NEAR(b.normalization, std::sqrt(6.0), 1e-14);
}

TEST(Pairings, PermanentAndDeterminantIdentities) {
  for (int k = 1; k <= 4; ++k) {
    const auto f = random_vectors(4, k), g = random_vectors(4, k);
    const Matrix m = gram(f, g);
    const double kf = static_cast<double>(factorial(k));
    const Complex sym = inner_product(vee_of(f), vee_of(g));
    const Complex alt = inner_product(wedge_of(f), wedge_of(g));
    const Complex per = permanent(m) / kf, det = determinant(m) / kf;
    EXPECT_LT(std::abs(sym - per), 1e-9 * std::abs(per));
    EXPECT_LT(std::abs(alt - det), 1e-9 * std::abs(det));
  }
}
