#include <gtest/gtest.h>

#include "support.hpp"

using namespace srank;
using namespace testing_support;

namespace {

Tensor e(int n, int i) { return basis_vector(n, i - 1); }

FourLegTensor random_phi(int n) { return FourLegTensor(random_tensor(n, 4), LegLayout::out_in_out_in); }

// Symmetric (antisymmetric) 2-tensor with Slater rank r built from an orthonormal system.
Tensor slater_state(int n, int r, bool fermionic) {
  const Matrix q = random_unitary(n, rng());
  std::uniform_real_distribution<double> lam(0.5, 2.0);
  Tensor v(n, 2);
  for (int i = 0; i < r; ++i) {
    if (fermionic) {
      v = v + Complex(lam(rng())) * wedge(vector_tensor(q.column(2 * i)), vector_tensor(q.column(2 * i + 1)));
    } else {
      const Tensor col = vector_tensor(q.column(i));
      v = v + Complex(lam(rng())) * vee(col, col);
    }
  }
  return v.retagged(fermionic ? Symmetry::antisymmetric : Symmetry::symmetric);
}

}  // namespace

TEST(Jamiolkowski, JIsAnInvolution) {
  const auto phi = random_phi(3);
  const auto jj = jam_J(jam_J(phi));
  EXPECT_EQ(jj.layout, phi.layout);
  EXPECT_EQ(max_abs_diff(jj.data, phi.data), 0.0);
}

TEST(Jamiolkowski, JSwapsDualLegs) {
  const FourLegTensor phi(product_of({e(4, 1), e(4, 2), e(4, 3), e(4, 4)}), LegLayout::out_in_out_in);
  const auto j = jam_J(phi);
  EXPECT_EQ(j.data.at({0, 3, 2, 1}), Complex(1.0));
  EXPECT_EQ(j.data.max_abs(), 1.0);
  EXPECT_EQ(norm(j.data), 1.0);
  const auto r = random_phi(3);
  const auto jr = jam_J(r);
  MultiIndex i(4, 0);
  do {
    EXPECT_EQ(jr.data.at({i[0], i[1], i[2], i[3]}), r.data.at({i[0], i[3], i[2], i[1]}));
  } while (next_index(3, i));
}

TEST(Jamiolkowski, DiagramCommutes) {
  for (int trial = 0; trial < 5; ++trial) {
    const auto phi = random_phi(3);
    EXPECT_LT(max_abs_diff(jam_J2(jam_J(phi)).data, jam_J1(phi).data), 1e-12);
    EXPECT_LT(max_abs_diff(jam_J2_inverse(jam_J1(phi)).data, jam_J(phi).data), 1e-12);
    EXPECT_EQ(jam_J1(phi).layout, LegLayout::out_out_in_in);
    EXPECT_EQ(jam_J2(jam_J(phi)).layout, LegLayout::out_out_in_in);
  }
}

TEST(Jamiolkowski, InversesAndNorms) {
  const auto phi = random_phi(3);
  EXPECT_EQ(max_abs_diff(jam_J1_inverse(jam_J1(phi)).data, phi.data), 0.0);
  EXPECT_EQ(max_abs_diff(jam_J2_inverse(jam_J2(jam_J(phi))).data, jam_J(phi).data), 0.0);
  for (const auto& out : {jam_J(phi), jam_J1(phi), jam_J2(jam_J(phi))}) EXPECT_NEAR(norm(out.data), norm(phi.data), 1e-12);
}

TEST(Jamiolkowski, LayoutChecked) {
  const auto phi = random_phi(2);
  EXPECT_THROW(jam_J2(phi), Error);
  EXPECT_THROW(jam_J1(jam_J(phi)), Error);
}

TEST(ClassifySa, Examples) {
  const auto phi = random_phi(3);
  EXPECT_EQ(classify_sa(phi), SelfAdjointClass::none);

  const Tensor sym = phi.data + permute(phi.data, Permutation({2, 3, 0, 1}));
  const auto cls = classify_sa(FourLegTensor(sym, LegLayout::out_in_out_in));
  EXPECT_NE(cls, SelfAdjointClass::none);

  const Tensor boson = vee(e(3, 1), e(3, 1)) + Complex(0.5) * vee(e(3, 2), e(3, 2));
  EXPECT_EQ(classify_sa(state_to_map(boson)), SelfAdjointClass::sa_plus);
  const Tensor fermion = wedge(e(4, 1), e(4, 2)) + Complex(0.3) * wedge(e(4, 3), e(4, 4));
  EXPECT_EQ(classify_sa(state_to_map(fermion)), SelfAdjointClass::sa_minus);
}

TEST(ClassifySa, SplittingOfSymmetrizedMaps) {
  const auto phi = random_phi(3);
  const Tensor sa = phi.data + permute(phi.data, Permutation({2, 3, 0, 1}));
  const FourLegTensor s(sa, LegLayout::out_in_out_in);
  const Tensor jp = sa + jam_J(s).data;
  const Tensor jm = sa - jam_J(s).data;
  EXPECT_EQ(classify_sa(FourLegTensor(jp, LegLayout::out_in_out_in)), SelfAdjointClass::sa_plus);
  EXPECT_EQ(classify_sa(FourLegTensor(jm, LegLayout::out_in_out_in)), SelfAdjointClass::sa_minus);
}

TEST(MapRank, Examples) {
  EXPECT_EQ(map_rank(state_to_map(vee(e(3, 1), e(3, 1)))), 1);
  EXPECT_EQ(map_rank(state_to_map(wedge(e(3, 1), e(3, 2)))), 4);
  const Tensor v2 = Complex(1.0 / std::sqrt(2.0)) * (vee(e(3, 1), e(3, 1)) + vee(e(3, 2), e(3, 2)));
  EXPECT_EQ(map_rank(state_to_map(v2)), 4);
  const Tensor w2 = normalized(wedge(e(4, 1), e(4, 2)) + wedge(e(4, 3), e(4, 4)));
  EXPECT_EQ(map_rank(state_to_map(w2)), 16);
}

TEST(MapRank, RankLaw) {
  for (int n = 2; n <= 8; ++n)
    for (int r = 1; r <= 3; ++r) {
      if (r <= n) {
        const Tensor v = slater_state(n, r, false);
        EXPECT_EQ(map_rank(state_to_map(v)), r * r) << "boson n=" << n << " r=" << r;
      }
      if (2 * r <= n) {
        const Tensor w = slater_state(n, r, true);
        EXPECT_EQ(map_rank(state_to_map(w)), 4 * r * r) << "fermion n=" << n << " r=" << r;
      }
    }
}

TEST(MapRank, RoundTripToDensity) {
  for (int trial = 0; trial < 6; ++trial) {
    const Tensor v = trial % 2 ? random_antisymmetric(4, 2) : random_symmetric(4, 2);
    const auto phi = state_to_map(v);
    EXPECT_LT(max_abs_diff(jam_J1(phi).data, density_tensor(v).data), 1e-10);
  }
}

TEST(MapRank, Errors) {
  EXPECT_THROW(state_to_map(random_tensor(3, 2)), Error);
  EXPECT_THROW(state_to_map(Tensor(3, 2).retagged(Symmetry::symmetric)), Error);
}
