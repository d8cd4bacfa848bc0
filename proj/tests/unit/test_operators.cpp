#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "tdpair/operators.hpp"

using namespace tdpair;
using namespace tdpair::testing;

namespace {

struct Pipeline {
  TDSystem s;
  EvaluatedFamily ev;
  SplitApparatus sa;
  VarthetaSeq vt;
  OperatorPair ops;
};

Pipeline run(const TDSystem& s) {
  EvaluatedFamily ev(s.A(), s.theta);
  SplitApparatus sa = build_split_apparatus(s, ev, PolyFamily(s.theta));
  VarthetaSeq vt = vartheta(s.theta, compute_base(s));
  OperatorPair ops = build_operators(s, sa, ev, vt);
  return {s, ev, sa, vt, ops};
}

void expect_catalog(const Pipeline& p, const std::string& label, bool expansion_applies = true) {
  for (const auto& r : verify_operator_identities(p.s, p.sa, p.ev, p.vt, p.ops)) {
    if (r.id == "DELTA-EXPANSION" && !expansion_applies) {
      EXPECT_EQ(r.status, CheckStatus::Skipped) << label;
      continue;
    }
    EXPECT_EQ(r.status, CheckStatus::Pass) << label << " " << r.id << " " << r.detail;
  }
}

TDSystem conjugate(const TDSystem& s, const Matrix& g) {
  const Matrix gi = g.inverse();
  TDPair p{gi * s.A() * g, gi * s.A_star() * g};
  for (auto& cand : validate_td_pair(p))
    if (cand.theta == s.theta && cand.theta_star == s.theta_star) return cand;
  ADD_FAILURE() << "conjugated system lost its ordering";
  return s;
}

}  // namespace

TEST(Delta, DiameterOneExpansion) {
  const Pipeline p = run(preset_system("krawtchouk", 1));
  const Scalar gap = p.s.theta[0] - p.s.theta[1];
  EXPECT_EQ(p.vt.values[1], QQ.one());
  EXPECT_EQ(p.ops.Delta, Matrix::identity(QQ, 2) + p.ops.Psi * gap);
  EXPECT_EQ(p.ops.Delta_inv, Matrix::identity(QQ, 2) - p.ops.Psi * gap);
}

TEST(Delta, InverseAndFixedOnK0) {
  const Pipeline p = run(preset_system("racah", 5));
  EXPECT_EQ(p.ops.Delta * p.ops.Delta_inv, Matrix::identity(QQ, 6));
  for (const auto& v : p.sa.K[0].vectors()) EXPECT_EQ(p.ops.Delta * v, v);
}

TEST(Psi, NilpotentLoweringOfTheSplit) {
  const Pipeline p = run(preset_system("qracah", 5));
  Matrix power = Matrix::identity(QQ, 6);
  for (int k = 0; k < 5; ++k) power = power * p.ops.Psi;
  EXPECT_FALSE(power.is_zero());
  EXPECT_TRUE((power * p.ops.Psi).is_zero());
}

TEST(Psi, CharacterizationsAreUniqueAndAgree) {
  const Pipeline p = run(preset_system("krawtchouk", 4));
  const Characterized by_e = solve_psi_by_eigenspaces(p.s, p.ops.Delta);
  const Characterized by_r = solve_psi_by_commutator(p.s, p.sa);
  ASSERT_TRUE(by_e.value.has_value());
  ASSERT_TRUE(by_r.value.has_value());
  EXPECT_EQ(by_e.nullity, 0u);
  EXPECT_EQ(by_r.nullity, 0u);
  EXPECT_EQ(*by_e.value, p.ops.Psi);
  EXPECT_EQ(*by_r.value, p.ops.Psi);
  EXPECT_EQ(build_psi_by_characterization(p.s, p.ops.Delta), p.ops.Psi);
  EXPECT_EQ(build_psi_second_characterization(p.s, p.sa), p.ops.Psi);
}

TEST(Psi, LoosenedBoundEnlargesSolutionSpace) {
  for (std::size_t d = 2; d <= 5; ++d) {
    const Pipeline p = run(preset_system("qracah", d));
    const Characterized loose = solve_psi_by_eigenspaces(p.s, p.ops.Delta, true);
    EXPECT_TRUE(loose.consistent);
    EXPECT_GT(loose.nullity, 0u) << d;
  }
}

TEST(Psi, WrongDeltaDoesNotReproducePsi) {
  const Pipeline p = run(preset_system("krawtchouk", 3));
  const Characterized c = solve_psi_by_eigenspaces(p.s, p.ops.Delta_inv);
  if (c.value) {
    EXPECT_NE(*c.value, p.ops.Psi);
  }
}

TEST(Expansion, AlternatingOddDiameterFailsHypothesis) {
  const Pipeline p = run(preset_system("bannai_ito", 3));
  EXPECT_TRUE(p.vt.values[2].is_zero());
  try {
    expand_delta_in_psi(p.s.theta, p.vt, p.ops.Psi);
    FAIL() << "expected HypothesisFailed";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::HypothesisFailed);
    EXPECT_NE(std::string(e.what()).find("vartheta_2"), std::string::npos);
  }
  expect_catalog(p, "bannai_ito3", false);
}

TEST(Expansion, MatchesDeltaOnAlternatingEvenDiameter) {
  const Pipeline p = run(preset_system("bannai_ito", 4));
  const auto [dp, dip] = expand_delta_in_psi(p.s.theta, p.vt, p.ops.Psi);
  EXPECT_EQ(dp, p.ops.Delta);
  EXPECT_EQ(dip, p.ops.Delta_inv);
}

TEST(Catalog, KrawtchoukFour) { expect_catalog(run(preset_system("krawtchouk", 4)), "krawtchouk4"); }

TEST(Catalog, QRacahFive) { expect_catalog(run(preset_system("qracah", 5)), "qracah5"); }

TEST(Catalog, PrimeFieldReduction) { expect_catalog(run(reduced_preset_system("qracah", 5, 101)), "qracah5/101"); }

TEST(Catalog, TensorPairs) {
  expect_catalog(run(validate_td_pair(tensor_pair()).front()), "tensor2");
  expect_catalog(run(validate_td_pair(tensor_triple()).front()), "tensor3");
}

TEST(Catalog, TamperedPsiFails) {
  Pipeline p = run(preset_system("krawtchouk", 3));
  p.ops.Psi(0, 0) += QQ.one();
  bool any_fail = false;
  for (const auto& r : verify_operator_identities(p.s, p.sa, p.ev, p.vt, p.ops))
    if (r.status == CheckStatus::Fail) any_fail = true;
  EXPECT_TRUE(any_fail);
}

TEST(OperatorProperty, AllPresetsCommute) {
  for (const auto& [name, d] : all_presets(6)) {
    const Pipeline p = run(preset_system(name, d));
    EXPECT_EQ(p.ops.Delta * p.ops.Psi, p.ops.Psi * p.ops.Delta) << name << d;
  }
}

TEST(OperatorProperty, EquivariantUnderChangeOfBasis) {
  Gen gen(7);
  for (int trial = 0; trial < 6; ++trial) {
    const auto names = preset_names();
    const std::string name = names[gen.integer(0, long(names.size()) - 1)];
    const std::size_t d = gen.integer(2, 4);
    const Pipeline base = run(preset_system(name, d));
    const Matrix g = gen.invertible(QQ, d + 1);
    const Pipeline moved = run(conjugate(base.s, g));
    const Matrix gi = g.inverse();
    EXPECT_EQ(moved.ops.Delta, gi * base.ops.Delta * g) << name << d;
    EXPECT_EQ(moved.ops.Psi, gi * base.ops.Psi * g) << name << d;
    expect_catalog(moved, name + std::to_string(d) + " conjugated", moved.vt.all_nonzero);
  }
}
