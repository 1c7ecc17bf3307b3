#include <gtest/gtest.h>

#include "hopf/hopf_core.hpp"
#include "hopf/poly.hpp"
#include "hopf/qsym.hpp"
#include "hopf/shuffle_algebra.hpp"
#include "oracles.hpp"

using namespace hopf;

TEST(IteratedCoproduct, ArityOneIsTheKey) {
  PolyAlgebra h;
  auto d = iterated_coproduct(h, PolyKey{3}, 1);
  EXPECT_EQ(d, LinComb<TensorKey<PolyKey>>::term({PolyKey{3}}));
  EXPECT_THROW(iterated_coproduct(h, PolyKey{3}, 0), std::invalid_argument);
}

TEST(IteratedCoproduct, PrimitiveX) {
  PolyAlgebra h;
  auto d = iterated_coproduct(h, PolyKey{1}, 2);
  LinComb<TensorKey<PolyKey>> expected;
  expected.add_term({PolyKey{0}, PolyKey{1}}, 1);
  expected.add_term({PolyKey{1}, PolyKey{0}}, 1);
  EXPECT_EQ(d, expected);
}

TEST(IteratedCoproduct, PowerSumsOverWeakOrderedPartitions) {
  PolyAlgebra h;
  for (int n = 0; n <= 5; ++n)
    for (std::size_t k = 1; k <= 4; ++k) {
      auto d = iterated_coproduct(h, PolyKey{n}, k);
      Scalar total = 0;
      for (const auto& [t, c] : d) {
        int sum = 0;
        for (const auto& x : t) sum += x.exponent;
        EXPECT_EQ(sum, n);
        total += c;
      }
      Scalar kn = 1;
      for (int i = 0; i < n; ++i) kn *= static_cast<int>(k);
      EXPECT_EQ(total, kn);
    }
}

TEST(Takeuchi, UnitMapsToUnit) {
  QSymFundamental h;
  EXPECT_EQ(takeuchi_antipode(h, Composition{}), LinComb<Composition>::term(Composition{}));
}

TEST(Takeuchi, MatchesRecursiveDefinition) {
  {
    QSymFundamental h;
    oracle::RecursiveAntipode<QSymFundamental> rec(h);
    for (int n = 1; n <= 5; ++n)
      for (const auto& a : compositions_of(n)) EXPECT_EQ(takeuchi_antipode(h, a), rec(a));
  }
  {
    ShuffleAlgebra h;
    oracle::RecursiveAntipode<ShuffleAlgebra> rec(h);
    for (const auto& w : words_up_to(3, 4)) EXPECT_EQ(takeuchi_antipode(h, w), rec(w));
  }
}

TEST(Takeuchi, ProjectedCoproductHasNoUnitFactors) {
  QSymMonomial h;
  TakeuchiEvaluator<QSymMonomial> ev(h);
  for (std::size_t k = 1; k <= 4; ++k)
    for (const auto& [t, c] : ev.projected_coproduct(Composition{1, 2, 1}, k)) {
      EXPECT_EQ(t.size(), k);
      for (const auto& x : t) EXPECT_FALSE(x.empty());
    }
  EXPECT_TRUE(ev.projected_coproduct(Composition{1, 2, 1}, 5).empty());
}

TEST(AxiomCheck, DetectsWrongAntipode) {
  QSymFundamental h;
  auto wrong = [](const Composition& a) { return LinComb<Composition>::term(a); };
  EXPECT_FALSE(antipode_axiom_check(h, Composition{2, 1}, wrong));
  auto right = [&](const Composition& a) { return h.antipode_closed(a); };
  EXPECT_TRUE(antipode_axiom_check(h, Composition{2, 1}, right));
}

TEST(InvolutionVerifier, AcceptsPolyInvolution) {
  for (int n = 1; n <= 6; ++n) {
    auto report = verify_involution(poly_signed_set(n));
    EXPECT_TRUE(report.ok) << report.message;
    ASSERT_EQ(report.fixed_points.size(), 1u);
    std::vector<std::vector<int>> expected;
    for (int i = n; i >= 1; --i) expected.push_back({i});
    EXPECT_EQ(report.fixed_points[0].blocks, expected);
    EXPECT_EQ(report.signed_sum, n % 2 == 0 ? 1 : -1);
  }
}

TEST(InvolutionVerifier, RejectsBrokenMaps) {
  SignedSet<int> s;
  s.elements = {0, 1, 2, 3};
  s.sign = [](int x) { return x % 2 == 0 ? 1 : -1; };
  s.involution = [](int x) { return (x + 1) % 4; };
  auto r = verify_involution(s);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.message, "map is not an involution");

  s.involution = [](int x) { return x ^ 2; };  // pairs elements of equal sign
  r = verify_involution(s);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.message, "two-cycle does not reverse sign");

  s.involution = [](int x) { return x + 10; };
  EXPECT_FALSE(verify_involution(s).ok);

  s.involution = [](int x) { return x ^ 1; };
  r = verify_involution(s);
  EXPECT_TRUE(r.ok);
  EXPECT_TRUE(r.fixed_points.empty());
  EXPECT_EQ(r.signed_sum, 0);
}
