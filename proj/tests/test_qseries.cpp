#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "seqfree/count_table.hpp"
#include "seqfree/generating_functions.hpp"
#include "seqfree/json_export.hpp"
#include "seqfree/series_checks.hpp"
#include "seqfree/series_eval.hpp"

namespace {

using namespace seqfree;

TruncatedSeries random_series(std::mt19937& rng, int M, int N, bool unit_constant = false) {
  std::uniform_int_distribution<int> coeff(-4, 4);
  TruncatedSeries s(M, N);
  for (int i = 0; i < M; ++i)
    for (int j = 0; j < N; ++j)
      if (rng() % 3 == 0) s.set(i, j, coeff(rng));
  if (unit_constant) s.set(0, 0, rng() % 2 ? 1 : -1);
  return s;
}

TEST(TruncatedSeries, RingLaws) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const int M = 1 + static_cast<int>(rng() % 6), N = 1 + static_cast<int>(rng() % 12);
    const auto a = random_series(rng, M, N), b = random_series(rng, M, N),
               c = random_series(rng, M, N);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * TruncatedSeries::one(M, N), a);
    EXPECT_EQ(a - a, TruncatedSeries(M, N));
    EXPECT_EQ(-(-a), a);
  }
}

TEST(TruncatedSeries, ReciprocalInvertsUnitConstant) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const int M = 1 + static_cast<int>(rng() % 5), N = 1 + static_cast<int>(rng() % 10);
    const auto a = random_series(rng, M, N, true);
    EXPECT_EQ(a * a.reciprocal(), TruncatedSeries::one(M, N));
  }
  auto bad = TruncatedSeries::monomial(2, 2, 2, 0, 0);
  EXPECT_THROW(bad.reciprocal(), std::domain_error);
}

TEST(TruncatedSeries, BinomialDivisionUndoesMultiplication) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    const int M = 1 + static_cast<int>(rng() % 5), N = 1 + static_cast<int>(rng() % 10);
    const auto a = random_series(rng, M, N);
    const int ci = static_cast<int>(rng() % 5) - 2;
    const int za = static_cast<int>(rng() % 3), qb = static_cast<int>(rng() % 3);
    if (za == 0 && qb == 0) continue;
    auto b = a;
    b.multiply_binomial(ci, za, qb);
    auto factor = TruncatedSeries::one(M, N);
    if (za < M && qb < N) factor.add(za, qb, ci);
    EXPECT_EQ(b, a * factor);
    b.divide_binomial(ci, za, qb);
    EXPECT_EQ(b, a);
  }
}

TEST(TruncatedSeries, BoxOperations) {
  TruncatedSeries s(3, 4);
  s.set(0, 0, 1);
  s.set(1, 2, -3);
  s.set(2, 1, 5);
  EXPECT_EQ(s.nonzero_count(), 3u);
  EXPECT_EQ(s.coeff(7, 7), 0);
  EXPECT_THROW(s.set(3, 0, 1), std::out_of_range);

  std::vector<std::tuple<int, int, int>> seen;
  s.for_each_nonzero([&](int i, int j, const big_int& c) { seen.emplace_back(i, j, static_cast<int>(c)); });
  EXPECT_EQ(seen, (std::vector<std::tuple<int, int, int>>{{0, 0, 1}, {2, 1, 5}, {1, 2, -3}}));

  const auto sh = s.shifted(1, 1);
  EXPECT_EQ(sh.coeff(1, 1), 1);
  EXPECT_EQ(sh.coeff(2, 3), -3);
  EXPECT_EQ(sh.nonzero_count(), 2u);

  // z -> zq^2 multiplies z^i q^j by q^{2i}.
  const auto sub = s.substitute_z_scale(2);
  EXPECT_EQ(sub.coeff(2, 1), 0);
  EXPECT_EQ(sub.coeff(1, 2), 0);
  EXPECT_EQ(sub.nonzero_count(), 1u);

  const auto at1 = s.specialize_z(0);
  EXPECT_EQ(at1.z_order(), 1);
  EXPECT_EQ(at1.z_slice(0), (std::vector<big_int>{1, 5, -3, 0}));
  const auto atq = s.specialize_z(1);
  EXPECT_EQ(atq.z_slice(0), (std::vector<big_int>{1, 0, 0, 2}));

  EXPECT_EQ(s.truncated(2, 2).nonzero_count(), 1u);
  EXPECT_THROW(s + TruncatedSeries(3, 5), std::invalid_argument);
}

TEST(Pochhammer, FiniteProductsExpandExactly) {
  // (z;q)_2 = (1 - z)(1 - zq)
  const auto s = expand({{1, 1, 0}, 1, 2}, 3, 3);
  TruncatedSeries want(3, 3);
  want.set(0, 0, 1);
  want.set(1, 0, -1);
  want.set(1, 1, -1);
  want.set(2, 1, 1);
  EXPECT_EQ(s, want);

  // (q;q)_inf = 1 - q - q^2 + q^5 + q^7 - ...
  const auto euler = expand({{1, 0, 1}, 1, std::nullopt}, 1, 13);
  EXPECT_EQ(euler.z_slice(0),
            (std::vector<big_int>{1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1}));

  // (1;q)_n vanishes for n >= 1, (2;q)_1 = -1, and the empty product is 1.
  EXPECT_EQ(expand({{1, 0, 0}, 1, 3}, 2, 5), TruncatedSeries(2, 5));
  EXPECT_EQ(expand({{2, 0, 0}, 1, 1}, 2, 5), -TruncatedSeries::one(2, 5));
  EXPECT_EQ(expand({{5, 0, 0}, 1, 0}, 2, 5), TruncatedSeries::one(2, 5));
}

TEST(Pochhammer, ReciprocalMatchesInverseOfProduct) {
  const PochhammerSpec p{{-2, 1, 1}, 2, std::nullopt};
  EXPECT_EQ(expand_reciprocal(p, 5, 15), expand(p, 5, 15).reciprocal());
  EXPECT_THROW(expand_reciprocal({{1, 0, 0}, 1, 2}, 2, 5), std::domain_error);
  EXPECT_THROW(expand({{1, 0, 1}, 0, 2}, 2, 5), std::invalid_argument);
}

TEST(DoubleSeries, MatchesCountsForSeveralK) {
  for (int k = 1; k <= 6; ++k) {
    const auto counts = count_dp({k, true}, 45, 45);
    EXPECT_EQ(theorem1_series(k, 46, 46), series_from_counts(counts, 46, 46)) << "k=" << k;
  }
}

TEST(DoubleSeries, KTwoAtZOneGivesGapTwoCounts) {
  const auto s = theorem1_series(2, distinct_z_order_for(10), 10).specialize_z(0);
  EXPECT_EQ(s.z_slice(0), (std::vector<big_int>{1, 1, 1, 1, 2, 2, 3, 3, 4, 5}));
}

TEST(DoubleSeries, DistinctZOrderSufficesAtZOne) {
  for (int N : {1, 2, 10, 37, 80}) {
    const int M = distinct_z_order_for(N);
    EXPECT_GE(M * (M + 1) / 2, N);
    EXPECT_EQ(theorem1_series(3, M, N).specialize_z(0),
              theorem1_series(3, N, N).specialize_z(0));
  }
}

TEST(DoubleSeries, ZSlicesAreGammaPolynomials) {
  for (int k = 2; k <= 4; ++k) {
    const auto s = theorem1_series(k, 12, 60);
    for (int n = 0; n < 12; ++n) EXPECT_EQ(s.z_slice(n), gamma_direct(k, n, 60).z_slice(0));
  }
  EXPECT_EQ(gamma_direct(3, 0, 10), TruncatedSeries::one(1, 10));
}

TEST(Andrews, MatchesRepeatedPartCounts) {
  for (int k = 1; k <= 5; ++k) {
    const auto counts = count_dp({k, false}, 35, 35);
    EXPECT_EQ(andrews_Gk_series(k, 36, 36), series_from_counts(counts, 36, 36)) << "k=" << k;
  }
}

TEST(Andrews, AtZOneStartsWithKnownCounts) {
  const auto s = andrews_Gk_series(2, 6, 6).specialize_z(0);
  EXPECT_EQ(s.z_slice(0), (std::vector<big_int>{1, 1, 2, 2, 4, 4}));
}

TEST(MacMahon, AgreesWithAndrewsForKTwo) {
  const auto r = compare_series("macmahon", macmahon_G2_series(40, 40), andrews_Gk_series(2, 40, 40));
  EXPECT_TRUE(r.passed()) << r.summary();
  EXPECT_EQ(r.compared, 1600u);
}

TEST(RogersRamanujan, SumsEqualProducts) {
  for (int z_power : {0, 1}) {
    const auto r = compare_series("rr", rr_sum_series(z_power, 300), rr_product_series(z_power, 300));
    EXPECT_TRUE(r.passed()) << r.summary();
  }
  EXPECT_EQ(rr_sum_bivariate(20, 40), theorem1_series(2, 20, 40));
  EXPECT_EQ(rr_sum_series(1, 40), theorem1_series(2, 40, 40).specialize_z(1));
}

TEST(Euler, BothExpansionsHold) {
  const std::vector<Monomial> xs{{1, 0, 1}, {1, 1, 1}, {1, 0, 2}, {-1, 1, 3}, {2, 1, 1}, {3, 2, 0}};
  for (const auto& x : xs)
    for (const auto& r : euler_identity_check(x, 8, 30)) EXPECT_TRUE(r.passed()) << r.summary();
  EXPECT_THROW(euler_identity_check({1, 0, 0}, 4, 4), std::domain_error);
}

TEST(QDifference, HoldsForDistinctSeries) {
  for (int k = 2; k <= 6; ++k)
    for (const auto& r : qdiff_check(k, 30, 30)) {
      EXPECT_TRUE(r.passed()) << r.summary();
      EXPECT_EQ(r.compared, 900u);
    }
  EXPECT_THROW(qdiff_check(1, 5, 5), std::invalid_argument);
}

TEST(QDifference, DetectsPerturbedCoefficients) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    auto s = theorem1_series(3, 20, 20);
    const int i = 1 + static_cast<int>(rng() % 10), j = static_cast<int>(rng() % 19);
    s.add(i, j, 1);
    bool caught = false;
    for (const auto& r : qdiff_check(3, s)) caught = caught || !r.passed();
    EXPECT_TRUE(caught) << "perturbation at z^" << i << " q^" << j;
  }
}

TEST(Recurrence, HoldsAndDetectsPerturbation) {
  for (int k = 2; k <= 5; ++k) {
    const auto r = fk_recurrence_check(k, 20, 60);
    EXPECT_TRUE(r.passed()) << r.summary();
  }
  auto s = theorem1_series(2, 20, 60);
  s.add(5, 30, -1);
  const auto r = fk_recurrence_check(2, s);
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.mismatches.front().i, 5);
}

TEST(SeriesEval, AgreesWithProductForKTwo) {
  // For k = 2 the value at z = 1 is the Rogers-Ramanujan product 1/(q, q^4; q^5)_inf.
  const real eps("0.5");
  const real q = exp(-eps);
  real prod = 1;
  for (int n = 1; n < 400; ++n)
    if (n % 5 == 1 || n % 5 == 4) prod /= 1 - pow(q, n);
  const auto v = eval_series_real(2, eps);
  EXPECT_LE(abs(v.value.value - prod) / prod, real("1e-20"));
  EXPECT_LE(v.tail_bound, real("1e-20"));
  EXPECT_GE(v.value.digits, 19);
}

TEST(SeriesEval, TailBoundAndBudget) {
  EXPECT_TRUE(isinf(distinct_tail_bound(real("0.01"), 10)));
  EXPECT_LT(distinct_tail_bound(real(1), 200), real("1e-70"));
  EXPECT_THROW(eval_series_real(2, real("0.01"), 1000), budget_exceeded);
  EXPECT_THROW(eval_series_real(2, real(0)), std::domain_error);
}

TEST(JsonExport, SeriesLayout) {
  const auto s = theorem1_series(2, 3, 5);
  EXPECT_EQ(series_to_json(s, 2).dump(),
            R"({"k":2,"z_order":3,"q_order":5,"coeffs":[[0,0,"1"],[1,1,"1"],[1,2,"1"],[1,3,"1"],[1,4,"1"],[2,4,"1"]]})");
}

}  // namespace
