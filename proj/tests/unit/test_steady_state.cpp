#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "auger/errors.hpp"
#include "auger/steady_state.hpp"
#include "test_support.hpp"

namespace auger {
namespace {

using testing::rel_diff;
using testing::unit_params;

TEST(SteadyN2, Examples) {
  EXPECT_DOUBLE_EQ(steady_n2(unit_params(1.0, 1.0, 2.0)), 1.0);
  // Weak pumping: root of x^2 + 1e-6 x - 1e-6 = 0, evaluated in 40-digit arithmetic.
  EXPECT_LE(rel_diff(steady_n2(unit_params(1e-6, 1.0, 1.0)), 9.995001249999921875e-4), 1e-14);
  auto p = unit_params(1.0, 1.0, 2.0);
  p.w_p = 0.0;
  EXPECT_EQ(steady_n2(p), 0.0);
}

TEST(SteadyN2, BalanceIdentityAcrossRegimes) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 2000; ++i) {
    const double r = testing::log_uniform(rng, 1e-8, 1e8);
    const double n = testing::log_uniform(rng, 1e3, 1e12);
    const double gamma = testing::log_uniform(rng, 1e-12, 1e-6);
    const auto p = unit_params(r * gamma * n, gamma, n);
    const double n2 = steady_n2(p);
    ASSERT_GT(n2, 0.0);
    ASSERT_LT(n2, n);
    const double lhs = p.w_p * (n - n2);
    const double rhs = gamma * n2 * n2;
    EXPECT_LE(std::abs(lhs - rhs), 1e-12 * lhs + 1e-14 * p.w_p * n) << "r = " << r;
  }
}

TEST(SteadyN2, TextbookFormAgreesWhereWellConditioned) {
  for (double r : {1e-4, 1e-2, 1.0, 10.0}) {
    const auto p = unit_params(r * 1e-9 * 1e10, 1e-9, 1e10);
    EXPECT_LE(rel_diff(steady_n2_textbook(p), steady_n2(p)), 1e-12) << r;
  }
}

TEST(SteadyN2, TextbookFormCancelsWhenSaturated) {
  const auto p = unit_params(1e14 * 1e-9 * 1e10, 1e-9, 1e10);
  const double n2 = steady_n2(p);
  const double balance = std::abs(p.w_p * (p.n_total - n2) - p.gamma_A * n2 * n2);
  EXPECT_LE(balance, 1e-10 * p.w_p * p.n_total);
  const double t = steady_n2_textbook(p);
  const double bad = std::abs(p.w_p * (p.n_total - t) - p.gamma_A * t * t);
  EXPECT_GT(bad, 1e-10 * p.w_p * p.n_total);
}

TEST(SteadyN2, MonotoneInPumpAndPopulation) {
  double prev = 0.0;
  for (double w = 1e-6; w < 1e12; w *= 1.7) {
    const double n2 = steady_n2(unit_params(w, 1e-9, 1e10));
    EXPECT_GT(n2, prev);
    prev = n2;
  }
  prev = 0.0;
  for (double n = 1.0; n < 1e15; n *= 1.9) {
    const double n2 = steady_n2(unit_params(1e3, 1e-9, n));
    EXPECT_GT(n2, prev);
    prev = n2;
  }
}

TEST(SteadyCurrent, IndependentOfShortLifetimes) {
  auto p = testing::reference_scale();
  const double base = steady_current(p);
  for (double tau : {1e-9, 1e-8, 1e-6, 1e-5}) {
    p.tau_1 = tau;
    p.tau_3 = 2.0 * tau;
    EXPECT_EQ(steady_current(p), base);
  }
}

TEST(SteadyCurrent, Limits) {
  // Weak: J / J_weak = 1 - n2/N ~ 1 - sqrt(r).
  auto weak = unit_params(1e-6 * 1e-9 * 1e10, 1e-9, 1e10);
  EXPECT_NEAR(steady_current(weak) / weak_limit_current(weak), 1.0 - 1e-3, 1e-6);
  weak.w_p = 1e-8 * 1e-9 * 1e10;
  EXPECT_LE(rel_diff(steady_current(weak), weak_limit_current(weak)), 2e-4);
  // At the regime boundary the linear law is already ~3% off.
  weak.w_p = 1e-3 * 1e-9 * 1e10;
  EXPECT_GT(rel_diff(steady_current(weak), weak_limit_current(weak)), 0.03);
  // Saturated: J / J_sat ~ 1 - 2/r.
  const auto sat = unit_params(1e3 * 1e-9 * 1e10, 1e-9, 1e10);
  EXPECT_LE(rel_diff(steady_current(sat), saturated_limit_current(sat)), 2e-3);
  EXPECT_GE(rel_diff(steady_current(sat), saturated_limit_current(sat)), 1.9e-3);
}

TEST(SteadyCurrent, ScalesLinearlyWithBeta) {
  auto p = testing::reference_scale();
  const double j = steady_current(p);
  p.beta = 0.05;
  EXPECT_DOUBLE_EQ(steady_current(p), 0.5 * j);
}

TEST(ClassifyRegime, Bounds) {
  auto at = [](double r) { return classify_regime(unit_params(r * 1e-9 * 1e10, 1e-9, 1e10)); };
  EXPECT_EQ(at(1e-3), Regime::weak);
  EXPECT_EQ(at(0.5e-2), Regime::weak);
  EXPECT_EQ(at(1.0), Regime::intermediate);
  EXPECT_EQ(at(50.0), Regime::intermediate);
  EXPECT_EQ(at(1e3), Regime::saturated);
  auto p = testing::reference_scale();
  p.w_p = 0.0;
  EXPECT_THROW(classify_regime(p), ZeroPump);
}

TEST(RegimeNames, RoundTrip) {
  for (auto r : {Regime::weak, Regime::intermediate, Regime::saturated}) {
    EXPECT_EQ(regime_from_string(to_string(r)), r);
  }
  EXPECT_THROW(regime_from_string("strong"), ValidationError);
}

TEST(SteadyPopulations, ReferenceScale) {
  const auto s = steady_populations(testing::reference_scale());
  EXPECT_NEAR(s.n1 / s.n0, 1e-4, 1e-8);
  EXPECT_NEAR(s.n3 / s.n0, 1e-4, 1e-8);
  EXPECT_DOUBLE_EQ(s.n0 + s.n2, 1e10);
  EXPECT_GT(s.n2, s.n1);
  EXPECT_EQ(s.regime, Regime::intermediate);
  EXPECT_DOUBLE_EQ(s.pump_ratio, 100.0);
  EXPECT_FALSE(s.approximation_degraded);
  EXPECT_FALSE(s.ode_residual.has_value());
}

TEST(SteadyPopulations, UnitExample) {
  auto p = unit_params(1.0, 1.0, 2.0);
  const auto s = steady_populations(p);
  EXPECT_DOUBLE_EQ(s.n2, 1.0);
  EXPECT_DOUBLE_EQ(s.n0, 1.0);
  EXPECT_NEAR(s.n1, 1e-7, 1e-13);
  EXPECT_NEAR(s.n3, 1e-7, 1e-13);
  EXPECT_DOUBLE_EQ(s.j_ph, 0.5);
}

TEST(SteadyPopulations, NoPump) {
  auto p = testing::reference_scale();
  p.w_p = 0.0;
  const auto s = steady_populations(p);
  EXPECT_EQ(s.n0, p.n_total);
  EXPECT_EQ(s.n1, 0.0);
  EXPECT_EQ(s.n2, 0.0);
  EXPECT_EQ(s.n3, 0.0);
  EXPECT_EQ(s.j_ph, 0.0);
  EXPECT_FALSE(s.regime.has_value());
  EXPECT_FALSE(steady_state_document(s).contains("regime"));
}

TEST(SteadyPopulations, FlagsDegradedApproximation) {
  auto p = testing::reference_scale();
  p.w_p = 1e6;  // w_p tau = 0.1
  p.gamma_A = 1e-4;
  EXPECT_TRUE(steady_populations(p).approximation_degraded);
}

TEST(SteadyPopulations, InversionOverWideRange) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 2000; ++i) {
    const double r = testing::log_uniform(rng, 1e-8, 1e8);
    const double n = testing::log_uniform(rng, 1e3, 1e12);
    const double s = testing::log_uniform(rng, 0.1, 10.0);
    auto p = unit_params(s * std::sqrt(r), s / (std::sqrt(r) * n), n);
    const auto sol = steady_populations(p);
    EXPECT_GT(sol.n2, 0.0);
    EXPECT_GT(sol.n2, sol.n1) << "r = " << r;
  }
}

TEST(VerifyAgainstOde, ReferenceScale) {
  const auto p = testing::reference_scale();
  const auto rep = verify_against_ode(p, default_solver_options(p));
  EXPECT_DOUBLE_EQ(rep.t_end, 2.0);
  EXPECT_LE(rep.n2_residual, 1e-5);
  EXPECT_GE(rep.n2_residual, 1e-6);  // the closed form drops n1 + n3
  EXPECT_TRUE(rep.inversion);
  EXPECT_LE(rep.conservation_error, 1e-12);
  ASSERT_TRUE(rep.analytic.ode_residual.has_value());
  EXPECT_EQ(*rep.analytic.ode_residual, rep.n2_residual);
}

TEST(VerifyAgainstOde, LongHorizonWithShortLifetimes) {
  // tau = 1e-7 against a 20 s horizon: the stiff solver must not hit the step cap.
  const auto p = unit_params(1.0, 1.0, 2.0);
  const auto rep = verify_against_ode(p, default_solver_options(p));
  EXPECT_DOUBLE_EQ(rep.t_end, 20.0);
  EXPECT_LE(rep.n2_residual, 1e-6);
  EXPECT_LT(rep.stats.accepted, 100000);
}

TEST(VerifyAgainstOde, ZeroPump) {
  auto p = testing::reference_scale();
  p.w_p = 0.0;
  EXPECT_THROW(verify_against_ode(p, default_solver_options(p)), ZeroPump);
}

TEST(SteadyStateDocument, Keys) {
  const auto doc = steady_state_document(steady_populations(testing::reference_scale()));
  EXPECT_EQ(doc.at("regime"), "intermediate");
  EXPECT_EQ(doc.at("approximation_degraded"), "false");
  EXPECT_FALSE(doc.contains("ode_residual"));
  EXPECT_DOUBLE_EQ(doc.number("pump_ratio"), 100.0);
}

}  // namespace
}  // namespace auger
