#include <gtest/gtest.h>

#include <boost/math/special_functions/lambert_w.hpp>
#include <cmath>
#include <random>

#include "auger/decay.hpp"
#include "auger/errors.hpp"
#include "auger/kinetics.hpp"
#include "test_support.hpp"

namespace auger {
namespace {

using testing::rel_diff;

// Nontrivial root of e^x = 1 + k x (k > 1) through the lower Lambert branch.
double crossover_oracle(double k) {
  const double w = boost::math::lambert_wm1(-std::exp(-1.0 / k) / k);
  return -w - 1.0 / k;
}

TEST(DecayLaws, Values) {
  EXPECT_DOUBLE_EQ(radiative_population(1e10, 1e-3, 0.0), 1e10);
  EXPECT_DOUBLE_EQ(radiative_population(1e10, 1e-3, 1e-3), 1e10 / std::exp(1.0));
  EXPECT_DOUBLE_EQ(auger_population(1e10, 1e-9, 0.0), 1e10);
  EXPECT_DOUBLE_EQ(auger_population(1e10, 1e-9, 0.1), 5e9);
}

TEST(DecayLaws, SatisfyTheirRateEquations) {
  const double n_z = 1e10;
  const double tau = 1e-3;
  const double gamma = 1e-9;
  for (double t = 1e-6; t < 10.0; t *= 3.0) {
    const double h = 1e-5 * t;
    const double dr = (radiative_population(n_z, tau, t + h) -
                       radiative_population(n_z, tau, t - h)) / (2 * h);
    const double da = (auger_population(n_z, gamma, t + h) -
                       auger_population(n_z, gamma, t - h)) / (2 * h);
    const double nr = radiative_population(n_z, tau, t);
    const double na = auger_population(n_z, gamma, t);
    if (nr > 1e-200) EXPECT_LE(rel_diff(dr, -nr / tau), 1e-6) << t;
    EXPECT_LE(rel_diff(da, -gamma * na * na), 1e-6) << t;
  }
}

TEST(DecayLaws, MatchFreeRateEquationsWithoutPump) {
  // With w_p = 0 and all population on level 2, the level-2 equation is the
  // pure Auger law.
  auto p = testing::reference_scale();
  p.w_p = 0.0;
  PopulationState s{0.0, 0.0, p.n_total, 0.0, 0.0};
  const std::vector<double> grid{0.01, 0.1, 1.0};
  const auto traj = integrate(p, s, 1.0, default_solver_options(p), Coupling::isolated, grid);
  for (std::size_t i = 1; i < traj.size(); ++i) {
    const auto& smp = traj.samples()[i];
    EXPECT_LE(rel_diff(smp.state.n2, auger_population(p.n_total, p.gamma_A, smp.t)), 1e-8);
  }
}

TEST(Crossover, MatchesLambertOracle) {
  for (double k : {1.5, 2.0, 10.0, 1e3, 1e6}) {
    const double tau = 1e-3;
    const double n_z = 1e10;
    const double gamma = k / (n_z * tau);
    const auto t = crossover_time(n_z, tau, gamma);
    ASSERT_TRUE(t.has_value()) << k;
    EXPECT_LE(rel_diff(*t / tau, crossover_oracle(k)), 1e-10) << k;
  }
}

TEST(Crossover, FrozenValues) {
  EXPECT_LE(rel_diff(*crossover_time(1.0, 1.0, 2.0), 1.256431208626169676982738), 1e-11);
  EXPECT_LE(rel_diff(*crossover_time(1.0, 1.0, 10.0), 3.614950427087530629681889), 1e-11);
  EXPECT_LE(rel_diff(*crossover_time(1.0, 1.0, 1e6), 16.6265089653662913458338), 1e-11);
}

TEST(Crossover, NoneWhenAugerNeverFaster) {
  EXPECT_FALSE(crossover_time(1e10, 1e-3, 1e-7).has_value());    // k = 1
  EXPECT_FALSE(crossover_time(1e10, 1e-3, 5e-8).has_value());    // k = 0.5
  EXPECT_FALSE(crossover_time(1e10, 1e-3, 1e-12).has_value());   // k = 1e-5
}

TEST(Crossover, CurvesAgreeAtRoot) {
  const double n_z = 1e8;
  const double tau = 2e-3;
  const double gamma = 3e-5;
  const double t = *crossover_time(n_z, tau, gamma);
  EXPECT_LE(rel_diff(radiative_population(n_z, tau, t), auger_population(n_z, gamma, t)), 1e-10);
  // Before the crossing the Auger curve is below, after it above.
  EXPECT_LT(auger_population(n_z, gamma, 0.5 * t), radiative_population(n_z, tau, 0.5 * t));
  EXPECT_GT(auger_population(n_z, gamma, 2.0 * t), radiative_population(n_z, tau, 2.0 * t));
}

TEST(Crossover, ScaleCovariance) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 50; ++i) {
    const double n_z = testing::log_uniform(rng, 1e3, 1e12);
    const double tau = testing::log_uniform(rng, 1e-6, 1.0);
    const double k = testing::log_uniform(rng, 1.1, 1e6);
    const double gamma = k / (n_z * tau);
    const double c = testing::log_uniform(rng, 1e-3, 1e3);
    const double base = *crossover_time(n_z, tau, gamma);
    EXPECT_LE(rel_diff(*crossover_time(n_z, c * tau, gamma / c), c * base), 1e-10);
    EXPECT_LE(rel_diff(*crossover_time(c * n_z, tau, gamma / c), base), 1e-10);
  }
}

TEST(HalfPopulationTime, ClosedForms) {
  EXPECT_LE(rel_diff(half_population_time(DecayKind::radiative, 1e10, 1e-3), 1e-3 * std::log(2.0)),
            1e-14);
  EXPECT_LE(rel_diff(half_population_time(DecayKind::auger, 1e10, 1e-9), 0.1), 1e-14);
  EXPECT_LE(rel_diff(half_population_time(DecayKind::auger, 3.0, 7.0), 1.0 / 21.0), 1e-14);
}

TEST(DecayCurves, GridValidation) {
  const std::vector<double> ok{0.0, 1.0, 2.0};
  const auto [rad, aug] = decay_curves(1.0, 1.0, 1.0, ok);
  EXPECT_EQ(rad.t, ok);
  EXPECT_EQ(aug.kind, DecayKind::auger);
  EXPECT_DOUBLE_EQ(aug.n2[1], 0.5);
  const std::vector<double> empty;
  const std::vector<double> late{1.0, 2.0};
  const std::vector<double> flat{0.0, 1.0, 1.0};
  EXPECT_THROW(decay_curves(1.0, 1.0, 1.0, empty), ValidationError);
  EXPECT_THROW(decay_curves(1.0, 1.0, 1.0, late), ValidationError);
  EXPECT_THROW(decay_curves(1.0, 1.0, 1.0, flat), ValidationError);
  EXPECT_THROW(decay_curves(0.0, 1.0, 1.0, ok), NonPositiveParameter);
  EXPECT_THROW(decay_curves(1.0, -1.0, 1.0, ok), NonPositiveParameter);
}

TEST(DecayTable, Columns) {
  const std::vector<double> grid{0.0, 0.5};
  const auto [rad, aug] = decay_curves(2.0, 1.0, 1.0, grid);
  const auto t = decay_table(rad, aug);
  EXPECT_EQ(t.header(), (std::vector<std::string>{"t", "n2_radiative", "n2_auger"}));
  EXPECT_DOUBLE_EQ(t.number(1, "n2_auger"), 1.0);
}

TEST(Bisect, FindsRoot) {
  const double r = bisect([](double x) { return x * x - 2.0; }, 0.0, 2.0, 1e-15);
  EXPECT_NEAR(r, std::sqrt(2.0), 4e-15);
}

}  // namespace
}  // namespace auger
