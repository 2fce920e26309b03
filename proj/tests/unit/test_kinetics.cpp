#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "auger/errors.hpp"
#include "auger/kinetics.hpp"
#include "auger/steady_state.hpp"
#include "test_support.hpp"

namespace auger {
namespace {

SystemParams unit_lifetimes() {
  SystemParams p = testing::reference_scale();
  p.w_p = 1.0;
  p.tau_1 = 1.0;
  p.tau_3 = 1.0;
  p.gamma_A = 1.0;
  p.n_total = 4.0;
  return p;
}

TEST(Rhs, HandComputedExample) {
  const auto d = rhs({1.0, 1.0, 1.0, 1.0, 0.0}, unit_lifetimes());
  EXPECT_DOUBLE_EQ(d.dn0, 1.0);
  EXPECT_DOUBLE_EQ(d.dn1, -0.5);
  EXPECT_DOUBLE_EQ(d.dn2, 0.0);
  EXPECT_DOUBLE_EQ(d.dn3, -1.0);
  EXPECT_DOUBLE_EQ(d.dn_a, 0.5);
}

TEST(Rhs, ReplenishedFeedsLevelZero) {
  const auto d = rhs({1.0, 1.0, 1.0, 1.0, 0.0}, unit_lifetimes(), Coupling::replenished);
  EXPECT_DOUBLE_EQ(d.dn0, 1.5);
  EXPECT_DOUBLE_EQ(d.dn0 + d.dn1 + d.dn2 + d.dn3, 0.0);
  EXPECT_DOUBLE_EQ(d.dn_a, 0.5);
}

TEST(Rhs, SumVanishesForRandomStates) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    auto p = testing::reference_scale();
    p.w_p = testing::log_uniform(rng, 1e-3, 1e9);
    p.gamma_A = testing::log_uniform(rng, 1e-15, 1e-3);
    PopulationState s{testing::log_uniform(rng, 1, 1e10), testing::log_uniform(rng, 1, 1e10),
                      testing::log_uniform(rng, 1, 1e10), testing::log_uniform(rng, 1, 1e10),
                      testing::log_uniform(rng, 1, 1e10)};
    const auto d = rhs(s, p);
    const double scale = std::abs(d.dn0) + std::abs(d.dn1) + std::abs(d.dn2) +
                         std::abs(d.dn3) + std::abs(d.dn_a);
    EXPECT_LE(std::abs(d.sum()), 1e-14 * scale);
  }
}

TEST(Rhs, NoPumpLeavesGroundStateUnchanged) {
  auto p = testing::reference_scale();
  p.w_p = 0.0;
  const auto d = rhs(ground_state(p.n_total), p);
  for (double v : d.to_array()) EXPECT_EQ(v, 0.0);
}

TEST(Jacobian, MatchesCentralDifferences) {
  std::mt19937_64 rng(5);
  for (const auto coupling : {Coupling::isolated, Coupling::replenished}) {
    for (int trial = 0; trial < 50; ++trial) {
      auto p = testing::reference_scale();
      p.w_p = testing::log_uniform(rng, 1e-2, 1e6);
      p.gamma_A = testing::log_uniform(rng, 1e-12, 1e-6);
      PopulationState s{testing::log_uniform(rng, 1e3, 1e9), testing::log_uniform(rng, 1e3, 1e9),
                        testing::log_uniform(rng, 1e3, 1e9), testing::log_uniform(rng, 1e3, 1e9),
                        0.0};
      const auto j = jacobian(s, p, coupling);
      auto y = s.to_array();
      for (std::size_t c = 0; c < 5; ++c) {
        const double h = 1e-6 * std::max(1.0, std::abs(y[c]));
        auto plus = y;
        auto minus = y;
        plus[c] += h;
        minus[c] -= h;
        const auto fp = rhs(PopulationState::from_array(plus), p, coupling).to_array();
        const auto fm = rhs(PopulationState::from_array(minus), p, coupling).to_array();
        // The rates are at most quadratic, so central differences are exact up
        // to rounding in the largest individual term.
        const double terms = (p.w_p + 2.0 / p.tau_1) * (y[0] + y[1] + y[2] + y[3]) +
                             2.0 * p.gamma_A * y[2] * y[2];
        for (std::size_t r = 0; r < 5; ++r) {
          const double fd = (fp[r] - fm[r]) / (2.0 * h);
          EXPECT_NEAR(j[r][c], fd, 1e-9 * std::abs(j[r][c]) + 1e-14 * terms / h)
              << "row " << r << " col " << c;
        }
      }
    }
  }
}

TEST(Integrate, NoPumpStaysInGroundState) {
  auto p = testing::reference_scale();
  p.w_p = 0.0;
  const auto traj = integrate(p, ground_state(p.n_total), 1.0, default_solver_options(p));
  for (const auto& s : traj.samples()) {
    EXPECT_EQ(s.state.n0, p.n_total);
    EXPECT_EQ(s.state.n2, 0.0);
    EXPECT_EQ(s.current, 0.0);
  }
}

TEST(Integrate, IsolatedConservesAllFiveAndReservoirGrows) {
  const auto p = testing::reference_scale();
  const auto traj = integrate(p, ground_state(p.n_total), 10.0, default_solver_options(p));
  EXPECT_EQ(traj.front().t, 0.0);
  EXPECT_EQ(traj.back().t, 10.0);
  EXPECT_EQ(traj.size(), kDefaultTrajectoryPoints + 1);
  EXPECT_LE(traj.max_conservation_error(), 1e-12);
  double prev = 0.0;
  for (const auto& s : traj.samples()) {
    EXPECT_GE(s.state.n_a, prev);
    prev = s.state.n_a;
    EXPECT_GE(s.state.n0, 0.0);
    EXPECT_GE(s.state.n2, 0.0);
  }
  // Isolated electrons leave for good: the bound levels drain.
  EXPECT_LT(traj.back().state.bound_total(), 0.5 * p.n_total);
}

TEST(Integrate, ReplenishedReachesExactFixedPoint) {
  // Fixed point of the replenished system, solved to 30 digits offline.
  const auto p = testing::reference_scale();
  const auto traj = integrate(p, ground_state(p.n_total), 2.0, default_solver_options(p),
                              Coupling::replenished);
  const auto& s = traj.back().state;
  EXPECT_LE(testing::rel_diff(s.n0, 98057969.531277862898), 1e-8);
  EXPECT_LE(testing::rel_diff(s.n2, 9901927323.2440149161), 1e-8);
  EXPECT_LE(testing::rel_diff(s.n1, 4902.408235740319113), 1e-6);
  EXPECT_LE(testing::rel_diff(s.n3, 9804.816471480638226), 1e-6);
  EXPECT_LE(traj.max_conservation_error(), 1e-12);
  // The closed form neglects n1 and n3; at this scale that costs ~2.4e-6.
  EXPECT_LE(testing::rel_diff(s.n2, steady_n2(p)), 1e-5);
  EXPECT_GT(s.n2, s.n1);
}

TEST(Integrate, ReplenishedUnitScaleFixedPoint) {
  auto p = testing::unit_params(1.0, 1.0, 2.0);
  const auto traj = integrate(p, ground_state(p.n_total), 60.0, default_solver_options(p),
                              Coupling::replenished);
  const auto& s = traj.back().state;
  EXPECT_LE(testing::rel_diff(s.n0, 0.99999993333334675926), 1e-8);
  EXPECT_LE(testing::rel_diff(s.n2, 0.99999991666667824074), 1e-8);
  EXPECT_LE(testing::rel_diff(s.n1, 4.9999991666668171296e-8), 1e-5);
  EXPECT_LE(testing::rel_diff(s.n3, 9.9999983333336342592e-8), 1e-5);
}

TEST(Integrate, CustomOutputGridGetsEndpointAppended) {
  const auto p = testing::reference_scale();
  const std::vector<double> grid{1e-6, 1e-3};
  const auto traj = integrate(p, ground_state(p.n_total), 1e-2, default_solver_options(p),
                              Coupling::isolated, grid);
  ASSERT_EQ(traj.size(), 4u);
  EXPECT_EQ(traj.samples()[1].t, 1e-6);
  EXPECT_EQ(traj.samples()[2].t, 1e-3);
  EXPECT_EQ(traj.back().t, 1e-2);
}

TEST(Integrate, StepLimitIsReported) {
  const auto p = testing::reference_scale();
  auto opts = default_solver_options(p);
  opts.max_steps = 10;
  EXPECT_THROW(integrate(p, ground_state(p.n_total), 10.0, opts), StepLimitExceeded);
}

TEST(Integrate, RejectsBadArguments) {
  const auto p = testing::reference_scale();
  auto opts = default_solver_options(p);
  EXPECT_THROW(integrate(p, ground_state(p.n_total), 0.0, opts), NonPositiveParameter);
  opts.rel_tol = -1.0;
  EXPECT_THROW(integrate(p, ground_state(p.n_total), 1.0, opts), NonPositiveParameter);
  PopulationState bad = ground_state(p.n_total);
  bad.n1 = -1.0;
  EXPECT_THROW(integrate(p, bad, 1.0, default_solver_options(p)), ValidationError);
}

TEST(RelaxationTimescale, Examples) {
  EXPECT_DOUBLE_EQ(relaxation_timescale(testing::reference_scale()), 0.1);
  EXPECT_DOUBLE_EQ(relaxation_timescale(testing::unit_params(1.0, 1.0, 1.0)), 1.0);
  EXPECT_DOUBLE_EQ(relaxation_timescale(testing::unit_params(1e6, 1.0, 1.0)), 1.0);
  auto p = testing::reference_scale();
  p.w_p = 0.0;
  EXPECT_THROW(relaxation_timescale(p), ZeroPump);
}

TEST(TrajectoryTable, Columns) {
  const auto p = testing::reference_scale();
  const std::vector<double> grid{1e-3};
  const auto t = trajectory_table(
      integrate(p, ground_state(p.n_total), 1e-3, default_solver_options(p), Coupling::isolated, grid));
  EXPECT_EQ(t.header(), (std::vector<std::string>{"t", "n0", "n1", "n2", "n3", "n_a", "j_ph"}));
  EXPECT_EQ(t.rows(), 2u);
}

TEST(CouplingNames, RoundTrip) {
  for (auto c : {Coupling::isolated, Coupling::replenished}) {
    EXPECT_EQ(coupling_from_string(to_string(c)), c);
  }
  EXPECT_THROW(coupling_from_string("open"), ValidationError);
}

}  // namespace
}  // namespace auger
