#include "qslchan/qslt.hpp"

#include <doctest.h>

#include <array>
#include <cmath>
#include <random>

using namespace qslchan;

TEST_CASE("dephasing pure bound equals the concurrence, independent of mu") {
  for (double c : {0.1, 0.35, 0.5, 0.8, 0.96}) {
    const BellLikeState s = state_from_concurrence(c);
    double first = -1.0;
    for (double mu : {0.0, 0.25, 0.5, 0.75}) {
      for (double p : {0.15, 0.3, 0.6, 0.9}) {
        const auto r = qslt_pure_ratio({ChannelSpec(Family::PD, mu), s, DecayPoint(p)});
        CHECK(!r.stationary);
        CHECK(r.value == doctest::Approx(c).epsilon(1e-6));
        if (first < 0.0) first = r.value;
        CHECK(std::abs(r.value - first) < 1e-9);
      }
    }
  }
}

TEST_CASE("fully correlated dephasing is stationary under the pure bound") {
  const auto r = qslt_pure_ratio(
      {ChannelSpec(Family::PD, 1.0), state_from_concurrence(0.5), DecayPoint(0.3)});
  CHECK(r.stationary);
  CHECK(r.numerator < 1e-12);
}

TEST_CASE("fully correlated depolarizing pure bound is sqrt(1 - C^2)") {
  for (double p : {0.2, 0.5, 0.8}) {
    const auto r = qslt_pure_ratio(
        {ChannelSpec(Family::Depol, 1.0), state_from_concurrence(0.6), DecayPoint(p)});
    CHECK(r.value == doctest::Approx(0.8).epsilon(1e-6));
  }
  // alpha = 0.6 gives C = 0.96
  const auto r = qslt_pure_ratio(
      {ChannelSpec(Family::Depol, 1.0), BellLikeState(0.6), DecayPoint(0.5)});
  CHECK(r.value == doctest::Approx(0.28).epsilon(1e-6));
}

TEST_CASE("amplitude damping pure bound at the unentangled excited state") {
  const auto r = qslt_pure_ratio(
      {ChannelSpec(Family::AD, 0.0), BellLikeState(0.0), DecayPoint(0.5)});
  CHECK(r.numerator == doctest::Approx(0.75).epsilon(1e-9));
  CHECK(r.denominator == doctest::Approx(0.75).epsilon(1e-7));
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-7));
}

TEST_CASE("pure bound is rate independent and never exceeds one") {
  std::mt19937 rng(808);
  std::uniform_real_distribution<double> unit(0.05, 0.95);
  for (int i = 0; i < 40; ++i) {
    const Family f = std::array{Family::AD, Family::PD, Family::Depol}[rng() % 3];
    const double mu = unit(rng), alpha = unit(rng), p = unit(rng);
    const BellLikeState s(alpha);
    const auto slow = qslt_pure_ratio({ChannelSpec(f, mu, 0.25), s, DecayPoint(p)});
    const auto fast = qslt_pure_ratio({ChannelSpec(f, mu, 2.0), s, DecayPoint(p)});
    if (slow.stationary) {
      CHECK(fast.stationary);
      continue;
    }
    CHECK(slow.value == doctest::Approx(fast.value).epsilon(1e-10));
    CHECK(slow.value <= 1.0 + 1e-9);
    CHECK(slow.value >= 0.0);
  }
}

TEST_CASE("Schatten path integrals are ordered l1 >= l2 >= linf") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> unit(0.1, 0.9);
  for (int i = 0; i < 30; ++i) {
    const Family f = std::array{Family::AD, Family::PD, Family::Depol}[rng() % 3];
    const auto r = qslt_pure_ratio(
        {ChannelSpec(f, unit(rng)), BellLikeState(unit(rng)), DecayPoint(unit(rng))});
    CHECK(r.path_l1 >= r.path_l2 - 1e-12);
    CHECK(r.path_l2 >= r.path_linf - 1e-12);
    CHECK(r.path_linf > 0.0);
    // operator-norm route is the sharpest: denominator is the l = inf integral
    CHECK(r.denominator == doctest::Approx(r.path_linf).epsilon(1e-12));
  }
}

TEST_CASE("pure bound at endpoint 1 is stationary") {
  const auto r = qslt_pure_ratio(
      {ChannelSpec(Family::AD, 0.3), BellLikeState(0.5), DecayPoint(1.0)});
  CHECK(r.stationary);
}

TEST_CASE("mixed dephasing bound matches the closed form") {
  // alpha = beta = sqrt(1/2), gamma = 1/2, tau_d = 1:
  // tau_qsl = e^{-tau} (1 - mu) + mu
  const BellLikeState bell(std::sqrt(0.5));
  for (double mu : {0.0, 0.3, 0.6}) {
    for (double tau : {0.0, 0.5, 1.0, 2.0, 5.0}) {
      const auto r = qslt_mixed({ChannelSpec(Family::PD, mu, 0.5), bell, tau, 1.0});
      CHECK(!r.stationary);
      const double expect = std::exp(-tau) * (1.0 - mu) + mu;
      CHECK(r.value == doctest::Approx(expect).epsilon(1e-4));
      CHECK(r.value <= 1.0 + 1e-9);  // never exceeds the driving time
    }
  }
  // spot values
  const auto a = qslt_mixed({ChannelSpec(Family::PD, 0.0, 0.5), bell, 0.0, 1.0});
  CHECK(a.value == doctest::Approx(1.0).epsilon(1e-6));
  const auto b = qslt_mixed({ChannelSpec(Family::PD, 0.5, 0.5), bell, 2.0, 1.0});
  CHECK(b.value == doctest::Approx(0.5 * std::exp(-2.0) + 0.5).epsilon(1e-6));
}

TEST_CASE("mixed bound over a frozen window is stationary with value zero") {
  const auto r = qslt_mixed(
      {ChannelSpec(Family::PD, 1.0, 0.5), BellLikeState(std::sqrt(0.5)), 0.7, 1.0});
  CHECK(r.stationary);
  CHECK(r.value == 0.0);
}

TEST_CASE("halving the quadrature tolerance barely moves the results") {
  const BellLikeState s(0.45);
  for (Family f : {Family::AD, Family::PD, Family::Depol}) {
    const PureBoundQuery q{ChannelSpec(f, 0.4), s, DecayPoint(0.3)};
    const double coarse = qslt_pure_ratio(q, 1e-9).value;
    const double fine = qslt_pure_ratio(q, 5e-10).value;
    CHECK(std::abs(coarse - fine) < 1e-7);
  }
  const MixedBoundQuery m{ChannelSpec(Family::PD, 0.3, 0.5), s, 1.0, 1.0};
  CHECK(std::abs(qslt_mixed(m, 1e-9).value - qslt_mixed(m, 5e-10).value) < 1e-7);
}

TEST_CASE("closed-form oracle availability") {
  const BellLikeState s = state_from_concurrence(0.6);
  const DecayPoint p(0.4);
  const auto pd = oracle_ratio(ChannelSpec(Family::PD, 0.7), s, p);
  REQUIRE(pd.has_value());
  CHECK(*pd == doctest::Approx(0.6).epsilon(1e-12));
  const auto dep1 = oracle_ratio(ChannelSpec(Family::Depol, 1.0), s, p);
  REQUIRE(dep1.has_value());
  CHECK(*dep1 == doctest::Approx(0.8).epsilon(1e-12));
  CHECK(!oracle_ratio(ChannelSpec(Family::Depol, 0.5), s, p).has_value());
  CHECK(!oracle_ratio(ChannelSpec(Family::AD, 0.0), s, p).has_value());
}
