#include <doctest.h>

#include <cmath>

#include "antlab/classify.hpp"
#include "antlab/sim.hpp"

using namespace antlab;

TEST_CASE("interlaced block expansion and checking") {
  // t_n = u0 v0^n u1 v1^n with u0=ab v0=c u1=d v1=ef
  InterlacedDecomposition dec;
  dec.u = {"ab", "d"};
  dec.v = {"c", "ef"};
  CHECK(dec.block_length(0) == 3);
  CHECK(dec.block_length(1) == 6);
  CHECK(dec.block_length(2) == 9);

  const std::string exact = "abd" "abcdef" "abccdefef";
  CHECK(check_interlaced(exact, dec) == 3);
  CHECK(check_interlaced(exact + "abccc", dec) == 3);  // next block incomplete
  std::string broken = exact;
  broken[4] = 'x';
  CHECK(check_interlaced(broken, dec) == 1);
  CHECK(check_interlaced("", dec) == 0);
}

TEST_CASE("mining recovers a planted interlaced family") {
  InterlacedDecomposition dec;
  dec.u = {"001", "02"};
  dec.v = {"10", "2"};
  std::string trace;
  for (int n = 0; n < 12; ++n) {
    for (std::size_t i = 0; i < dec.u.size(); ++i) {
      trace += dec.u[i];
      for (int r = 0; r < n; ++r) trace += dec.v[i];
    }
  }
  const std::int64_t base = dec.block_length(0), inc = 3;  // |v0|+|v1| per block
  const auto mined = mine_interlaced(trace, base, inc);
  REQUIRE(mined.has_value());
  CHECK(mined->blocks >= 10);
  CHECK(check_interlaced(trace.substr(mined->skip), mined->decomposition) == mined->blocks);
}

TEST_CASE("growth fitting separates flat, drifting, and widening runs") {
  std::vector<Coord> traj;
  std::vector<std::int64_t> bounds;

  SUBCASE("constant span with linear drift (a highway)") {
    for (int rep = 0; rep < 12; ++rep) {
      bounds.push_back(static_cast<std::int64_t>(traj.size()));
      for (int i = 0; i < 40; ++i) traj.push_back({3 * rep + i % 4, -3 * rep - i % 3});
    }
    const GrowthFit fit = fit_growth(traj, bounds);
    CHECK_FALSE(fit.increasing());
    CHECK(fit.drifting());
    CHECK(fit.direction == Coord{1, -1});
  }
  SUBCASE("linear span with fixed centers (an increasing rectangle)") {
    for (int rep = 0; rep < 12; ++rep) {
      bounds.push_back(static_cast<std::int64_t>(traj.size()));
      const int r = 2 + 2 * rep;
      for (int i = -r; i <= r; ++i) {
        traj.push_back({i, r});
        traj.push_back({i, -r});
      }
    }
    const GrowthFit fit = fit_growth(traj, bounds);
    CHECK(fit.increasing());
    CHECK_FALSE(fit.drifting());
    CHECK(fit.direction == Coord{0, 0});
  }
  SUBCASE("both growing (a cone)") {
    for (int rep = 0; rep < 12; ++rep) {
      bounds.push_back(static_cast<std::int64_t>(traj.size()));
      const int r = 2 + 2 * rep;
      for (int i = 0; i <= r; ++i) traj.push_back({4 * rep + i, i});
    }
    const GrowthFit fit = fit_growth(traj, bounds);
    CHECK(fit.increasing());
    CHECK(fit.drifting());
  }
  SUBCASE("a run pinned to one spot cannot carry a trend") {
    for (int i = 0; i < 200; ++i) traj.push_back({i % 2, 0});
    for (int rep = 0; rep < 8; ++rep) bounds.push_back(25 * rep);
    CHECK_THROWS_AS(fit_growth(traj, bounds), DegenerateFit);
  }
  SUBCASE("malformed inputs are rejected") {
    for (int i = 0; i < 200; ++i) traj.push_back({i, i});
    CHECK_THROWS_AS(fit_growth(traj, {0, 50}), std::invalid_argument);         // too few
    CHECK_THROWS_AS(fit_growth(traj, {0, 50, 40, 90, 120}), std::invalid_argument);  // not increasing
  }
}

TEST_CASE("classification: the LR ant is a highway") {
  const BehaviorReport report = classify_behavior({}, RuleWord::parse("LR"));
  CHECK(report.behavior == BehaviorClass::Highway);
  REQUIRE(report.certificate.has_value());
  CHECK(report.certificate->period == 104);
}

TEST_CASE("classification: LLRLRLL from the empty grid builds a cone") {
  ClassifyBudget budget;
  budget.max_steps = 400'000;  // no highway in reach; go straight to structure
  budget.recurrence_steps = 300'000;
  const BehaviorReport report = classify_behavior({}, RuleWord::parse("LLRLRLL"), budget);
  CHECK(report.behavior == BehaviorClass::Cone);
  REQUIRE(report.recurrence.has_value());
  CHECK(report.recurrence->increment == 192);
  REQUIRE(report.growth.has_value());
  CHECK(report.growth->increasing());
  CHECK(report.growth->drifting());
  REQUIRE(report.interlacing.has_value());
  CHECK(report.interlacing->blocks >= 3);
}

TEST_CASE("classification degrades to resource-limited Unknown under a cell cap") {
  ClassifyBudget budget;
  budget.max_steps = 400'000;
  budget.max_cells = 4096;
  const BehaviorReport report = classify_behavior({}, RuleWord::parse("LLRRRL"), budget);
  CHECK(report.behavior == BehaviorClass::Unknown);
  CHECK(report.resource_limited);
}

TEST_CASE("affine recurrence of the cone run has arithmetic anchor gaps") {
  const auto rec = detect_affine_recurrence({}, RuleWord::parse("LLRLRLL"));
  REQUIRE(rec.has_value());
  CHECK(rec->increment == 192);
  CHECK(rec->repetitions >= 4);
  REQUIRE(rec->anchors.size() == static_cast<std::size_t>(rec->repetitions) + 1);
  for (std::size_t i = 1; i < rec->anchors.size(); ++i) {
    const std::int64_t gap = rec->anchors[i] - rec->anchors[i - 1];
    CHECK(gap == rec->base_length + static_cast<std::int64_t>(i - 1) * rec->increment);
  }
  // constant pose displacement between anchors
  for (std::size_t i = 1; i < rec->anchor_positions.size(); ++i)
    CHECK(rec->anchor_positions[i] - rec->anchor_positions[i - 1] == rec->displacement);
}
