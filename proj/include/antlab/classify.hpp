#pragma once

#include <cstdint>
#include <optional>

#include "antlab/growth.hpp"
#include "antlab/highway.hpp"
#include "antlab/interlace.hpp"
#include "antlab/recurrence.hpp"

namespace antlab {

enum class BehaviorClass : std::uint8_t { Highway, IncreasingRectangle, Cone, Unknown };

const char* behavior_class_name(BehaviorClass c);

struct ClassifyBudget {
  std::int64_t max_steps = 1'000'000;       // highway detection run
  std::int64_t max_period = 10'000;
  std::int64_t recurrence_steps = 300'000;  // growth-structure run
  std::int64_t max_cells = 0;
  double rho = 10.0;  // cone test: f and g slopes must have ratio in [1/rho, rho]
};

struct BehaviorReport {
  BehaviorClass behavior = BehaviorClass::Unknown;
  std::optional<HighwayCertificate> certificate;  // Highway evidence
  std::optional<AffineRecurrence> recurrence;     // rectangle/cone evidence
  std::optional<GrowthFit> growth;
  std::optional<MinedInterlacing> interlacing;  // decomposition + blocks verified
  std::int64_t steps_simulated = 0;
  bool resource_limited = false;
};

/// Highway if a certificate is established; otherwise looks for an affine
/// recurrence and fits growth/drift over its repetitions: rectangle when the
/// span grows but the segment centers stay put, cone when both grow at the
/// same order; Unknown otherwise. Hitting the cell cap degrades the result to
/// Unknown with resource_limited set instead of throwing.
BehaviorReport classify_behavior(const AntConfiguration& conf, const RuleWord& w,
                                 const ClassifyBudget& budget = {});

}  // namespace antlab
