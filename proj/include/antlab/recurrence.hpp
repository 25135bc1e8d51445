#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "antlab/grid.hpp"
#include "antlab/rule_word.hpp"

namespace antlab {

/// Repeating structure with linearly growing repetitions: repetition k
/// (0-indexed from onset) takes base_length + k*increment steps, moves the
/// ant pose by a constant displacement, and the local pattern around the ant
/// (window_radius cells) recurs at every repetition boundary.
struct AffineRecurrence {
  std::int64_t onset = 0;         // step count at the first anchor
  std::int64_t base_length = 0;   // n0
  std::int64_t increment = 0;     // delta n, > 0
  Coord displacement;             // pose shift per repetition
  std::int64_t repetitions = 0;   // gaps observed
  std::int64_t window_radius = 8;
  std::vector<std::int64_t> anchors;       // repetitions+1 step counts
  std::vector<Box> support_boxes;          // support box at each anchor
  std::vector<Coord> anchor_positions;     // ant position at each anchor
  Heading anchor_heading = Heading::Up;
};

struct RecurrenceBudget {
  std::int64_t max_steps = 200'000;
  std::int64_t window_radius = 8;
  std::int64_t max_cells = 0;
  int min_repetitions = 4;  // gaps required in the anchor chain
};

/// Looks for anchor times whose trailing trace context and heading repeat
/// with gaps in arithmetic progression, then verifies constant pose
/// displacement and an identical local window at every anchor.
std::optional<AffineRecurrence> detect_affine_recurrence(const AntConfiguration& conf,
                                                         const RuleWord& w,
                                                         const RecurrenceBudget& budget = {});

}  // namespace antlab
