#pragma once

#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "antlab/errors.hpp"
#include "antlab/grid.hpp"
#include "antlab/rule_word.hpp"

namespace antlab {

/// One transition of the ant: read k at the current cell, turn (R = clockwise,
/// L = counterclockwise), bump the departed cell to (k+1) mod |w|, move one
/// cell forward along the new heading.
inline void step_inplace(AntConfiguration& conf, const RuleWord& w) {
  std::uint8_t* cell = conf.grid.cell_ref(conf.position);
  const std::uint8_t k = *cell;
  conf.heading = w.turns_right(k) ? clockwise(conf.heading) : counterclockwise(conf.heading);
  const std::uint8_t next = static_cast<std::uint8_t>(k + 1 == w.size() ? 0 : k + 1);
  conf.grid.note_write(k, next);
  *cell = next;
  conf.position += heading_vec(conf.heading);
}

inline AntConfiguration step(AntConfiguration conf, const RuleWord& w) {
  step_inplace(conf, w);
  return conf;
}

// Throws StateOutOfRange if any stored state is >= |w|.
void validate_states(const Grid& grid, const RuleWord& w);

struct RunOptions {
  bool record_trace = false;
  bool record_trajectory = false;
  std::int64_t max_cells = 0;  // cap on stored grid cells; 0 = uncapped
};

struct RunResult {
  AntConfiguration conf;
  std::vector<std::uint8_t> trace;   // symbol read at each step
  std::vector<Coord> trajectory;     // position after each step
};

/// Iterates the transition `steps` times. Throws ResourceLimit when the grid
/// outgrows options.max_cells.
RunResult run(AntConfiguration conf, const RuleWord& w, std::int64_t steps,
              const RunOptions& options = {});

/// Step loop with a per-step observer: on_step(t, read_pos, read_symbol, conf)
/// is called after step t (conf already advanced). The cap is checked every
/// few thousand steps.
template <class F>
void run_observed(AntConfiguration& conf, const RuleWord& w, std::int64_t steps, F&& on_step,
                  std::int64_t max_cells = 0) {
  for (std::int64_t t = 0; t < steps; ++t) {
    const Coord read_pos = conf.position;
    std::uint8_t* cell = conf.grid.cell_ref(read_pos);
    const std::uint8_t k = *cell;
    conf.heading = w.turns_right(k) ? clockwise(conf.heading) : counterclockwise(conf.heading);
    const std::uint8_t next = static_cast<std::uint8_t>(k + 1 == w.size() ? 0 : k + 1);
    conf.grid.note_write(k, next);
    *cell = next;
    conf.position += heading_vec(conf.heading);
    on_step(t, read_pos, k, conf);
    if (max_cells > 0 && (t & 0xfff) == 0 && conf.grid.stored_cells() > max_cells) {
      throw ResourceLimit("grid support exceeded max_cells");
    }
  }
}

struct VisitHistogram {
  std::unordered_map<Coord, std::int64_t, CoordHash> counts;  // visits per cell acted on
  std::int64_t total = 0;
  std::int64_t max_count = 0;
  std::map<std::int64_t, std::int64_t> distribution;  // visit count -> number of cells
};

VisitHistogram visit_histogram(AntConfiguration conf, const RuleWord& w, std::int64_t steps,
                               std::int64_t max_cells = 0);

}  // namespace antlab
