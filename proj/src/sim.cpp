#include "antlab/sim.hpp"

namespace antlab {

void validate_states(const Grid& grid, const RuleWord& w) {
  const std::uint8_t m = grid.max_state();
  if (m >= w.size()) {
    throw StateOutOfRange("grid contains state " + std::to_string(int(m)) +
                          " but rule word has only " + std::to_string(int(w.size())) +
                          " states");
  }
}

RunResult run(AntConfiguration conf, const RuleWord& w, std::int64_t steps,
              const RunOptions& options) {
  validate_states(conf.grid, w);
  RunResult result;
  if (options.record_trace) result.trace.reserve(static_cast<std::size_t>(steps));
  if (options.record_trajectory) result.trajectory.reserve(static_cast<std::size_t>(steps));

  if (options.record_trace || options.record_trajectory) {
    run_observed(
        conf, w, steps,
        [&](std::int64_t, Coord, std::uint8_t k, const AntConfiguration& c) {
          if (options.record_trace) result.trace.push_back(k);
          if (options.record_trajectory) result.trajectory.push_back(c.position);
        },
        options.max_cells);
  } else {
    for (std::int64_t t = 0; t < steps; ++t) {
      step_inplace(conf, w);
      if (options.max_cells > 0 && (t & 0xfff) == 0 &&
          conf.grid.stored_cells() > options.max_cells) {
        throw ResourceLimit("grid support exceeded max_cells");
      }
    }
  }
  result.conf = std::move(conf);
  return result;
}

VisitHistogram visit_histogram(AntConfiguration conf, const RuleWord& w, std::int64_t steps,
                               std::int64_t max_cells) {
  validate_states(conf.grid, w);
  VisitHistogram h;
  run_observed(
      conf, w, steps,
      [&](std::int64_t, Coord read_pos, std::uint8_t, const AntConfiguration&) {
        ++h.counts[read_pos];
      },
      max_cells);
  h.total = steps;
  for (const auto& [pos, n] : h.counts) {
    h.max_count = std::max(h.max_count, n);
    ++h.distribution[n];
  }
  return h;
}

}  // namespace antlab
