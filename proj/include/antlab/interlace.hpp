#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "antlab/recurrence.hpp"

namespace antlab {

/// Decomposition of a trace into blocks t_n = u_0 v_0^n u_1 v_1^n ... u_{k-1} v_{k-1}^n.
/// Block t_0 is the start of the checked trace; runs grow by one copy of each
/// v_i per block, so block lengths form an arithmetic progression.
struct InterlacedDecomposition {
  std::vector<std::string> u;
  std::vector<std::string> v;

  std::size_t blocks() const { return u.size(); }
  std::int64_t block_length(std::int64_t n) const;
};

/// Number of complete blocks t_0..t_{m-1} that reproduce a prefix of `trace`
/// exactly. Stops at the first mismatch or when the next block would run past
/// the end of the trace.
std::int64_t check_interlaced(const std::string& trace, const InterlacedDecomposition& dec);

struct MinedInterlacing {
  InterlacedDecomposition decomposition;
  std::int64_t skip = 0;    // transient prefix of the trace not covered by the family
  std::int64_t blocks = 0;  // complete blocks matched after the skip
};

/// Extracts a decomposition from the trace segments between recurrence
/// anchors: consecutive segments differ by one inserted run copy per v_i, so
/// a minimal-insertion diff of two late segments yields the u_i and v_i. The
/// result is verified forward over the whole trace; traces are only
/// eventually interlaced, so a few leading blocks may be skipped.
std::optional<MinedInterlacing> mine_interlaced(const std::string& trace_from_onset,
                                                std::int64_t base_length,
                                                std::int64_t increment);

}  // namespace antlab
