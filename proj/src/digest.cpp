#include "antlab/digest.hpp"

namespace antlab {

std::uint64_t configuration_digest(const AntConfiguration& conf) {
  Fnv1a h;
  for (const auto& [cell, state] : conf.grid.nonzero_cells()) {
    h.feed_i64(cell.x);
    h.feed_i64(cell.y);
    h.feed_byte(state);
  }
  h.feed_i64(conf.position.x);
  h.feed_i64(conf.position.y);
  h.feed_byte(static_cast<std::uint8_t>(conf.heading));
  return h.value();
}

}  // namespace antlab
