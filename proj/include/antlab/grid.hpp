#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "antlab/geometry.hpp"

namespace antlab {

/// Unbounded sparse grid of cell states. Unstored cells are state 0.
/// Storage is chunked into 64x64 tiles keyed by tile coordinate; a one-entry
/// cache keeps the hot tile since the ant moves one cell per step.
class Grid {
 public:
  Grid() = default;
  Grid(const Grid& o) : tiles_(o.tiles_), nonzero_(o.nonzero_) {}
  Grid(Grid&& o) noexcept : tiles_(std::move(o.tiles_)), nonzero_(o.nonzero_) { o.reset_cache(); }
  Grid& operator=(const Grid& o) {
    tiles_ = o.tiles_;
    nonzero_ = o.nonzero_;
    reset_cache();
    return *this;
  }
  Grid& operator=(Grid&& o) noexcept {
    tiles_ = std::move(o.tiles_);
    nonzero_ = o.nonzero_;
    reset_cache();
    o.reset_cache();
    return *this;
  }

  static constexpr int kTileBits = 6;
  static constexpr int kTileSize = 1 << kTileBits;  // 64
  static constexpr std::int64_t kTileMask = kTileSize - 1;

  std::uint8_t get(Coord c) const;

  void set(Coord c, std::uint8_t state);

  // Pointer into the tile holding c, allocating the tile if needed. The
  // caller must report the state change through note_write so the nonzero
  // count stays exact. Valid until the tile map rehashes.
  std::uint8_t* cell_ref(Coord c);

  void note_write(std::uint8_t before, std::uint8_t after) {
    nonzero_ += (after != 0) - (before != 0);
  }

  std::int64_t nonzero_count() const { return nonzero_; }
  std::int64_t stored_cells() const { return static_cast<std::int64_t>(tiles_.size()) * kTileSize * kTileSize; }

  /// Smallest axis-aligned box containing all nonzero cells; nullopt for the
  /// all-zero grid.
  std::optional<Box> support_box() const;

  /// Sorted (by x, then y) list of nonzero cells with their states.
  std::vector<std::pair<Coord, std::uint8_t>> nonzero_cells() const;

  std::uint8_t max_state() const;

  bool operator==(const Grid& other) const { return nonzero_cells() == other.nonzero_cells(); }

 private:
  using Tile = std::array<std::uint8_t, kTileSize * kTileSize>;

  static std::uint64_t tile_key(std::int64_t tx, std::int64_t ty) {
    return static_cast<std::uint64_t>(static_cast<std::uint32_t>(tx)) << 32 |
           static_cast<std::uint32_t>(ty);
  }

  struct KeyHash {
    std::size_t operator()(std::uint64_t k) const noexcept {
      k ^= k >> 33;
      k *= 0xff51afd7ed558ccdULL;
      k ^= k >> 33;
      return static_cast<std::size_t>(k);
    }
  };

  void reset_cache() const {
    cached_key_ = ~0ULL;
    cached_tile_ = nullptr;
  }

  Tile* find_tile(Coord c) const;
  Tile& tile_for(Coord c);

  std::unordered_map<std::uint64_t, Tile, KeyHash> tiles_;
  std::int64_t nonzero_ = 0;

  mutable std::uint64_t cached_key_ = ~0ULL;
  mutable Tile* cached_tile_ = nullptr;
};

/// The tuple (grid, position, heading).
struct AntConfiguration {
  Grid grid;
  Coord position;
  Heading heading = Heading::Up;

  bool operator==(const AntConfiguration& o) const {
    return position == o.position && heading == o.heading && grid == o.grid;
  }
};

}  // namespace antlab
