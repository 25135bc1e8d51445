#include "antlab/grid.hpp"

#include <algorithm>

namespace antlab {

namespace {

inline std::int64_t tile_coord(std::int64_t v) { return v >> Grid::kTileBits; }

inline int cell_index(Coord c) {
  return static_cast<int>((c.y & Grid::kTileMask) << Grid::kTileBits | (c.x & Grid::kTileMask));
}

}  // namespace

Grid::Tile* Grid::find_tile(Coord c) const {
  const std::uint64_t key = tile_key(tile_coord(c.x), tile_coord(c.y));
  if (cached_tile_ != nullptr && key == cached_key_) return cached_tile_;
  auto it = tiles_.find(key);
  if (it == tiles_.end()) return nullptr;
  cached_key_ = key;
  cached_tile_ = const_cast<Tile*>(&it->second);
  return cached_tile_;
}

Grid::Tile& Grid::tile_for(Coord c) {
  const std::uint64_t key = tile_key(tile_coord(c.x), tile_coord(c.y));
  if (cached_tile_ != nullptr && key == cached_key_) return *cached_tile_;
  auto [it, inserted] = tiles_.try_emplace(key);
  if (inserted) it->second.fill(0);
  cached_key_ = key;
  cached_tile_ = &it->second;
  return it->second;
}

std::uint8_t Grid::get(Coord c) const {
  const Tile* t = find_tile(c);
  return t ? (*t)[cell_index(c)] : 0;
}

void Grid::set(Coord c, std::uint8_t state) {
  if (state == 0 && find_tile(c) == nullptr) return;
  std::uint8_t& cell = tile_for(c)[cell_index(c)];
  note_write(cell, state);
  cell = state;
}

std::uint8_t* Grid::cell_ref(Coord c) { return &tile_for(c)[cell_index(c)]; }

std::optional<Box> Grid::support_box() const {
  std::optional<Box> box;
  for (const auto& [key, tile] : tiles_) {
    const std::int64_t tx = static_cast<std::int32_t>(key >> 32);
    const std::int64_t ty = static_cast<std::int32_t>(key & 0xffffffffULL);
    for (int iy = 0; iy < kTileSize; ++iy) {
      for (int ix = 0; ix < kTileSize; ++ix) {
        if (tile[iy << kTileBits | ix] == 0) continue;
        const Coord c{tx * kTileSize + ix, ty * kTileSize + iy};
        if (!box) {
          box = Box{c, c};
        } else {
          box->lo.x = std::min(box->lo.x, c.x);
          box->lo.y = std::min(box->lo.y, c.y);
          box->hi.x = std::max(box->hi.x, c.x);
          box->hi.y = std::max(box->hi.y, c.y);
        }
      }
    }
  }
  return box;
}

std::vector<std::pair<Coord, std::uint8_t>> Grid::nonzero_cells() const {
  std::vector<std::pair<Coord, std::uint8_t>> out;
  out.reserve(static_cast<std::size_t>(nonzero_));
  for (const auto& [key, tile] : tiles_) {
    const std::int64_t tx = static_cast<std::int32_t>(key >> 32);
    const std::int64_t ty = static_cast<std::int32_t>(key & 0xffffffffULL);
    for (int iy = 0; iy < kTileSize; ++iy) {
      for (int ix = 0; ix < kTileSize; ++ix) {
        const std::uint8_t s = tile[iy << kTileBits | ix];
        if (s != 0) out.push_back({{tx * kTileSize + ix, ty * kTileSize + iy}, s});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint8_t Grid::max_state() const {
  std::uint8_t m = 0;
  for (const auto& [key, tile] : tiles_) {
    for (std::uint8_t s : tile) m = std::max(m, s);
  }
  return m;
}

bool parse_heading(char c, Heading& out) {
  switch (c) {
    case 'U': case 'u': out = Heading::Up; return true;
    case 'R': case 'r': out = Heading::Right; return true;
    case 'D': case 'd': out = Heading::Down; return true;
    case 'L': case 'l': out = Heading::Left; return true;
    default: return false;
  }
}

}  // namespace antlab
