#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>

namespace antlab {

struct Coord {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend constexpr Coord operator+(Coord a, Coord b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Coord operator-(Coord a, Coord b) { return {a.x - b.x, a.y - b.y}; }
  constexpr Coord& operator+=(Coord o) { x += o.x; y += o.y; return *this; }
  friend constexpr Coord operator*(std::int64_t k, Coord a) { return {k * a.x, k * a.y}; }
  auto operator<=>(const Coord&) const = default;
};

// x grows Right, y grows Up. Rendering flips y for screen space.
enum class Heading : std::uint8_t { Up = 0, Right = 1, Down = 2, Left = 3 };

constexpr Coord heading_vec(Heading h) {
  constexpr std::array<Coord, 4> v{{{0, 1}, {1, 0}, {0, -1}, {-1, 0}}};
  return v[static_cast<std::uint8_t>(h)];
}

constexpr Heading clockwise(Heading h) {
  return static_cast<Heading>((static_cast<std::uint8_t>(h) + 1) & 3);
}

constexpr Heading counterclockwise(Heading h) {
  return static_cast<Heading>((static_cast<std::uint8_t>(h) + 3) & 3);
}

constexpr char heading_char(Heading h) {
  constexpr std::array<char, 4> c{'U', 'R', 'D', 'L'};
  return c[static_cast<std::uint8_t>(h)];
}

// Accepts U/R/D/L (case-insensitive); returns true on success.
bool parse_heading(char c, Heading& out);

struct Box {
  Coord lo;  // min corner (inclusive)
  Coord hi;  // max corner (inclusive)

  std::int64_t width() const { return hi.x - lo.x + 1; }
  std::int64_t height() const { return hi.y - lo.y + 1; }
  bool operator==(const Box&) const = default;
};

struct CoordHash {
  std::size_t operator()(const Coord& c) const noexcept {
    std::uint64_t h = static_cast<std::uint64_t>(c.x) * 0x9e3779b97f4a7c15ULL;
    h ^= static_cast<std::uint64_t>(c.y) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

}  // namespace antlab
