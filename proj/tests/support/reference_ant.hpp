#pragma once

// Deliberately naive reference engine for oracle tests: a fixed dense array
// indexed by offset coordinates, no sparse storage, no shared code with the
// library's stepping loop beyond the rule-word alphabet.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace refant {

struct DenseAnt {
  int side;                        // the world is [-side/2, side/2)^2
  std::vector<std::uint8_t> cell;  // row-major, y major
  int x = 0, y = 0;
  int heading = 0;  // 0=up 1=right 2=down 3=left
  std::string word;

  explicit DenseAnt(const std::string& rule, int half_extent)
      : side(2 * half_extent), cell(static_cast<std::size_t>(side) * side, 0), word(rule) {}

  // touched-region bounds, so equality checks need not sweep the whole array
  int min_x = 0, max_x = 0, min_y = 0, max_y = 0;

  std::uint8_t& at(int cx, int cy) {
    const int ox = cx + side / 2, oy = cy + side / 2;
    if (ox < 0 || oy < 0 || ox >= side || oy >= side) throw std::out_of_range("dense world");
    min_x = std::min(min_x, cx);
    max_x = std::max(max_x, cx);
    min_y = std::min(min_y, cy);
    max_y = std::max(max_y, cy);
    return cell[static_cast<std::size_t>(oy) * side + ox];
  }

  // Returns the state read.
  std::uint8_t step() {
    std::uint8_t& c = at(x, y);
    const std::uint8_t k = c;
    if (word[k] == 'R')
      heading = (heading + 1) % 4;
    else
      heading = (heading + 3) % 4;
    c = static_cast<std::uint8_t>((k + 1) % word.size());
    switch (heading) {
      case 0: ++y; break;
      case 1: ++x; break;
      case 2: --y; break;
      default: --x; break;
    }
    return k;
  }
};

}  // namespace refant
