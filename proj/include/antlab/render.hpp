#pragma once

#include <string>

#include "antlab/grid.hpp"

namespace antlab {

/// Binary PGM (P5, maxval 255), one byte per cell, top row = highest y.
/// Palette: state 0 maps to 255 (white); state s>0 maps to 255 - 24*s,
/// clamped at 15 — darker means higher state.
/// `box`: region to render; use render_box() for support plus margin.
std::string render_pgm(const Grid& grid, const Box& box);
void save_pgm(const Grid& grid, const Box& box, const std::string& path);

/// Minimal SVG 1.1: one unit square per nonzero cell (fixed 10-color
/// palette), a circle for the ant. Cells are emitted in sorted order so the
/// output is byte-stable.
std::string render_svg(const AntConfiguration& conf, const Box& box);
void save_svg(const AntConfiguration& conf, const Box& box, const std::string& path);

/// Support box grown by `margin`, always containing the ant; a 1x1 box at
/// the ant for an empty grid.
Box render_box(const AntConfiguration& conf, std::int64_t margin = 2);

}  // namespace antlab
