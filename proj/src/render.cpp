#include "antlab/render.hpp"

#include <algorithm>
#include <fstream>

namespace antlab {

namespace {

std::uint8_t gray(std::uint8_t state) {
  if (state == 0) return 255;
  const int g = 255 - 24 * state;
  return static_cast<std::uint8_t>(std::max(g, 15));
}

// fixed palette for states 1..10+ (state 0 is the page background)
const char* color(std::uint8_t state) {
  static const char* kColors[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                  "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
  return kColors[(state - 1) % 10];
}

void write_file(const std::string& data, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
}

}  // namespace

Box render_box(const AntConfiguration& conf, std::int64_t margin) {
  Box box{conf.position, conf.position};
  if (const auto support = conf.grid.support_box()) {
    box.lo.x = std::min(box.lo.x, support->lo.x);
    box.lo.y = std::min(box.lo.y, support->lo.y);
    box.hi.x = std::max(box.hi.x, support->hi.x);
    box.hi.y = std::max(box.hi.y, support->hi.y);
  }
  box.lo.x -= margin;
  box.lo.y -= margin;
  box.hi.x += margin;
  box.hi.y += margin;
  return box;
}

std::string render_pgm(const Grid& grid, const Box& box) {
  const std::int64_t w = box.width(), h = box.height();
  std::string out = "P5\n" + std::to_string(w) + " " + std::to_string(h) + "\n255\n";
  out.reserve(out.size() + static_cast<std::size_t>(w * h));
  for (std::int64_t y = box.hi.y; y >= box.lo.y; --y) {
    for (std::int64_t x = box.lo.x; x <= box.hi.x; ++x) {
      out.push_back(static_cast<char>(gray(grid.get({x, y}))));
    }
  }
  return out;
}

void save_pgm(const Grid& grid, const Box& box, const std::string& path) {
  write_file(render_pgm(grid, box), path);
}

std::string render_svg(const AntConfiguration& conf, const Box& box) {
  const std::int64_t w = box.width(), h = box.height();
  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 " +
         std::to_string(w) + " " + std::to_string(h) + "\">\n";
  out += "<rect width=\"" + std::to_string(w) + "\" height=\"" + std::to_string(h) +
         "\" fill=\"white\"/>\n";
  for (const auto& [c, s] : conf.grid.nonzero_cells()) {
    if (c.x < box.lo.x || c.x > box.hi.x || c.y < box.lo.y || c.y > box.hi.y) continue;
    out += "<rect x=\"" + std::to_string(c.x - box.lo.x) + "\" y=\"" +
           std::to_string(box.hi.y - c.y) + "\" width=\"1\" height=\"1\" fill=\"" +
           std::string(color(s)) + "\"/>\n";
  }
  const Coord a = conf.position;
  if (a.x >= box.lo.x && a.x <= box.hi.x && a.y >= box.lo.y && a.y <= box.hi.y) {
    out += "<circle cx=\"" + std::to_string(a.x - box.lo.x) + ".5\" cy=\"" +
           std::to_string(box.hi.y - a.y) + ".5\" r=\"0.4\" fill=\"black\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

void save_svg(const AntConfiguration& conf, const Box& box, const std::string& path) {
  write_file(render_svg(conf, box), path);
}

}  // namespace antlab
