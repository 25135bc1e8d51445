#include "antlab/growth.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace antlab {

const char* growth_model_name(GrowthModel m) {
  return m == GrowthModel::Constant ? "constant" : "linear";
}

namespace {

// Slopes below this (cells per repetition) are treated as constant.
constexpr double kSlopeEps = 0.25;

FittedFunction fit_line(const std::vector<double>& ys) {
  const double n = static_cast<double>(ys.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t k = 0; k < ys.size(); ++k) {
    const double x = static_cast<double>(k);
    sx += x;
    sy += ys[k];
    sxx += x * x;
    sxy += x * ys[k];
  }
  const double denom = n * sxx - sx * sx;
  double slope = denom != 0.0 ? (n * sxy - sx * sy) / denom : 0.0;
  double intercept = (sy - slope * sx) / n;
  FittedFunction fit;
  if (std::abs(slope) < kSlopeEps) {
    slope = 0.0;
    intercept = sy / n;
    fit.model = GrowthModel::Constant;
  } else {
    fit.model = GrowthModel::Linear;
  }
  fit.slope = slope;
  fit.intercept = intercept;
  for (std::size_t k = 0; k < ys.size(); ++k) {
    fit.max_residual =
        std::max(fit.max_residual, std::abs(ys[k] - (intercept + slope * static_cast<double>(k))));
  }
  return fit;
}

struct DBox {
  double cx, cy, half_diag;
};

DBox segment_box(const std::vector<Coord>& traj, std::int64_t from, std::int64_t to) {
  Coord lo = traj[static_cast<std::size_t>(from)], hi = lo;
  for (std::int64_t t = from; t < to; ++t) {
    const Coord p = traj[static_cast<std::size_t>(t)];
    lo.x = std::min(lo.x, p.x);
    lo.y = std::min(lo.y, p.y);
    hi.x = std::max(hi.x, p.x);
    hi.y = std::max(hi.y, p.y);
  }
  const double w = static_cast<double>(hi.x - lo.x), h = static_cast<double>(hi.y - lo.y);
  return {(lo.x + hi.x) / 2.0, (lo.y + hi.y) / 2.0, std::hypot(w, h) / 2.0};
}

}  // namespace

GrowthFit fit_growth(const std::vector<Coord>& trajectory,
                     const std::vector<std::int64_t>& boundaries) {
  if (trajectory.size() < 100) throw std::invalid_argument("trajectory too short to fit");
  if (boundaries.size() < 4) throw std::invalid_argument("need at least 4 repetition boundaries");
  for (std::size_t i = 0; i < boundaries.size(); ++i) {
    const bool in_range = boundaries[i] >= 0 &&
                          boundaries[i] <= static_cast<std::int64_t>(trajectory.size());
    if (!in_range || (i > 0 && boundaries[i] <= boundaries[i - 1]))
      throw std::invalid_argument("boundaries must be strictly increasing step indices");
  }

  std::vector<DBox> boxes;
  for (std::size_t i = 0; i + 1 < boundaries.size(); ++i)
    boxes.push_back(segment_box(trajectory, boundaries[i], boundaries[i + 1]));

  GrowthFit out;
  out.repetitions = static_cast<std::int64_t>(boxes.size());

  std::vector<double> f_samples;
  for (const DBox& b : boxes) f_samples.push_back(b.half_diag);
  out.f = fit_line(f_samples);

  // Principal direction: overall displacement of segment centers.
  const double dx = boxes.back().cx - boxes.front().cx;
  const double dy = boxes.back().cy - boxes.front().cy;
  const double norm = std::hypot(dx, dy);
  const double span = segment_box(trajectory, boundaries.front(), boundaries.back()).half_diag;
  if (span < 1.0) throw DegenerateFit("trajectory confined to a sub-cell box");

  if (norm < 1.0) {
    out.direction = {0, 0};
    out.g = fit_line(std::vector<double>(boxes.size(), 0.0));
  } else {
    const auto rx = static_cast<std::int64_t>(std::llround(2 * dx)),
               ry = static_cast<std::int64_t>(std::llround(2 * dy));
    const std::int64_t g = std::gcd(std::abs(rx), std::abs(ry));
    out.direction = {rx / (g ? g : 1), ry / (g ? g : 1)};
    std::vector<double> g_samples;
    for (const DBox& b : boxes)
      g_samples.push_back(((b.cx - boxes.front().cx) * dx + (b.cy - boxes.front().cy) * dy) / norm);
    out.g = fit_line(g_samples);
  }
  out.boundary_tolerance = std::max(out.f.max_residual, out.g.max_residual);
  return out;
}

}  // namespace antlab
