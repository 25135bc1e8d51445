#pragma once

#include <cstdint>
#include <vector>

#include "antlab/errors.hpp"
#include "antlab/geometry.hpp"

namespace antlab {

enum class GrowthModel : std::uint8_t { Constant, Linear };

const char* growth_model_name(GrowthModel m);

struct FittedFunction {
  GrowthModel model = GrowthModel::Constant;
  double intercept = 0.0;
  double slope = 0.0;       // per repetition; 0 for the constant model
  double max_residual = 0.0;
};

/// Growth/drift summary of a run sampled at repetition boundaries.
/// f: half-diagonal of the bounding box of each repetition's trajectory
/// segment. g: displacement of successive segment centers projected on the
/// principal drift direction. A highway has f constant and g linear; an
/// increasing rectangle has f linear and g constant; a cone has both linear
/// with slopes of the same order.
struct GrowthFit {
  FittedFunction f;
  FittedFunction g;
  Coord direction;              // principal drift direction, gcd-reduced; (0,0) if non-drifting
  double boundary_tolerance = 0.0;  // largest fit residual, in cells
  std::int64_t repetitions = 0;

  bool increasing() const { return f.model == GrowthModel::Linear; }
  bool drifting() const { return g.model == GrowthModel::Linear; }
};

/// Fits f and g from the trajectory split at `boundaries` (step indices into
/// `trajectory`, strictly increasing, at least 4 to expose a trend).
/// Throws DegenerateFit when the whole trajectory sits in a box too small to
/// carry a trend and std::invalid_argument on malformed inputs.
GrowthFit fit_growth(const std::vector<Coord>& trajectory,
                     const std::vector<std::int64_t>& boundaries);

}  // namespace antlab
