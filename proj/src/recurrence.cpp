#include "antlab/recurrence.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "antlab/sim.hpp"

namespace antlab {

namespace {

constexpr int kContextLen = 64;       // trailing trace symbols hashed per step
constexpr std::uint64_t kHashBase = 0x100000001b3ULL;
constexpr std::uint64_t kSampleMask = 0x1f;  // keep ~1/32 of hash values

struct Chain {
  std::vector<std::int64_t> anchors;
  std::int64_t increment = 0;
};

// Times sharing a (context hash, heading) bucket are candidate repetition
// anchors. A chain is a subsequence whose gaps form a strictly increasing
// arithmetic progression.
std::vector<Chain> find_chains(const std::vector<std::int64_t>& times, int min_gaps) {
  std::vector<Chain> chains;
  const std::size_t n = times.size();
  if (n < static_cast<std::size_t>(min_gaps) + 1) return chains;
  std::unordered_set<std::int64_t> in_bucket(times.begin(), times.end());

  for (std::size_t i = 0; i + 2 < n; ++i) {
    for (std::size_t j = i + 1; j < std::min(n, i + 9); ++j) {
      const std::int64_t g0 = times[j] - times[i];
      if (g0 < 16) continue;
      for (std::size_t k = j + 1; k < n; ++k) {
        const std::int64_t inc = (times[k] - times[j]) - g0;
        if (inc <= 0) continue;
        if (times[k] - times[j] != g0 + inc) continue;
        Chain c;
        c.anchors = {times[i], times[j], times[k]};
        c.increment = inc;
        std::int64_t gap = g0 + inc;
        while (true) {
          const std::int64_t next = c.anchors.back() + gap + inc;
          if (!in_bucket.contains(next)) break;
          c.anchors.push_back(next);
          gap += inc;
        }
        if (static_cast<int>(c.anchors.size()) >= min_gaps + 1) chains.push_back(std::move(c));
      }
    }
  }
  return chains;
}

std::vector<std::uint8_t> capture_window(const Grid& grid, Coord center, std::int64_t radius) {
  std::vector<std::uint8_t> out;
  out.reserve(static_cast<std::size_t>((2 * radius + 1) * (2 * radius + 1)));
  for (std::int64_t dy = -radius; dy <= radius; ++dy) {
    for (std::int64_t dx = -radius; dx <= radius; ++dx) {
      out.push_back(grid.get({center.x + dx, center.y + dy}));
    }
  }
  return out;
}

}  // namespace

std::optional<AffineRecurrence> detect_affine_recurrence(const AntConfiguration& conf0,
                                                         const RuleWord& w,
                                                         const RecurrenceBudget& budget) {
  if (budget.window_radius < 1) throw std::invalid_argument("window_radius must be >= 1");
  validate_states(conf0.grid, w);

  // Pass 1: rolling context hash over the trace; bucket sampled step counts.
  std::uint64_t pow_base = 1;
  for (int i = 0; i < kContextLen; ++i) pow_base *= kHashBase;

  std::vector<std::uint8_t> trace;
  std::vector<Coord> positions;
  std::vector<Heading> headings;
  trace.reserve(static_cast<std::size_t>(budget.max_steps));

  std::unordered_map<std::uint64_t, std::vector<std::int64_t>> buckets;
  AntConfiguration conf = conf0;
  std::uint64_t rolling = 0;
  run_observed(
      conf, w, budget.max_steps,
      [&](std::int64_t t, Coord, std::uint8_t k, const AntConfiguration& c) {
        trace.push_back(k);
        positions.push_back(c.position);
        headings.push_back(c.heading);
        rolling = rolling * kHashBase + (k + 1);
        if (t >= kContextLen) {
          rolling -= pow_base * (trace[static_cast<std::size_t>(t - kContextLen)] + 1);
        }
        if (t >= kContextLen && (rolling & kSampleMask) == 0) {
          // key mixes the context hash with the heading so anchors align poses
          buckets[rolling * 4 + static_cast<std::uint64_t>(c.heading)].push_back(t + 1);
        }
      },
      budget.max_cells);

  // Collect plausible chains, prefer more repetitions then earlier onset.
  std::vector<Chain> chains;
  for (auto& [key, times] : buckets) {
    if (times.size() < static_cast<std::size_t>(budget.min_repetitions) + 1) continue;
    if (times.size() > 512) continue;  // run interiors, not anchors
    auto found = find_chains(times, budget.min_repetitions);
    chains.insert(chains.end(), found.begin(), found.end());
  }
  std::sort(chains.begin(), chains.end(), [](const Chain& a, const Chain& b) {
    if (a.anchors.size() != b.anchors.size()) return a.anchors.size() > b.anchors.size();
    return a.anchors.front() < b.anchors.front();
  });
  if (chains.size() > 32) chains.resize(32);

  // Pass 2: verify pose displacement and window recurrence at the anchors.
  for (const Chain& chain : chains) {
    const auto pose_at = [&](std::int64_t t) { return positions[static_cast<std::size_t>(t - 1)]; };
    const Coord disp = pose_at(chain.anchors[1]) - pose_at(chain.anchors[0]);
    bool ok = true;
    for (std::size_t a = 1; a + 1 < chain.anchors.size(); ++a) {
      if (pose_at(chain.anchors[a + 1]) - pose_at(chain.anchors[a]) != disp) { ok = false; break; }
    }
    if (!ok) continue;

    AntConfiguration sim = conf0;
    std::int64_t at = 0;
    std::vector<std::uint8_t> base_window;
    std::vector<Box> boxes;
    std::vector<Coord> anchor_positions;
    for (std::size_t a = 0; a < chain.anchors.size() && ok; ++a) {
      run_observed(sim, w, chain.anchors[a] - at,
                   [](std::int64_t, Coord, std::uint8_t, const AntConfiguration&) {},
                   budget.max_cells);
      at = chain.anchors[a];
      auto window = capture_window(sim.grid, sim.position, budget.window_radius);
      if (a == 0) {
        base_window = std::move(window);
      } else if (window != base_window) {
        ok = false;
        break;
      }
      anchor_positions.push_back(sim.position);
      if (auto box = sim.grid.support_box()) boxes.push_back(*box);
      else boxes.push_back(Box{sim.position, sim.position});
    }
    if (!ok) continue;

    AffineRecurrence rec;
    rec.onset = chain.anchors.front();
    rec.base_length = chain.anchors[1] - chain.anchors[0];
    rec.increment = chain.increment;
    rec.displacement = disp;
    rec.repetitions = static_cast<std::int64_t>(chain.anchors.size()) - 1;
    rec.window_radius = budget.window_radius;
    rec.anchors = chain.anchors;
    rec.support_boxes = std::move(boxes);
    rec.anchor_positions = std::move(anchor_positions);
    rec.anchor_heading = headings[static_cast<std::size_t>(chain.anchors.front() - 1)];
    return rec;
  }
  return std::nullopt;
}

}  // namespace antlab
