#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "antlab/classify.hpp"
#include "antlab/pattern.hpp"

namespace antlab {

/// Restriction of the configuration at the certificate's onset to the cells
/// the highway can ever read (the read set swept forward along the drift).
/// The result is a minimal self-contained seed: running it certifies the same
/// highway class with onset 0.
Pattern extract_highway_seed(const AntConfiguration& start, const RuleWord& w,
                             const HighwayCertificate& cert);

/// Places `k` copies of the link widget between the base widget and the
/// closing bouncer widget: link copy i goes at link_origin + i*link_step, the
/// bouncer at bouncer_origin + k*link_step. The ant pose comes from the base.
/// Throws OverlapError if any two placed components collide.
struct PlacementRule {
  Coord link_origin;
  Coord link_step;
  Pattern bouncer;
  Coord bouncer_origin;
};

Pattern construct_family(const Pattern& base, const Pattern& link, const PlacementRule& rule,
                         int k);

// --- seed generators -------------------------------------------------------

/// All patterns in a w×h box with at most max_cells nonzero cells, states
/// 1..max_state, every heading; enumerated in a fixed lexicographic order.
struct ExhaustiveBoxGen {
  std::int64_t width = 1, height = 1;
  std::int64_t max_cells = 1;
  std::uint8_t max_state = 1;
};

/// `count` random fills of a box, each cell nonzero with probability
/// `density`; fully determined by the 64-bit seed.
struct RandomGen {
  double density = 0.3;
  std::int64_t width = 16, height = 16;
  std::int64_t count = 100;
  std::uint64_t seed = 0;
};

/// All patterns within `edit_distance` single-cell edits of a base pattern
/// (cells inside the pattern's bounding box grown by one).
struct MutationsGen {
  Pattern base;
  int edit_distance = 1;
};

using SeedGenerator = std::variant<ExhaustiveBoxGen, RandomGen, MutationsGen>;

struct SeedSearchSpec {
  std::string word;
  SeedGenerator generator;
  ClassifyBudget budget;
  bool dedupe = true;
};

std::vector<Pattern> generate_seeds(const SeedSearchSpec& spec);

// --- catalog ----------------------------------------------------------------

struct CatalogEntry {
  std::uint64_t seed_digest = 0;  // configuration digest of the seed
  BehaviorReport report;
};

struct BehaviorCatalog {
  std::string word;
  std::vector<CatalogEntry> entries;
  std::vector<HighwayClass> highway_classes;          // over `certificates`
  std::vector<HighwayCertificate> certificates;       // one per certified entry

  /// Recomputes highway_classes from certificates (dedupe invariant).
  void rebuild_classes();
};

/// Classifies every generated seed in generation order. Per-seed ResourceLimit
/// is recorded on the entry, not fatal. Deterministic given the spec.
BehaviorCatalog search(const SeedSearchSpec& spec);

/// Append-merge: entries of `incoming` whose seed digest is new are appended,
/// then highway classes are rebuilt. Merging a catalog with itself is a no-op.
void merge_catalog(BehaviorCatalog& into, const BehaviorCatalog& incoming);

}  // namespace antlab
