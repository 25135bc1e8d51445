#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "antlab/digest.hpp"
#include "antlab/seedlab.hpp"
#include "antlab/sim.hpp"

using namespace antlab;

TEST_CASE("a highway run collapses to a minimal self-certifying seed") {
  const RuleWord lr = RuleWord::parse("LR");
  const auto cand = detect_highway({}, lr);
  REQUIRE(cand.has_value());
  auto res = certify_highway({}, lr, cand->onset, cand->period, cand->drift);
  const auto cert = std::get<HighwayCertificate>(res);

  const Pattern seed = extract_highway_seed({}, lr, cert);
  CHECK(seed.cells.size() < 100);  // tiny next to the ~5000-cell transient mess
  CHECK(seed.provenance == Provenance::Searched);

  // the seed certifies the same class immediately, onset 0
  const AntConfiguration from_seed = apply_pattern(seed);
  auto res0 = certify_highway(from_seed, lr, 0, cert.period, cert.drift);
  REQUIRE(std::holds_alternative<HighwayCertificate>(res0));
  const auto& cert0 = std::get<HighwayCertificate>(res0);
  CHECK(cert0.canonical_trace == cert.canonical_trace);
  CHECK(cert0.drift == cert.drift);
}

TEST_CASE("family construction places base, links, and bouncer") {
  Pattern base;
  base.name = "b";
  base.cells[{0, 0}] = 1;
  base.ant = {0, 1};
  base.heading = Heading::Right;

  Pattern link;
  link.cells[{2, 0}] = 2;

  Pattern bouncer;
  bouncer.cells[{3, 0}] = 3;

  PlacementRule rule{{0, 0}, {2, 0}, bouncer, {0, 0}};

  const Pattern p0 = construct_family(base, link, rule, 0);
  CHECK(p0.cells == std::map<Coord, std::uint8_t>{{{0, 0}, 1}, {{3, 0}, 3}});
  CHECK(p0.ant == base.ant);
  CHECK(p0.heading == base.heading);
  CHECK(p0.provenance == Provenance::Constructed);

  const Pattern p2 = construct_family(base, link, rule, 2);
  CHECK(p2.cells == std::map<Coord, std::uint8_t>{
                        {{0, 0}, 1}, {{2, 0}, 2}, {{4, 0}, 2}, {{7, 0}, 3}});

  // set difference of consecutive members is exactly one translated link
  const Pattern p3 = construct_family(base, link, rule, 3);
  std::map<Coord, std::uint8_t> extra;
  for (const auto& [c, s] : p3.cells)
    if (!p2.cells.count(c)) extra[c] = s;
  std::map<Coord, std::uint8_t> moved_bouncer{{{9, 0}, 3}};
  for (const auto& [c, s] : moved_bouncer) extra.erase(c);
  CHECK(extra == std::map<Coord, std::uint8_t>{{{6, 0}, 2}});

  // overlapping placements are an error, not silent corruption
  PlacementRule clash{{0, 0}, {0, 0}, bouncer, {0, 0}};
  CHECK_THROWS_AS(construct_family(base, link, clash, 2), OverlapError);
}

TEST_CASE("exhaustive generation is finite, in-box, and deduplicated") {
  SeedSearchSpec spec;
  spec.word = "LR";
  spec.generator = ExhaustiveBoxGen{2, 1, 1, 1};  // 2x1 box, one cell, state 1
  const auto seeds = generate_seeds(spec);
  CHECK_FALSE(seeds.empty());
  for (const auto& p : seeds) {
    CHECK(p.cells.size() <= 1);
    for (const auto& [c, s] : p.cells) {
      CHECK(0 <= c.x);
      CHECK(c.x < 2);
      CHECK(c.y == 0);
      CHECK(s == 1);
    }
  }
  for (std::size_t i = 0; i < seeds.size(); ++i)
    for (std::size_t j = i + 1; j < seeds.size(); ++j) CHECK_FALSE(seeds[i] == seeds[j]);
  CHECK(generate_seeds(spec) == seeds);  // fixed enumeration order
}

TEST_CASE("random generation is reproducible and seed-sensitive") {
  RandomGen g;
  g.count = 20;
  g.seed = 99;
  SeedSearchSpec spec;
  spec.word = "LLRRRL";
  spec.generator = g;
  const auto a = generate_seeds(spec);
  const auto b = generate_seeds(spec);
  CHECK(a.size() == 20);
  CHECK(a == b);
  g.seed = 100;
  spec.generator = g;
  CHECK(generate_seeds(spec) != a);
}

TEST_CASE("mutations stay within the edit distance") {
  Pattern base;
  base.cells[{0, 0}] = 1;
  base.cells[{1, 0}] = 2;
  base.word_hint = "LLR";
  SeedSearchSpec spec;
  spec.word = "LLR";
  spec.generator = MutationsGen{base, 1};
  const auto seeds = generate_seeds(spec);
  CHECK_FALSE(seeds.empty());
  for (const auto& p : seeds) {
    std::int64_t edits = 0;
    for (const auto& [c, s] : p.cells)
      if (!base.cells.count(c) || base.cells.at(c) != s) ++edits;
    for (const auto& [c, s] : base.cells)
      if (!p.cells.count(c)) ++edits;
    CHECK(edits <= 1);
  }
}

TEST_CASE("catalog search classifies every seed and dedupes highway classes") {
  SeedSearchSpec spec;
  spec.word = "LR";
  spec.generator = RandomGen{0.3, 6, 6, 8, 4242};
  spec.budget.max_steps = 60'000;
  spec.budget.recurrence_steps = 0;  // highway-or-unknown is enough here

  const BehaviorCatalog cat = search(spec);
  CHECK(cat.word == "LR");
  CHECK_FALSE(cat.entries.empty());
  CHECK(cat.entries.size() <= 8);
  for (const auto& e : cat.entries) CHECK(e.seed_digest != 0);

  std::size_t certified = 0;
  for (const auto& e : cat.entries)
    if (e.report.certificate) ++certified;
  CHECK(cat.certificates.size() == certified);

  // merging a catalog with itself must change nothing
  BehaviorCatalog merged = cat;
  merge_catalog(merged, cat);
  CHECK(merged.entries.size() == cat.entries.size());
  CHECK(merged.highway_classes.size() == cat.highway_classes.size());
}
