#include "antlab/seedlab.hpp"

#include <algorithm>
#include <unordered_set>

#include "antlab/digest.hpp"
#include "antlab/errors.hpp"
#include "antlab/sim.hpp"

namespace antlab {

Pattern extract_highway_seed(const AntConfiguration& start, const RuleWord& w,
                             const HighwayCertificate& cert) {
  RunOptions opts;
  AntConfiguration at_onset = run(start, w, cert.onset, opts).conf;
  const auto box = at_onset.grid.support_box();

  const Coord d = cert.drift;
  const auto escaped = [&](Coord c) {
    if (!box) return true;
    return (d.x > 0 && c.x > box->hi.x) || (d.x < 0 && c.x < box->lo.x) ||
           (d.y > 0 && c.y > box->hi.y) || (d.y < 0 && c.y < box->lo.y);
  };

  Pattern seed;
  seed.name = cert.word + "-p" + std::to_string(cert.period);
  seed.word_hint = cert.word;
  seed.ant = cert.pose_start;
  seed.heading = cert.heading;
  seed.provenance = Provenance::Searched;
  for (const auto& [r, state] : cert.witness) {
    for (Coord c = r; !escaped(c); c += d) {
      const std::uint8_t s = at_onset.grid.get(c);
      if (s != 0) seed.cells[c] = s;
    }
  }
  return seed;
}

Pattern construct_family(const Pattern& base, const Pattern& link, const PlacementRule& rule,
                         int k) {
  if (k < 0) throw std::invalid_argument("link count must be >= 0");
  Pattern out = base;
  out.name = base.name + "(" + std::to_string(k) + ")";
  out.provenance = Provenance::Constructed;
  const auto place = [&](const Pattern& part, Coord offset) {
    for (const auto& [c, s] : part.cells) {
      const Coord at = c + offset;
      if (!out.cells.emplace(at, s).second) {
        throw OverlapError("component overlap at (" + std::to_string(at.x) + "," +
                           std::to_string(at.y) + ")");
      }
    }
  };
  for (int i = 0; i < k; ++i) place(link, rule.link_origin + i * rule.link_step);
  place(rule.bouncer, rule.bouncer_origin + k * rule.link_step);
  return out;
}

namespace {

std::vector<Pattern> enumerate_box(const ExhaustiveBoxGen& g) {
  std::vector<Coord> slots;
  for (std::int64_t y = 0; y < g.height; ++y)
    for (std::int64_t x = 0; x < g.width; ++x) slots.push_back({x, y});

  std::vector<Pattern> out;
  std::vector<std::size_t> chosen;
  const auto emit = [&]() {
    // mixed-radix counter over states 1..max_state for the chosen cells
    std::vector<std::uint8_t> states(chosen.size(), 1);
    while (true) {
      for (int h = 0; h < 4; ++h) {
        Pattern p;
        p.provenance = Provenance::Searched;
        p.heading = static_cast<Heading>(h);
        for (std::size_t i = 0; i < chosen.size(); ++i) p.cells[slots[chosen[i]]] = states[i];
        out.push_back(std::move(p));
      }
      std::size_t i = 0;
      for (; i < states.size(); ++i) {
        if (states[i] < g.max_state) {
          ++states[i];
          break;
        }
        states[i] = 1;
      }
      if (i == states.size()) break;
    }
  };
  const auto recurse = [&](auto&& self, std::size_t from) -> void {
    if (!chosen.empty()) emit();
    if (static_cast<std::int64_t>(chosen.size()) == g.max_cells) return;
    for (std::size_t i = from; i < slots.size(); ++i) {
      chosen.push_back(i);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  recurse(recurse, 0);
  return out;
}

std::vector<Pattern> enumerate_random(const RandomGen& g, std::uint8_t state_count) {
  SplitMix64 stream(g.seed);
  std::vector<Pattern> out;
  for (std::int64_t n = 0; n < g.count; ++n) {
    SplitMix64 rng(stream.next());
    Pattern p;
    p.name = "random-" + std::to_string(g.seed) + "-" + std::to_string(n);
    p.provenance = Provenance::Searched;
    for (std::int64_t y = 0; y < g.height; ++y) {
      for (std::int64_t x = 0; x < g.width; ++x) {
        if (rng.next_unit() < g.density) {
          p.cells[{x - g.width / 2, y - g.height / 2}] =
              static_cast<std::uint8_t>(1 + rng.next_below(state_count - 1));
        }
      }
    }
    p.heading = static_cast<Heading>(rng.next_below(4));
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<Pattern> enumerate_mutations(const MutationsGen& g, std::uint8_t state_count) {
  Coord lo{0, 0}, hi{0, 0};
  if (!g.base.cells.empty()) {
    lo = hi = g.base.cells.begin()->first;
    for (const auto& [c, s] : g.base.cells) {
      lo.x = std::min(lo.x, c.x);
      lo.y = std::min(lo.y, c.y);
      hi.x = std::max(hi.x, c.x);
      hi.y = std::max(hi.y, c.y);
    }
  }
  std::vector<Coord> sites;
  for (std::int64_t y = lo.y - 1; y <= hi.y + 1; ++y)
    for (std::int64_t x = lo.x - 1; x <= hi.x + 1; ++x) sites.push_back({x, y});

  std::vector<Pattern> out;
  const auto recurse = [&](auto&& self, const Pattern& p, std::size_t from, int left) -> void {
    if (left == 0) return;
    for (std::size_t i = from; i < sites.size(); ++i) {
      const Coord c = sites[i];
      const auto it = p.cells.find(c);
      const std::uint8_t cur = it == p.cells.end() ? 0 : it->second;
      for (std::uint8_t s = 0; s < state_count; ++s) {
        if (s == cur) continue;
        Pattern q = p;
        if (s == 0) q.cells.erase(c);
        else q.cells[c] = s;
        q.provenance = Provenance::Searched;
        out.push_back(q);
        self(self, q, i + 1, left - 1);
      }
    }
  };
  recurse(recurse, g.base, 0, g.edit_distance);
  return out;
}

}  // namespace

std::vector<Pattern> generate_seeds(const SeedSearchSpec& spec) {
  const RuleWord w = RuleWord::parse(spec.word);
  return std::visit(
      [&](const auto& g) -> std::vector<Pattern> {
        using G = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<G, ExhaustiveBoxGen>) return enumerate_box(g);
        else if constexpr (std::is_same_v<G, RandomGen>)
          return enumerate_random(g, static_cast<std::uint8_t>(w.size()));
        else return enumerate_mutations(g, static_cast<std::uint8_t>(w.size()));
      },
      spec.generator);
}

void BehaviorCatalog::rebuild_classes() { highway_classes = dedupe_highways(certificates); }

BehaviorCatalog search(const SeedSearchSpec& spec) {
  const RuleWord w = RuleWord::parse(spec.word);
  BehaviorCatalog catalog;
  catalog.word = spec.word;
  std::unordered_set<std::uint64_t> seen;
  for (const Pattern& seed : generate_seeds(spec)) {
    const AntConfiguration conf = apply_pattern(seed);
    const std::uint64_t digest = configuration_digest(conf);
    if (!seen.insert(digest).second) continue;
    CatalogEntry entry;
    entry.seed_digest = digest;
    entry.report = classify_behavior(conf, w, spec.budget);
    if (entry.report.certificate) catalog.certificates.push_back(*entry.report.certificate);
    catalog.entries.push_back(std::move(entry));
  }
  if (spec.dedupe) catalog.rebuild_classes();
  return catalog;
}

void merge_catalog(BehaviorCatalog& into, const BehaviorCatalog& incoming) {
  if (into.word != incoming.word) throw std::invalid_argument("catalog rule words differ");
  std::unordered_set<std::uint64_t> seen;
  for (const CatalogEntry& e : into.entries) seen.insert(e.seed_digest);
  for (const CatalogEntry& e : incoming.entries) {
    if (!seen.insert(e.seed_digest).second) continue;
    if (e.report.certificate) into.certificates.push_back(*e.report.certificate);
    into.entries.push_back(e);
  }
  into.rebuild_classes();
}

}  // namespace antlab
