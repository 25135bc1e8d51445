#include <doctest.h>

#include "antlab/digest.hpp"
#include "antlab/sim.hpp"

using namespace antlab;

TEST_CASE("headings rotate in a 4-cycle and the vectors match") {
  Heading h = Heading::Up;
  CHECK(clockwise(h) == Heading::Right);
  CHECK(counterclockwise(h) == Heading::Left);
  for (int i = 0; i < 4; ++i) h = clockwise(h);
  CHECK(h == Heading::Up);
  for (int i = 0; i < 4; ++i) {
    const Heading a = static_cast<Heading>(i);
    CHECK(counterclockwise(clockwise(a)) == a);
    const Coord v = heading_vec(a), w = heading_vec(clockwise(a));
    CHECK(v.x * w.x + v.y * w.y == 0);  // quarter turns are orthogonal
    CHECK(std::abs(v.x) + std::abs(v.y) == 1);
  }
}

TEST_CASE("rule word parsing") {
  const RuleWord w = RuleWord::parse("lRrL");
  CHECK(w.letters() == "LRRL");
  CHECK(w.size() == 4);
  CHECK_FALSE(w.turns_right(0));
  CHECK(w.turns_right(1));
  CHECK(w.turns_right(2));
  CHECK_FALSE(w.turns_right(3));
  CHECK_THROWS_AS(RuleWord::parse(""), ParseError);
  CHECK_THROWS_AS(RuleWord::parse("LRX"), ParseError);
}

TEST_CASE("sparse grid stores and clears cells at arbitrary coordinates") {
  Grid g;
  CHECK(g.get({1'000'000'000'000, -7}) == 0);
  g.set({3, -4}, 2);
  g.set({-100000, 100000}, 5);
  CHECK(g.get({3, -4}) == 2);
  CHECK(g.get({-100000, 100000}) == 5);
  CHECK(g.nonzero_count() == 2);
  g.set({3, -4}, 0);
  CHECK(g.get({3, -4}) == 0);
  CHECK(g.nonzero_count() == 1);

  const auto cells = g.nonzero_cells();
  REQUIRE(cells.size() == 1);
  CHECK(cells[0].first == Coord{-100000, 100000});

  const auto box = g.support_box();
  REQUIRE(box.has_value());
  CHECK(box->lo == Coord{-100000, 100000});
  CHECK(box->hi == Coord{-100000, 100000});
  CHECK(Grid{}.support_box() == std::nullopt);
}

TEST_CASE("grid copies are independent (tile cache must not leak)") {
  Grid a;
  a.set({0, 0}, 1);
  a.get({0, 0});  // warm the cache
  Grid b = a;
  b.set({0, 0}, 3);
  b.set({70, 70}, 2);  // different tile
  CHECK(a.get({0, 0}) == 1);
  CHECK(a.get({70, 70}) == 0);
  CHECK(b.get({0, 0}) == 3);
  a = b;
  a.set({0, 0}, 2);
  CHECK(b.get({0, 0}) == 3);
}

TEST_CASE("single steps follow the turn-write-move rule") {
  const RuleWord lr = RuleWord::parse("LR");
  AntConfiguration c;  // empty grid, ant at origin facing up

  // state 0 is L: turn counterclockwise to Left, write 1, move to (-1,0)
  c = step(c, lr);
  CHECK(c.heading == Heading::Left);
  CHECK(c.position == Coord{-1, 0});
  CHECK(c.grid.get({0, 0}) == 1);

  // again state 0: turn to Down, write 1, move to (-1,-1)
  c = step(c, lr);
  CHECK(c.heading == Heading::Down);
  CHECK(c.position == Coord{-1, -1});

  // put a 1 under the ant: R turns it back toward Left and clears the cell
  c.grid.set({-1, -1}, 1);
  c = step(c, lr);
  CHECK(c.heading == Heading::Left);
  CHECK(c.grid.get({-1, -1}) == 0);
  CHECK(c.position == Coord{-2, -1});
}

TEST_CASE("run records trace and trajectory and is deterministic") {
  const RuleWord lr = RuleWord::parse("LR");
  RunOptions opts{true, true, 0};
  const RunResult a = run({}, lr, 5000, opts);
  const RunResult b = run({}, lr, 5000, opts);
  CHECK(a.trace.size() == 5000);
  CHECK(a.trajectory.size() == 5000);
  CHECK(a.trace == b.trace);
  CHECK(a.trajectory == b.trajectory);
  CHECK(configuration_digest(a.conf) == configuration_digest(b.conf));
  CHECK(a.conf.position == a.trajectory.back());

  // splitting a run commutes with running it in one piece
  const RunResult first = run({}, lr, 2000);
  const RunResult rest = run(first.conf, lr, 3000);
  CHECK(rest.conf == a.conf);
}

TEST_CASE("state validation rejects symbols outside the alphabet") {
  AntConfiguration c;
  c.grid.set({2, 2}, 3);
  CHECK_THROWS_AS(validate_states(c.grid, RuleWord::parse("LR")), StateOutOfRange);
  CHECK_NOTHROW(validate_states(c.grid, RuleWord::parse("LRRL")));
}

TEST_CASE("max_cells caps the run") {
  const RuleWord lr = RuleWord::parse("LR");
  RunOptions opts;
  opts.max_cells = 4096;  // one tile
  CHECK_THROWS_AS(run({}, lr, 200'000, opts), ResourceLimit);
}

TEST_CASE("visit histogram conserves the step count") {
  const VisitHistogram h = visit_histogram({}, RuleWord::parse("LR"), 20'000);
  CHECK(h.total == 20'000);
  std::int64_t weighted = 0, from_counts = 0;
  for (const auto& [visits, cells] : h.distribution) weighted += visits * cells;
  for (const auto& [cell, n] : h.counts) from_counts += n;
  CHECK(weighted == 20'000);
  CHECK(from_counts == 20'000);
  CHECK(h.max_count == std::prev(h.distribution.end())->first);
}

TEST_CASE("configuration digest is sensitive to every component") {
  AntConfiguration c;
  c.grid.set({5, 6}, 2);
  const std::uint64_t base = configuration_digest(c);

  AntConfiguration d = c;
  d.heading = Heading::Left;
  CHECK(configuration_digest(d) != base);

  d = c;
  d.position = {0, 1};
  CHECK(configuration_digest(d) != base);

  d = c;
  d.grid.set({5, 6}, 3);
  CHECK(configuration_digest(d) != base);

  d = c;
  CHECK(configuration_digest(d) == base);
}

TEST_CASE("splitmix64 reference stream") {
  SplitMix64 a(0), b(0);
  for (int i = 0; i < 10; ++i) CHECK(a.next() == b.next());
  // first values of the published splitmix64 sequence for seed 0
  SplitMix64 s(0);
  CHECK(s.next() == 16294208416658607535ULL);
  CHECK(s.next() == 7960286522194355700ULL);
  CHECK(s.next() == 487617019471545679ULL);
  SplitMix64 u(1);
  CHECK(u.next() != 16294208416658607535ULL);
  SplitMix64 r(42);
  for (int i = 0; i < 1000; ++i) {
    CHECK(r.next_below(7) < 7);
    const double x = r.next_unit();
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
  }
}
