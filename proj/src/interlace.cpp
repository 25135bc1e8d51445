#include "antlab/interlace.hpp"

#include <algorithm>

namespace antlab {

std::int64_t InterlacedDecomposition::block_length(std::int64_t n) const {
  std::int64_t len = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    len += static_cast<std::int64_t>(u[i].size());
    len += n * static_cast<std::int64_t>(v[i].size());
  }
  return len;
}

std::int64_t check_interlaced(const std::string& trace, const InterlacedDecomposition& dec) {
  if (dec.u.empty() || dec.u.size() != dec.v.size()) return 0;
  if (dec.block_length(0) == 0) return 0;
  std::int64_t matched = 0;
  std::size_t pos = 0;
  for (std::int64_t n = 0;; ++n) {
    const std::int64_t len = dec.block_length(n);
    if (pos + static_cast<std::size_t>(len) > trace.size()) break;
    bool ok = true;
    for (std::size_t i = 0; i < dec.u.size() && ok; ++i) {
      ok = trace.compare(pos, dec.u[i].size(), dec.u[i]) == 0;
      pos += dec.u[i].size();
      for (std::int64_t r = 0; r < n && ok; ++r) {
        ok = trace.compare(pos, dec.v[i].size(), dec.v[i]) == 0;
        pos += dec.v[i].size();
      }
    }
    if (!ok) break;
    ++matched;
  }
  return matched;
}

namespace {

struct Insertion {
  std::size_t pos;  // position in the shorter segment where the run copy goes
  std::string text;
};

// Diffs consecutive blocks t_q (A) and t_{q+1} (B): B equals A with one extra
// copy of each v_i spliced in. Alignment minimizing the number of contiguous
// insertion blocks (that number is the block count k), resolved by dynamic
// programming over (chars of A consumed, chars inserted so far, whether the
// previous op was an insertion). Matching is preferred on ties, which pushes
// each insertion to the end of its v_i^q run — the spot strip_runs expects.
std::optional<std::vector<Insertion>> diff_blocks(const std::string& a, const std::string& b,
                                                  std::int64_t total_inserted) {
  const std::size_t n = a.size(), dn = static_cast<std::size_t>(total_inserted);
  if (b.size() != n + dn) return std::nullopt;
  constexpr std::uint16_t kInf = 0xffff;
  // cost[(i*(dn+1) + d)*2 + s]: min insertion blocks to finish from a[i..]
  // with d chars already inserted; s = 1 while inside an insertion block.
  std::vector<std::uint16_t> cost((n + 1) * (dn + 1) * 2, kInf);
  const auto at = [&](std::size_t i, std::size_t d, int s) -> std::uint16_t& {
    return cost[(i * (dn + 1) + d) * 2 + s];
  };
  for (std::size_t d = 0; d <= dn; ++d) {
    at(n, d, 0) = d == dn ? 0 : 1;
    at(n, d, 1) = 0;  // the rest of B is the tail of the current run
  }
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t d = dn + 1; d-- > 0;) {
      for (int s = 0; s < 2; ++s) {
        std::uint16_t best = kInf;
        if (a[i] == b[i + d] && at(i + 1, d, 0) != kInf) best = at(i + 1, d, 0);
        if (d < dn && at(i, d + 1, 1) != kInf) {
          const std::uint16_t c = static_cast<std::uint16_t>(at(i, d + 1, 1) + (s == 1 ? 0 : 1));
          best = std::min(best, c);
        }
        at(i, d, s) = best;
      }
    }
  }
  if (at(0, 0, 0) == kInf || at(0, 0, 0) > 4096) return std::nullopt;

  std::vector<Insertion> ins;
  std::size_t i = 0, d = 0;
  int s = 0;
  while (i < n || d < dn) {
    const std::uint16_t here = at(i, d, s);
    // Ties are resolved so each insertion is one contiguous run copy: outside
    // an insertion prefer matching (pushing the insertion to the end of its
    // v^q run), inside one prefer finishing it before matching again.
    const bool can_continue_insertion = s == 1 && d < dn && at(i, d + 1, 1) == here;
    if (!can_continue_insertion && i < n && a[i] == b[i + d] && at(i + 1, d, 0) == here) {
      ++i;
      s = 0;
      continue;
    }
    if (s == 1 && !ins.empty()) {
      ins.back().text += b[i + d];
    } else {
      ins.push_back({i, std::string(1, b[i + d])});
    }
    ++d;
    s = 1;
  }
  return ins;
}

// Rebuilds u_i from block t_q by stripping the q existing copies of v_i that
// sit directly before each insertion point.
std::optional<InterlacedDecomposition> strip_runs(const std::string& block, std::int64_t q,
                                                  const std::vector<Insertion>& ins) {
  InterlacedDecomposition dec;
  std::size_t piece_start = 0;
  for (const Insertion& s : ins) {
    const std::size_t run = static_cast<std::size_t>(q) * s.text.size();
    if (s.pos < piece_start + run) return std::nullopt;
    const std::string piece = block.substr(piece_start, s.pos - piece_start);
    if (piece.compare(piece.size() - run, run, [&] {
          std::string rep;
          for (std::int64_t r = 0; r < q; ++r) rep += s.text;
          return rep;
        }()) != 0)
      return std::nullopt;
    dec.u.push_back(piece.substr(0, piece.size() - run));
    dec.v.push_back(s.text);
    piece_start = s.pos;
  }
  if (piece_start < block.size()) {
    dec.u.push_back(block.substr(piece_start));
    dec.v.push_back("");
  }
  return dec;
}

}  // namespace

std::optional<MinedInterlacing> mine_interlaced(const std::string& trace,
                                                std::int64_t base_length,
                                                std::int64_t increment) {
  if (base_length <= 0 || increment <= 0) return std::nullopt;
  std::vector<std::size_t> starts{0};
  for (std::int64_t m = 0;; ++m) {
    const std::size_t next = starts.back() + static_cast<std::size_t>(base_length + m * increment);
    if (next > trace.size()) break;
    starts.push_back(next);
  }
  const std::int64_t blocks = static_cast<std::int64_t>(starts.size()) - 1;
  if (blocks < 4) return std::nullopt;

  // Late blocks have long runs that disambiguate insertion lengths; walk back
  // from the end until a candidate survives forward verification.
  std::optional<MinedInterlacing> best;
  for (std::int64_t q = blocks - 2; q >= 0 && q >= blocks - 5; --q) {
    const std::string a = trace.substr(starts[static_cast<std::size_t>(q)],
                                       starts[static_cast<std::size_t>(q + 1)] -
                                           starts[static_cast<std::size_t>(q)]);
    const std::string b = trace.substr(starts[static_cast<std::size_t>(q + 1)],
                                       starts[static_cast<std::size_t>(q + 2)] -
                                           starts[static_cast<std::size_t>(q + 1)]);
    auto ins = diff_blocks(a, b, increment);
    if (!ins) continue;
    auto base = strip_runs(a, q, *ins);
    if (!base) continue;
    // The trace is only eventually interlaced: the family may begin a few
    // blocks after the recurrence onset, with u_i absorbing the skipped runs.
    InterlacedDecomposition dec = *base;
    for (std::int64_t s0 = 0; s0 <= std::min<std::int64_t>(4, blocks - 4); ++s0) {
      if (s0 > 0) {
        for (std::size_t i = 0; i < dec.u.size(); ++i) dec.u[i] += dec.v[i];
      }
      const std::int64_t skip = static_cast<std::int64_t>(starts[static_cast<std::size_t>(s0)]);
      const std::int64_t matched = check_interlaced(trace.substr(static_cast<std::size_t>(skip)), dec);
      if (!best || matched > best->blocks) best = MinedInterlacing{dec, skip, matched};
      if (matched >= blocks - s0) break;  // everything observed is covered
    }
    if (best && best->blocks + (best->skip > 0 ? 1 : 0) >= blocks) break;
  }
  if (!best || best->blocks < 3) return std::nullopt;
  return best;
}

}  // namespace antlab
