#include "antlab/highway.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "antlab/digest.hpp"
#include "antlab/sim.hpp"

namespace antlab {

const char* reject_reason_name(RejectReason r) {
  switch (r) {
    case RejectReason::ZeroDrift: return "ZeroDrift";
    case RejectReason::PoseMismatch: return "PoseMismatch";
    case RejectReason::PatternMismatch: return "PatternMismatch";
    case RejectReason::BudgetExceeded: return "BudgetExceeded";
  }
  return "?";
}

namespace {

std::vector<std::int64_t> z_function(const std::string& s) {
  const std::int64_t n = static_cast<std::int64_t>(s.size());
  std::vector<std::int64_t> z(n, 0);
  z[0] = n;
  for (std::int64_t i = 1, l = 0, r = 0; i < n; ++i) {
    if (i < r) z[i] = std::min(r - i, z[i - l]);
    while (i + z[i] < n && s[z[i]] == s[i + z[i]]) ++z[i];
    if (i + z[i] > r) { l = i; r = i + z[i]; }
  }
  return z;
}

struct TailCandidate {
  std::int64_t onset;
  std::int64_t period;
  Coord drift;
};

// Once a cell on the ray c, c+d, c+2d, ... satisfies this, every later cell
// does too (the escaping coordinate moves monotonically), so everything past
// it lies outside the box and reads as state 0.
bool permanently_outside(Coord c, Coord d, const std::optional<Box>& box) {
  if (!box) return true;
  if (d.x > 0 && c.x > box->hi.x) return true;
  if (d.x < 0 && c.x < box->lo.x) return true;
  if (d.y > 0 && c.y > box->hi.y) return true;
  if (d.y < 0 && c.y < box->lo.y) return true;
  return false;
}

// Candidate periods, smallest first: p such that the trace tail is
// p-periodic over a long enough stretch (at least 4 periods or 128 symbols,
// whichever is more, clipped to the window) with a constant nonzero drift.
// The onset is pushed back as far as both conditions keep holding. The
// certifier is the source of truth; these are cheap necessary conditions.
std::vector<TailCandidate> scan_tail(const std::vector<std::uint8_t>& trace,
                                     const std::vector<Coord>& traj, std::int64_t max_period,
                                     std::size_t max_candidates = 8) {
  std::vector<TailCandidate> out;
  const std::int64_t total = static_cast<std::int64_t>(trace.size());
  const std::int64_t window = std::min(total, 2 * max_period);
  if (window < 2) return out;

  std::string rev(static_cast<std::size_t>(window), '\0');
  for (std::int64_t i = 0; i < window; ++i) {
    rev[static_cast<std::size_t>(i)] = static_cast<char>(trace[total - 1 - i]);
  }
  const auto z = z_function(rev);

  for (std::int64_t p = 1; p <= window / 2 && out.size() < max_candidates; ++p) {
    if (z[p] < p) continue;
    const std::int64_t evidence = std::min(window, z[p] + p);  // periodic tail length
    if (evidence < std::min(window, std::max<std::int64_t>(4 * p, 128))) continue;
    const Coord drift = traj[total - 1] - traj[total - 1 - p];
    if (drift == Coord{0, 0}) continue;
    bool ok = true;
    for (std::int64_t i = total - evidence; i < total - p; ++i) {
      if (traj[i + p] - traj[i] != drift) { ok = false; break; }
    }
    if (!ok) continue;

    std::int64_t t0 = total - evidence;
    while (t0 > 0 && trace[t0 - 1] == trace[t0 - 1 + p] &&
           traj[t0 - 1 + p] - traj[t0 - 1] == drift) {
      --t0;
    }
    out.push_back(TailCandidate{t0, p, drift});
  }
  return out;
}

}  // namespace

std::optional<HighwayCandidate> detect_highway(const AntConfiguration& conf0, const RuleWord& w,
                                               const DetectBudget& budget) {
  if (budget.max_steps < 1 || budget.max_period < 1) {
    throw std::invalid_argument("detect_highway: budgets must be >= 1");
  }
  validate_states(conf0.grid, w);

  AntConfiguration conf = conf0;
  std::vector<std::uint8_t> trace;
  std::vector<Coord> traj;

  // Chaotic phases throw off transient periodic stretches that would each
  // trigger a full (and expensive) certification. Scans are spaced
  // geometrically, and a candidate is only certified once the same
  // (period, drift, onset) has survived two consecutive scans — except at the
  // final scan, where every candidate gets its shot. Failed triples are not
  // retried.
  std::map<std::pair<std::int64_t, Coord>, std::int64_t> seen_at_prev_scan;
  std::set<std::tuple<std::int64_t, Coord, std::int64_t>> failed;

  std::int64_t done = 0;
  while (done < budget.max_steps) {
    const std::int64_t next_scan =
        std::min(budget.max_steps, std::max(done + 4096, done + done / 4));
    run_observed(
        conf, w, next_scan - done,
        [&](std::int64_t, Coord, std::uint8_t k, const AntConfiguration& c) {
          trace.push_back(k);
          traj.push_back(c.position);
        },
        budget.max_cells);
    done = next_scan;
    const bool final_scan = done >= budget.max_steps;

    std::map<std::pair<std::int64_t, Coord>, std::int64_t> seen_now;
    for (const TailCandidate& tail : scan_tail(trace, traj, budget.max_period)) {
      const auto key = std::make_pair(tail.period, tail.drift);
      seen_now[key] = tail.onset;
      auto prev = seen_at_prev_scan.find(key);
      const bool persisted = prev != seen_at_prev_scan.end() && prev->second == tail.onset;
      if (!persisted && !final_scan) continue;

      for (int attempt = 0; attempt < 3; ++attempt) {
        const std::int64_t t0 = tail.onset + attempt * tail.period;
        if (failed.contains({tail.period, tail.drift, t0})) continue;
        auto res = certify_highway(conf0, w, t0, tail.period, tail.drift, budget.max_cells);
        if (std::holds_alternative<HighwayCertificate>(res)) {
          return HighwayCandidate{t0, tail.period, tail.drift};
        }
        failed.insert({tail.period, tail.drift, t0});
      }
    }
    seen_at_prev_scan = std::move(seen_now);
  }
  return std::nullopt;
}

CertifyResult certify_highway(const AntConfiguration& conf0, const RuleWord& w, std::int64_t t0,
                              std::int64_t period, Coord drift, std::int64_t max_cells) {
  if (period < 1 || t0 < 0) throw std::invalid_argument("certify_highway: t0 >= 0, period >= 1");
  if (drift == Coord{0, 0}) {
    return Rejection{RejectReason::ZeroDrift, "a highway must move; zero drift is rejected"};
  }
  validate_states(conf0.grid, w);

  HighwayCertificate cert;
  cert.word = w.letters();
  cert.start_digest = configuration_digest(conf0);
  cert.onset = t0;
  cert.period = period;
  cert.drift = drift;

  AntConfiguration conf = conf0;
  std::unordered_map<Coord, std::uint8_t, CoordHash> first_read;
  Grid grid_t0;
  try {
    run_observed(conf, w, t0, [](std::int64_t, Coord, std::uint8_t, const AntConfiguration&) {},
                 max_cells);
    cert.pose_start = conf.position;
    cert.heading = conf.heading;
    grid_t0 = conf.grid;
    run_observed(
        conf, w, period,
        [&](std::int64_t, Coord read_pos, std::uint8_t k, const AntConfiguration&) {
          cert.period_trace.push_back(static_cast<char>(k));
          first_read.try_emplace(read_pos, k);  // first read = state at t0
        },
        max_cells);
  } catch (const ResourceLimit& e) {
    return Rejection{RejectReason::BudgetExceeded, e.what()};
  }

  cert.pose_end = conf.position;
  if (conf.position != cert.pose_start + drift || conf.heading != cert.heading) {
    return Rejection{RejectReason::PoseMismatch,
                     "pose after one period is not the starting pose translated by the drift"};
  }

  // Induction closure. The period reads symbol h0 = state(r, t0) at each cell
  // r of the read set R. For period j to replay translated, the cell r + j*d
  // must hold h0 when first read. Three sources supply that state:
  //   - some earlier period wrote it: the ray r+d, r+2d, ... hits R at m_min,
  //     and the end-of-period state at r + m_min*d must equal h0;
  //   - nothing ever wrote it: state(r + j*d, t0) must equal h0 for every j
  //     before the ray permanently leaves the support box, and h0 must be 0
  //     so the infinitely many cells beyond the box match too.
  // Checking only the restriction at t0+n (the naive one-period comparison)
  // accepts transients in the chaotic core; these ray conditions are what
  // make the certificate eternal.
  const std::optional<Box> box = grid_t0.support_box();
  std::unordered_set<Coord, CoordHash> read_set;
  read_set.reserve(first_read.size() * 2);
  for (const auto& [cell, state] : first_read) read_set.insert(cell);

  cert.witness.assign(first_read.begin(), first_read.end());
  std::sort(cert.witness.begin(), cert.witness.end());
  cert.shifted_witness.reserve(cert.witness.size());
  for (const auto& [cell, h0] : cert.witness) {
    Coord c = cell + drift;
    while (true) {
      if (read_set.contains(c)) {
        if (conf.grid.get(c) != h0) {
          return Rejection{RejectReason::PatternMismatch,
                           "residue left at a re-entered cell does not match the read symbol"};
        }
        break;
      }
      if (grid_t0.get(c) != h0) {
        return Rejection{RejectReason::PatternMismatch,
                         "cell ahead of the highway does not hold the expected symbol"};
      }
      if (permanently_outside(c, drift, box)) break;
      c += drift;
    }
    cert.shifted_witness.push_back({cell + drift, h0});
  }
  cert.canonical_trace = least_rotation(cert.period_trace);
  return cert;
}

CertificateAudit audit_certificate(const AntConfiguration& start, const RuleWord& w,
                                   const HighwayCertificate& cert, int periods) {
  CertificateAudit audit;
  audit.trace_periodic = true;
  audit.drift_consistent = true;

  std::unordered_set<Coord, CoordHash> read_set;
  for (const auto& [cell, state] : cert.witness) read_set.insert(cell);

  AntConfiguration conf = start;
  run_observed(conf, w, cert.onset, [](std::int64_t, Coord, std::uint8_t, const AntConfiguration&) {});

  std::vector<std::uint8_t> base_trace;
  std::vector<Coord> base_traj;
  for (int j = 0; j <= periods; ++j) {
    const Coord offset = static_cast<std::int64_t>(j) * cert.drift;
    std::vector<std::uint8_t> trace_j;
    std::vector<Coord> traj_j;
    run_observed(conf, w, cert.period,
                 [&](std::int64_t, Coord read_pos, std::uint8_t k, const AntConfiguration& c) {
                   trace_j.push_back(k);
                   traj_j.push_back(c.position);
                   if (!read_set.contains(read_pos - offset)) ++audit.out_of_set_reads;
                 });
    if (j == 0) {
      base_trace = std::move(trace_j);
      base_traj = std::move(traj_j);
      // the observed first period must be the trace the certificate claims
      if (base_trace.size() != cert.period_trace.size() ||
          !std::equal(base_trace.begin(), base_trace.end(), cert.period_trace.begin(),
                      [](std::uint8_t a, char b) { return a == static_cast<std::uint8_t>(b); })) {
        audit.trace_periodic = false;
      }
      continue;
    }
    if (trace_j != base_trace) audit.trace_periodic = false;
    for (std::size_t i = 0; i < traj_j.size(); ++i) {
      if (traj_j[i] != base_traj[i] + offset) { audit.drift_consistent = false; break; }
    }
  }
  return audit;
}

std::string least_rotation(const std::string& s) {
  if (s.empty()) return s;
  const std::string t = s + s;
  const std::int64_t n = static_cast<std::int64_t>(t.size());
  std::vector<std::int64_t> f(static_cast<std::size_t>(n), -1);
  std::int64_t k = 0;
  for (std::int64_t j = 1; j < n; ++j) {
    const char c = t[j];
    std::int64_t i = f[j - k - 1];
    while (i != -1 && c != t[k + i + 1]) {
      if (c < t[k + i + 1]) k = j - i - 1;
      i = f[i];
    }
    if (c != t[k + i + 1]) {
      if (c < t[k]) k = j;
      f[j - k] = -1;
    } else {
      f[j - k] = i + 1;
    }
  }
  return t.substr(static_cast<std::size_t>(k), s.size());
}

std::vector<HighwayClass> dedupe_highways(const std::vector<HighwayCertificate>& certs) {
  std::map<std::pair<std::string, Coord>, std::size_t> index;
  std::vector<HighwayClass> classes;
  for (std::size_t i = 0; i < certs.size(); ++i) {
    const auto key = std::make_pair(certs[i].canonical_trace, certs[i].drift);
    auto it = index.find(key);
    if (it == index.end()) {
      index.emplace(key, classes.size());
      classes.push_back({certs[i].canonical_trace, certs[i].drift, {i}});
    } else {
      classes[it->second].members.push_back(i);
    }
  }
  return classes;
}

}  // namespace antlab
