#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "antlab/grid.hpp"
#include "antlab/rule_word.hpp"

namespace antlab {

struct HighwayCandidate {
  std::int64_t onset = 0;   // first certifiable step index t0
  std::int64_t period = 0;  // minimal n
  Coord drift;              // nonzero (a,b) with y[i+n] = y[i] + (a,b)
};

/// Machine-checkable witness of an eternal highway. If pose(t0+n) equals
/// pose(t0) translated by the drift and the configuration at t0+n restricted
/// to read_set+drift equals the configuration at t0 restricted to read_set
/// (translated), every later period replays the previous one shifted, by
/// induction, so the highway runs forever.
struct HighwayCertificate {
  std::string word;
  std::uint64_t start_digest = 0;  // digest of the configuration certification started from
  std::int64_t onset = 0;
  std::int64_t period = 0;
  Coord drift;
  std::vector<std::pair<Coord, std::uint8_t>> witness;  // read-set cells with their states at t0
  std::vector<std::pair<Coord, std::uint8_t>> shifted_witness;  // same cells +drift, states at t0+n
  Coord pose_start, pose_end;
  Heading heading = Heading::Up;
  std::string period_trace;      // symbols read during [t0, t0+n), one byte per state
  std::string canonical_trace;   // lexicographically least rotation of period_trace
};

enum class RejectReason : std::uint8_t { ZeroDrift, PoseMismatch, PatternMismatch, BudgetExceeded };

const char* reject_reason_name(RejectReason r);

struct Rejection {
  RejectReason reason;
  std::string detail;
};

using CertifyResult = std::variant<HighwayCertificate, Rejection>;

struct DetectBudget {
  std::int64_t max_steps = 1'000'000;
  std::int64_t max_period = 10'000;
  std::int64_t max_cells = 0;
};

/// Scans a run for a periodic trace tail with a consistent nonzero drift and
/// confirms the smallest such period through certify_highway. nullopt means
/// no certificate was established within the budgets, not proof of absence.
std::optional<HighwayCandidate> detect_highway(const AntConfiguration& conf, const RuleWord& w,
                                               const DetectBudget& budget = {});

CertifyResult certify_highway(const AntConfiguration& conf, const RuleWord& w, std::int64_t t0,
                              std::int64_t period, Coord drift, std::int64_t max_cells = 0);

/// Independent re-check of an issued certificate: extends the run by
/// `periods` further periods and verifies trace periodicity, trajectory
/// drift, and that every read in period j lands in read_set + j*drift.
struct CertificateAudit {
  bool trace_periodic = false;
  bool drift_consistent = false;
  std::int64_t out_of_set_reads = 0;

  bool ok() const { return trace_periodic && drift_consistent && out_of_set_reads == 0; }
};

CertificateAudit audit_certificate(const AntConfiguration& start, const RuleWord& w,
                                   const HighwayCertificate& cert, int periods = 10);

/// Lexicographically least rotation (Booth).
std::string least_rotation(const std::string& s);

/// Equivalence classes over certificates of one rule word: equal canonical
/// periodic trace and equal drift.
struct HighwayClass {
  std::string canonical_trace;
  Coord drift;
  std::vector<std::size_t> members;  // indices into the input list
};

std::vector<HighwayClass> dedupe_highways(const std::vector<HighwayCertificate>& certs);

}  // namespace antlab
