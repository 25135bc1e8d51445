#include <doctest.h>

#include <cstdlib>

#include "antlab/digest.hpp"
#include "antlab/highway.hpp"
#include "antlab/sim.hpp"

using namespace antlab;

namespace {

HighwayCertificate langton_certificate() {
  const RuleWord lr = RuleWord::parse("LR");
  const auto cand = detect_highway({}, lr);
  REQUIRE(cand.has_value());
  auto res = certify_highway({}, lr, cand->onset, cand->period, cand->drift);
  REQUIRE(std::holds_alternative<HighwayCertificate>(res));
  return std::get<HighwayCertificate>(std::move(res));
}

}  // namespace

TEST_CASE("the LR ant builds its period-104 highway") {
  const HighwayCertificate cert = langton_certificate();
  CHECK(cert.period == 104);
  CHECK(std::abs(cert.drift.x) == 2);
  CHECK(std::abs(cert.drift.y) == 2);
  CHECK(cert.onset < 13'000);
  CHECK(cert.word == "LR");
  CHECK(cert.period_trace.size() == 104);
  CHECK(cert.canonical_trace == least_rotation(cert.period_trace));
  CHECK(cert.pose_end - cert.pose_start == cert.drift);
  CHECK_FALSE(cert.witness.empty());
  CHECK(cert.witness.size() == cert.shifted_witness.size());
}

TEST_CASE("issued certificates survive an extended audit") {
  const HighwayCertificate cert = langton_certificate();
  const CertificateAudit audit = audit_certificate({}, RuleWord::parse("LR"), cert, 10);
  CHECK(audit.trace_periodic);
  CHECK(audit.drift_consistent);
  CHECK(audit.out_of_set_reads == 0);
  CHECK(audit.ok());
}

TEST_CASE("tampered certificates trip the audit") {
  const HighwayCertificate good = langton_certificate();
  const RuleWord lr = RuleWord::parse("LR");

  HighwayCertificate wrong_drift = good;
  wrong_drift.drift = {good.drift.x, -good.drift.y};
  CHECK_FALSE(audit_certificate({}, lr, wrong_drift, 3).ok());

  HighwayCertificate wrong_trace = good;
  wrong_trace.period_trace[5] ^= 1;
  CHECK_FALSE(audit_certificate({}, lr, wrong_trace, 3).ok());

  HighwayCertificate wrong_set = good;
  wrong_set.witness.resize(wrong_set.witness.size() / 2);  // claim a smaller read set
  CHECK(audit_certificate({}, lr, wrong_set, 3).out_of_set_reads > 0);
}

TEST_CASE("certification rejects unsound claims") {
  const RuleWord lr = RuleWord::parse("LR");

  SUBCASE("zero drift can never be a highway") {
    const auto res = certify_highway({}, lr, 0, 104, {0, 0});
    REQUIRE(std::holds_alternative<Rejection>(res));
    CHECK(std::get<Rejection>(res).reason == RejectReason::ZeroDrift);
  }
  SUBCASE("the transient pose is not periodic") {
    const auto res = certify_highway({}, lr, 0, 104, {2, -2});
    REQUIRE(std::holds_alternative<Rejection>(res));
    CHECK(std::get<Rejection>(res).reason == RejectReason::PoseMismatch);
  }
  SUBCASE("a periodic-looking pose with a non-recurring pattern") {
    // at step 5 the pose happens to return translated by (2,2) after 104
    // steps, but the configuration around it does not recur
    const auto res = certify_highway({}, lr, 5, 104, {2, 2});
    REQUIRE(std::holds_alternative<Rejection>(res));
    CHECK(std::get<Rejection>(res).reason == RejectReason::PatternMismatch);
  }
  SUBCASE("a wrong period moves the pose to the wrong place") {
    const HighwayCertificate good = langton_certificate();
    const auto res = certify_highway({}, lr, good.onset, good.period + 1, good.drift);
    REQUIRE(std::holds_alternative<Rejection>(res));
    CHECK(std::get<Rejection>(res).reason == RejectReason::PoseMismatch);
  }
  SUBCASE("a cell cap surfaces as a budget rejection") {
    const auto res = certify_highway({}, lr, 15'000, 104, {2, -2}, 64);
    REQUIRE(std::holds_alternative<Rejection>(res));
    CHECK(std::get<Rejection>(res).reason == RejectReason::BudgetExceeded);
  }
}

TEST_CASE("least rotation") {
  CHECK(least_rotation("bba") == "abb");
  CHECK(least_rotation("cabab") == "ababc");
  CHECK(least_rotation("aaaa") == "aaaa");
  CHECK(least_rotation("a") == "a");
  const std::string s = "bcab";
  std::string best = s;
  for (std::size_t i = 1; i < s.size(); ++i) best = std::min(best, s.substr(i) + s.substr(0, i));
  CHECK(least_rotation(s) == best);
}

TEST_CASE("detections at different onsets collapse to one class") {
  const RuleWord lr = RuleWord::parse("LR");
  const HighwayCertificate a = langton_certificate();

  // certify the same highway two periods later: different onset, same class
  auto res = certify_highway({}, lr, a.onset + 2 * a.period, a.period, a.drift);
  REQUIRE(std::holds_alternative<HighwayCertificate>(res));
  const HighwayCertificate b = std::get<HighwayCertificate>(res);
  CHECK(b.onset != a.onset);

  const auto classes = dedupe_highways({a, b});
  REQUIRE(classes.size() == 1);
  CHECK(classes[0].members.size() == 2);
  CHECK(classes[0].drift == a.drift);
}

TEST_CASE("distinct traces or drifts stay distinct classes") {
  HighwayCertificate a;
  a.canonical_trace = "0011";
  a.drift = {2, -2};
  HighwayCertificate b = a;
  b.drift = {-2, 2};
  HighwayCertificate c = a;
  c.canonical_trace = "0101";
  const auto classes = dedupe_highways({a, b, c, a});
  CHECK(classes.size() == 3);
}

TEST_CASE("detection stays within its step budget") {
  DetectBudget tight;
  tight.max_steps = 5'000;  // the LR highway needs ~10k steps to emerge
  CHECK_FALSE(detect_highway({}, RuleWord::parse("LR"), tight).has_value());
}
