#include "antlab/classify.hpp"

#include "antlab/sim.hpp"

namespace antlab {

const char* behavior_class_name(BehaviorClass c) {
  switch (c) {
    case BehaviorClass::Highway: return "Highway";
    case BehaviorClass::IncreasingRectangle: return "IncreasingRectangle";
    case BehaviorClass::Cone: return "Cone";
    default: return "Unknown";
  }
}

BehaviorReport classify_behavior(const AntConfiguration& conf, const RuleWord& w,
                                 const ClassifyBudget& budget) {
  BehaviorReport report;
  try {
    DetectBudget hb{budget.max_steps, budget.max_period, budget.max_cells};
    if (auto cand = detect_highway(conf, w, hb)) {
      auto res = certify_highway(conf, w, cand->onset, cand->period, cand->drift, budget.max_cells);
      if (auto* cert = std::get_if<HighwayCertificate>(&res)) {
        report.behavior = BehaviorClass::Highway;
        report.certificate = std::move(*cert);
        report.steps_simulated = cand->onset + 2 * cand->period;
        return report;
      }
    }
    report.steps_simulated = budget.max_steps;

    RecurrenceBudget rb;
    rb.max_steps = budget.recurrence_steps;
    rb.max_cells = budget.max_cells;
    auto rec = detect_affine_recurrence(conf, w, rb);
    if (!rec) return report;
    report.recurrence = rec;

    RunOptions opts;
    opts.record_trace = true;
    opts.record_trajectory = true;
    opts.max_cells = budget.max_cells;
    RunResult run_data = run(conf, w, rec->anchors.back(), opts);
    report.growth = fit_growth(run_data.trajectory, rec->anchors);

    const std::string tail(run_data.trace.begin() + rec->onset, run_data.trace.end());
    report.interlacing = mine_interlaced(tail, rec->base_length, rec->increment);

    const GrowthFit& fit = *report.growth;
    if (fit.increasing() && !fit.drifting()) {
      report.behavior = BehaviorClass::IncreasingRectangle;
    } else if (fit.increasing() && fit.drifting()) {
      const double ratio = fit.g.slope / fit.f.slope;
      if (ratio >= 1.0 / budget.rho && ratio <= budget.rho) report.behavior = BehaviorClass::Cone;
    }
  } catch (const ResourceLimit&) {
    report.behavior = BehaviorClass::Unknown;
    report.resource_limited = true;
  } catch (const DegenerateFit&) {
    report.behavior = BehaviorClass::Unknown;
  }
  return report;
}

}  // namespace antlab
