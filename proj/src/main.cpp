#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "antlab/digest.hpp"
#include "antlab/render.hpp"
#include "antlab/serialize.hpp"
#include "antlab/sim.hpp"

namespace {

using namespace antlab;
using nlohmann::json;

constexpr int kExitFound = 0;
constexpr int kExitNotFound = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

std::int64_t env_max_cells() {
  const char* v = std::getenv("ANTLAB_MAX_CELLS");
  return v ? std::atoll(v) : 0;
}

AntConfiguration make_configuration(const std::string& pattern_path) {
  if (pattern_path.empty()) return {};
  return apply_pattern(load_pattern(pattern_path));
}

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << j.dump(2) << "\n";
  }
}

void render_to(const AntConfiguration& conf, const std::string& path) {
  const Box box = render_box(conf);
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".svg") {
    save_svg(conf, box, path);
  } else {
    save_pgm(conf.grid, box, path);
  }
}

Coord parse_pair(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw CLI::ValidationError("expected x,y: " + s);
  return {std::stoll(s.substr(0, comma)), std::stoll(s.substr(comma + 1))};
}

SeedSearchSpec spec_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  json j;
  in >> j;
  SeedSearchSpec spec;
  spec.word = j.at("word").get<std::string>();
  spec.dedupe = j.value("dedupe", true);
  const json& g = j.at("generator");
  const std::string type = g.at("type").get<std::string>();
  if (type == "exhaustive") {
    ExhaustiveBoxGen e;
    e.width = g.value("width", 1);
    e.height = g.value("height", 1);
    e.max_cells = g.value("max_cells", 1);
    e.max_state = g.value("max_state", 1);
    spec.generator = e;
  } else if (type == "random") {
    RandomGen r;
    r.density = g.value("density", 0.3);
    r.width = g.value("width", 16);
    r.height = g.value("height", 16);
    r.count = g.value("count", 100);
    r.seed = g.value("seed", std::uint64_t{0});
    spec.generator = r;
  } else if (type == "mutations") {
    MutationsGen m;
    m.base = load_pattern(g.at("pattern").get<std::string>());
    m.edit_distance = g.value("edit_distance", 1);
    spec.generator = m;
  } else {
    throw std::runtime_error("unknown generator type: " + type);
  }
  if (j.contains("budget")) {
    const json& b = j.at("budget");
    spec.budget.max_steps = b.value("max_steps", spec.budget.max_steps);
    spec.budget.max_period = b.value("max_period", spec.budget.max_period);
    spec.budget.recurrence_steps = b.value("recurrence_steps", spec.budget.recurrence_steps);
    spec.budget.rho = b.value("rho", spec.budget.rho);
  }
  spec.budget.max_cells = env_max_cells();
  return spec;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized-ant toolkit: simulate, certify highways, classify growth"};
  app.require_subcommand(1);

  std::string word, pattern_path, out_path, render_path;

  auto add_common = [&](CLI::App* cmd, bool need_word = true) {
    auto* w = cmd->add_option("--word", word, "rule word over {L,R}");
    if (need_word) w->required();
    cmd->add_option("--pattern", pattern_path, "seed pattern file");
    cmd->add_option("--out", out_path, "write the JSON report here instead of stdout");
  };

  // run
  std::int64_t steps = 0;
  std::string trace_out, trajectory_out;
  auto* cmd_run = app.add_subcommand("run", "simulate and summarize the final configuration");
  add_common(cmd_run);
  cmd_run->add_option("--steps", steps, "steps to simulate")->required();
  cmd_run->add_option("--render", render_path, "write a PGM (or .svg) image of the final state");
  cmd_run->add_option("--trace-out", trace_out, "write the trace symbols, one per line");
  cmd_run->add_option("--trajectory-out", trajectory_out, "write positions, one x,y per line");

  // detect / classify budgets
  std::int64_t max_steps = 1'000'000, max_period = 10'000, recurrence_steps = 300'000;
  auto* cmd_detect = app.add_subcommand("detect", "find and certify a highway");
  add_common(cmd_detect);
  cmd_detect->add_option("--max-steps", max_steps, "detection step budget");
  cmd_detect->add_option("--max-period", max_period, "largest period considered");

  std::int64_t t0 = 0, period = 0;
  std::string drift_str;
  auto* cmd_certify = app.add_subcommand("certify", "check a highway candidate");
  add_common(cmd_certify);
  cmd_certify->add_option("--t0", t0, "onset step")->required();
  cmd_certify->add_option("--period", period, "period")->required();
  cmd_certify->add_option("--drift", drift_str, "drift a,b")->required();

  auto* cmd_classify = app.add_subcommand("classify", "classify the run's long-term behavior");
  add_common(cmd_classify);
  cmd_classify->add_option("--max-steps", max_steps, "highway detection budget");
  cmd_classify->add_option("--max-period", max_period, "largest period considered");
  cmd_classify->add_option("--recurrence-steps", recurrence_steps, "growth-structure budget");

  // construct
  std::string base_path, link_path, bouncer_path, link_origin_str, link_step_str,
      bouncer_origin_str;
  int k_links = 0;
  auto* cmd_construct = app.add_subcommand("construct", "assemble a widget-family pattern");
  cmd_construct->add_option("--base", base_path, "base widget pattern")->required();
  cmd_construct->add_option("--link", link_path, "link widget pattern")->required();
  cmd_construct->add_option("--bouncer", bouncer_path, "closing widget pattern")->required();
  cmd_construct->add_option("--link-origin", link_origin_str, "first link offset x,y")->required();
  cmd_construct->add_option("--link-step", link_step_str, "per-link displacement x,y")->required();
  cmd_construct->add_option("--bouncer-origin", bouncer_origin_str, "bouncer offset at k=0 x,y")
      ->required();
  cmd_construct->add_option("-k,--links", k_links, "number of link copies")->required();
  cmd_construct->add_option("--out", out_path, "output pattern file")->required();

  // search
  std::string spec_path, catalog_path;
  auto* cmd_search = app.add_subcommand("search", "classify a stream of seeds into a catalog");
  cmd_search->add_option("--spec", spec_path, "search spec JSON")->required();
  cmd_search->add_option("--catalog", catalog_path, "catalog file to append-merge into")
      ->required();

  // render
  auto* cmd_render = app.add_subcommand("render", "simulate and write an image");
  add_common(cmd_render);
  cmd_render->add_option("--steps", steps, "steps to simulate")->required();
  cmd_render->add_option("--image", render_path, "output image (.pgm or .svg)")->required();

  // stats
  auto* cmd_stats = app.add_subcommand("stats", "per-cell visit histogram");
  add_common(cmd_stats);
  cmd_stats->add_option("--steps", steps, "steps to simulate")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {  // --help and friends
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const std::int64_t max_cells = env_max_cells();

    if (cmd_run->parsed() || cmd_render->parsed()) {
      const RuleWord w = RuleWord::parse(word);
      AntConfiguration conf = make_configuration(pattern_path);
      validate_states(conf.grid, w);
      RunOptions opts;
      opts.record_trace = !trace_out.empty();
      opts.record_trajectory = !trajectory_out.empty();
      opts.max_cells = max_cells;
      RunResult result = run(conf, w, steps, opts);
      if (!render_path.empty()) render_to(result.conf, render_path);
      if (!trace_out.empty()) {
        std::ofstream out(trace_out);
        for (std::uint8_t s : result.trace) out << static_cast<int>(s) << "\n";
      }
      if (!trajectory_out.empty()) {
        std::ofstream out(trajectory_out);
        for (Coord c : result.trajectory) out << c.x << "," << c.y << "\n";
      }
      if (cmd_run->parsed()) {
        const auto support = result.conf.grid.support_box();
        json j{{"word", w.letters()},
               {"steps", steps},
               {"position", json::array({result.conf.position.x, result.conf.position.y})},
               {"heading", std::string(1, heading_char(result.conf.heading))},
               {"support_cells", result.conf.grid.nonzero_count()},
               {"digest", std::to_string(configuration_digest(result.conf))}};
        if (support) {
          j["support_box"] = json::array(
              {support->lo.x, support->lo.y, support->hi.x, support->hi.y});
        }
        emit(j, out_path);
      }
      return kExitFound;
    }

    if (cmd_detect->parsed()) {
      const RuleWord w = RuleWord::parse(word);
      AntConfiguration conf = make_configuration(pattern_path);
      validate_states(conf.grid, w);
      DetectBudget budget{max_steps, max_period, max_cells};
      const auto cand = detect_highway(conf, w, budget);
      json j{{"word", w.letters()}, {"found", cand.has_value()}};
      if (cand) {
        auto res = certify_highway(conf, w, cand->onset, cand->period, cand->drift, max_cells);
        j["certificate"] = certificate_to_json(std::get<HighwayCertificate>(res));
      }
      emit(j, out_path);
      return cand ? kExitFound : kExitNotFound;
    }

    if (cmd_certify->parsed()) {
      const RuleWord w = RuleWord::parse(word);
      AntConfiguration conf = make_configuration(pattern_path);
      validate_states(conf.grid, w);
      const auto res = certify_highway(conf, w, t0, period, parse_pair(drift_str), max_cells);
      if (const auto* cert = std::get_if<HighwayCertificate>(&res)) {
        emit(json{{"certified", true}, {"certificate", certificate_to_json(*cert)}}, out_path);
        return kExitFound;
      }
      const auto& rej = std::get<Rejection>(res);
      emit(json{{"certified", false},
                {"reason", reject_reason_name(rej.reason)},
                {"detail", rej.detail}},
           out_path);
      return kExitNotFound;
    }

    if (cmd_classify->parsed()) {
      const RuleWord w = RuleWord::parse(word);
      AntConfiguration conf = make_configuration(pattern_path);
      validate_states(conf.grid, w);
      ClassifyBudget budget;
      budget.max_steps = max_steps;
      budget.max_period = max_period;
      budget.recurrence_steps = recurrence_steps;
      budget.max_cells = max_cells;
      const BehaviorReport report = classify_behavior(conf, w, budget);
      emit(report_to_json(report), out_path);
      if (report.resource_limited) return kExitResource;
      return report.behavior != BehaviorClass::Unknown ? kExitFound : kExitNotFound;
    }

    if (cmd_construct->parsed()) {
      PlacementRule rule;
      rule.link_origin = parse_pair(link_origin_str);
      rule.link_step = parse_pair(link_step_str);
      rule.bouncer_origin = parse_pair(bouncer_origin_str);
      rule.bouncer = load_pattern(bouncer_path);
      const Pattern result =
          construct_family(load_pattern(base_path), load_pattern(link_path), rule, k_links);
      save_pattern(result, out_path);
      return kExitFound;
    }

    if (cmd_search->parsed()) {
      const SeedSearchSpec spec = spec_from_file(spec_path);
      BehaviorCatalog catalog = load_catalog(catalog_path, spec.word);
      merge_catalog(catalog, search(spec));
      save_catalog(catalog, catalog_path);
      std::map<std::string, int> counts;
      for (const CatalogEntry& e : catalog.entries)
        ++counts[behavior_class_name(e.report.behavior)];
      json summary{{"word", catalog.word},
                   {"entries", catalog.entries.size()},
                   {"highway_classes", catalog.highway_classes.size()},
                   {"class_counts", counts}};
      std::cout << summary.dump(2) << "\n";
      return catalog.highway_classes.empty() ? kExitNotFound : kExitFound;
    }

    if (cmd_stats->parsed()) {
      const RuleWord w = RuleWord::parse(word);
      AntConfiguration conf = make_configuration(pattern_path);
      validate_states(conf.grid, w);
      const VisitHistogram hist = visit_histogram(conf, w, steps, max_cells);
      json dist = json::object();
      for (const auto& [visits, cells] : hist.distribution)
        dist[std::to_string(visits)] = cells;
      emit(json{{"word", w.letters()},
                {"steps", steps},
                {"total_visits", hist.total},
                {"max_count", hist.max_count},
                {"cells_visited", hist.counts.size()},
                {"distribution", dist}},
           out_path);
      return kExitFound;
    }
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const StateOutOfRange& e) {
    std::cerr << "state out of range: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
