#include "antlab/serialize.hpp"

#include <filesystem>
#include <fstream>

#include "antlab/errors.hpp"

namespace antlab {

using nlohmann::json;

namespace {

json coord_to_json(Coord c) { return json::array({c.x, c.y}); }
Coord coord_from_json(const json& j) { return {j.at(0).get<std::int64_t>(), j.at(1).get<std::int64_t>()}; }

json trace_to_json(const std::string& t) {
  json a = json::array();
  for (unsigned char s : t) a.push_back(static_cast<int>(s));
  return a;
}

std::string trace_from_json(const json& j) {
  std::string t;
  for (const auto& s : j) t.push_back(static_cast<char>(s.get<int>()));
  return t;
}

json cells_to_json(const std::vector<std::pair<Coord, std::uint8_t>>& cells) {
  json a = json::array();
  for (const auto& [c, s] : cells) a.push_back(json::array({c.x, c.y, s}));
  return a;
}

std::vector<std::pair<Coord, std::uint8_t>> cells_from_json(const json& j) {
  std::vector<std::pair<Coord, std::uint8_t>> cells;
  for (const auto& e : j) {
    cells.push_back({{e.at(0).get<std::int64_t>(), e.at(1).get<std::int64_t>()},
                     e.at(2).get<std::uint8_t>()});
  }
  return cells;
}

Heading heading_from_string(const std::string& s) {
  Heading h;
  if (s.size() != 1 || !parse_heading(s[0], h)) throw ParseError("bad heading: " + s);
  return h;
}

json fit_to_json(const FittedFunction& f) {
  return json{{"model", growth_model_name(f.model)},
              {"intercept", f.intercept},
              {"slope", f.slope},
              {"max_residual", f.max_residual}};
}

FittedFunction fit_from_json(const json& j) {
  FittedFunction f;
  f.model = j.at("model").get<std::string>() == "linear" ? GrowthModel::Linear
                                                         : GrowthModel::Constant;
  f.intercept = j.at("intercept").get<double>();
  f.slope = j.at("slope").get<double>();
  f.max_residual = j.at("max_residual").get<double>();
  return f;
}

}  // namespace

json certificate_to_json(const HighwayCertificate& cert) {
  return json{{"word", cert.word},
              {"onset", cert.onset},
              {"period", cert.period},
              {"drift", coord_to_json(cert.drift)},
              {"read_set_size", cert.witness.size()},
              {"trace_period_canonical", trace_to_json(cert.canonical_trace)},
              {"digest", std::to_string(cert.start_digest)},
              {"trace_period", trace_to_json(cert.period_trace)},
              {"witness", cells_to_json(cert.witness)},
              {"shifted_witness", cells_to_json(cert.shifted_witness)},
              {"pose_start", coord_to_json(cert.pose_start)},
              {"pose_end", coord_to_json(cert.pose_end)},
              {"heading", std::string(1, heading_char(cert.heading))}};
}

HighwayCertificate certificate_from_json(const json& j) {
  HighwayCertificate cert;
  cert.word = j.at("word").get<std::string>();
  cert.onset = j.at("onset").get<std::int64_t>();
  cert.period = j.at("period").get<std::int64_t>();
  cert.drift = coord_from_json(j.at("drift"));
  cert.canonical_trace = trace_from_json(j.at("trace_period_canonical"));
  cert.start_digest = std::stoull(j.at("digest").get<std::string>());
  cert.period_trace = trace_from_json(j.at("trace_period"));
  cert.witness = cells_from_json(j.at("witness"));
  cert.shifted_witness = cells_from_json(j.at("shifted_witness"));
  cert.pose_start = coord_from_json(j.at("pose_start"));
  cert.pose_end = coord_from_json(j.at("pose_end"));
  cert.heading = heading_from_string(j.at("heading").get<std::string>());
  return cert;
}

json report_to_json(const BehaviorReport& report) {
  json j{{"class", behavior_class_name(report.behavior)},
         {"steps", report.steps_simulated},
         {"resource_limited", report.resource_limited}};
  if (report.certificate) {
    j["certificate"] = certificate_to_json(*report.certificate);
    j["period"] = report.certificate->period;
    j["drift"] = coord_to_json(report.certificate->drift);
    j["onset"] = report.certificate->onset;
  }
  if (report.recurrence) {
    const AffineRecurrence& r = *report.recurrence;
    j["recurrence"] = json{{"onset", r.onset},
                           {"n0", r.base_length},
                           {"delta_n", r.increment},
                           {"displacement", coord_to_json(r.displacement)},
                           {"repetitions", r.repetitions},
                           {"window_radius", r.window_radius},
                           {"anchors", r.anchors},
                           {"anchor_heading", std::string(1, heading_char(r.anchor_heading))}};
    j["n0"] = r.base_length;
    j["delta_n"] = r.increment;
    j["displacement"] = coord_to_json(r.displacement);
  }
  if (report.growth) {
    j["f_model"] = fit_to_json(report.growth->f);
    j["g_model"] = fit_to_json(report.growth->g);
    j["drift_direction"] = coord_to_json(report.growth->direction);
  }
  if (report.interlacing) {
    json uv = json::array(), vv = json::array();
    for (const auto& u : report.interlacing->decomposition.u) uv.push_back(trace_to_json(u));
    for (const auto& v : report.interlacing->decomposition.v) vv.push_back(trace_to_json(v));
    j["interlacing"] = json{{"k", report.interlacing->decomposition.blocks()},
                            {"u", uv},
                            {"v", vv},
                            {"skip", report.interlacing->skip},
                            {"blocks", report.interlacing->blocks}};
  }
  return j;
}

BehaviorReport report_from_json(const json& j) {
  BehaviorReport report;
  const std::string cls = j.at("class").get<std::string>();
  for (BehaviorClass c : {BehaviorClass::Highway, BehaviorClass::IncreasingRectangle,
                          BehaviorClass::Cone, BehaviorClass::Unknown}) {
    if (cls == behavior_class_name(c)) report.behavior = c;
  }
  report.steps_simulated = j.at("steps").get<std::int64_t>();
  report.resource_limited = j.at("resource_limited").get<bool>();
  if (j.contains("certificate")) report.certificate = certificate_from_json(j.at("certificate"));
  if (j.contains("recurrence")) {
    const json& r = j.at("recurrence");
    AffineRecurrence rec;
    rec.onset = r.at("onset").get<std::int64_t>();
    rec.base_length = r.at("n0").get<std::int64_t>();
    rec.increment = r.at("delta_n").get<std::int64_t>();
    rec.displacement = coord_from_json(r.at("displacement"));
    rec.repetitions = r.at("repetitions").get<std::int64_t>();
    rec.window_radius = r.at("window_radius").get<std::int64_t>();
    rec.anchors = r.at("anchors").get<std::vector<std::int64_t>>();
    rec.anchor_heading = heading_from_string(r.at("anchor_heading").get<std::string>());
    report.recurrence = std::move(rec);
  }
  if (j.contains("f_model")) {
    GrowthFit fit;
    fit.f = fit_from_json(j.at("f_model"));
    fit.g = fit_from_json(j.at("g_model"));
    fit.direction = coord_from_json(j.at("drift_direction"));
    report.growth = fit;
  }
  if (j.contains("interlacing")) {
    const json& i = j.at("interlacing");
    MinedInterlacing mined;
    for (const auto& u : i.at("u")) mined.decomposition.u.push_back(trace_from_json(u));
    for (const auto& v : i.at("v")) mined.decomposition.v.push_back(trace_from_json(v));
    mined.skip = i.at("skip").get<std::int64_t>();
    mined.blocks = i.at("blocks").get<std::int64_t>();
    report.interlacing = std::move(mined);
  }
  return report;
}

json catalog_to_json(const BehaviorCatalog& catalog) {
  json entries = json::array();
  for (const CatalogEntry& e : catalog.entries) {
    entries.push_back(json{{"seed_digest", std::to_string(e.seed_digest)},
                           {"report", report_to_json(e.report)}});
  }
  json classes = json::array();
  for (const HighwayClass& c : catalog.highway_classes) {
    classes.push_back(json{{"canonical_trace", trace_to_json(c.canonical_trace)},
                           {"drift", coord_to_json(c.drift)},
                           {"members", c.members}});
  }
  return json{{"word", catalog.word}, {"entries", entries}, {"classes", classes}};
}

BehaviorCatalog catalog_from_json(const json& j) {
  BehaviorCatalog catalog;
  catalog.word = j.at("word").get<std::string>();
  for (const auto& e : j.at("entries")) {
    CatalogEntry entry;
    entry.seed_digest = std::stoull(e.at("seed_digest").get<std::string>());
    entry.report = report_from_json(e.at("report"));
    if (entry.report.certificate) catalog.certificates.push_back(*entry.report.certificate);
    catalog.entries.push_back(std::move(entry));
  }
  catalog.rebuild_classes();
  return catalog;
}

void save_catalog(const BehaviorCatalog& catalog, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << catalog_to_json(catalog).dump(2) << "\n";
}

BehaviorCatalog load_catalog(const std::string& path, const std::string& word) {
  if (!std::filesystem::exists(path)) {
    BehaviorCatalog empty;
    empty.word = word;
    return empty;
  }
  std::ifstream in(path);
  json j;
  in >> j;
  BehaviorCatalog catalog = catalog_from_json(j);
  if (!word.empty() && catalog.word != word) {
    throw std::runtime_error("catalog at " + path + " is for word " + catalog.word);
  }
  return catalog;
}

}  // namespace antlab
