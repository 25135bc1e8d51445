#include "antlab/pattern.hpp"

#include <fstream>
#include <sstream>

#include "antlab/errors.hpp"

namespace antlab {

const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::Transcribed: return "transcribed";
    case Provenance::Searched: return "searched";
    case Provenance::Constructed: return "constructed";
  }
  return "constructed";
}

namespace {

bool parse_provenance(const std::string& s, Provenance& out) {
  if (s == "transcribed") out = Provenance::Transcribed;
  else if (s == "searched") out = Provenance::Searched;
  else if (s == "constructed") out = Provenance::Constructed;
  else return false;
  return true;
}

[[noreturn]] void fail(int line, const std::string& reason) {
  throw ParseError("pattern line " + std::to_string(line) + ": " + reason);
}

}  // namespace

Pattern parse_pattern(std::istream& in, const std::string& name) {
  Pattern p;
  p.name = name;
  std::string line;
  int lineno = 0;
  bool have_ant = false, have_origin = false;
  Coord origin;
  std::int64_t row = 0;

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream ss(line.substr(1));
      std::string key, value;
      if (ss >> key >> value && key == "provenance:") parse_provenance(value, p.provenance);
      continue;
    }
    if (!have_ant) {
      std::istringstream ss(line);
      std::string tag, word, heading;
      if (!(ss >> tag >> word >> p.ant.x >> p.ant.y >> heading) || tag != "ant") {
        fail(lineno, "expected `ant <word> <i> <j> <heading>`");
      }
      if (heading.size() != 1 || !parse_heading(heading[0], p.heading)) {
        fail(lineno, "bad heading `" + heading + "`");
      }
      p.word_hint = word;
      have_ant = true;
      continue;
    }
    if (!have_origin) {
      std::istringstream ss(line);
      std::string tag;
      if (!(ss >> tag >> origin.x >> origin.y) || tag != "origin") {
        fail(lineno, "expected `origin <i0> <j0>`");
      }
      have_origin = true;
      continue;
    }
    // body row; top row first, so y decreases as rows go down
    for (std::size_t col = 0; col < line.size(); ++col) {
      const char c = line[col];
      if (c == '.') continue;
      if (c < '0' || c > '9') fail(lineno, std::string("bad body character `") + c + "`");
      if (c != '0') {
        p.cells[{origin.x + static_cast<std::int64_t>(col), origin.y - row}] =
            static_cast<std::uint8_t>(c - '0');
      }
    }
    ++row;
  }
  if (!have_ant) throw ParseError("pattern file has no `ant` header");
  return p;
}

Pattern load_pattern(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open pattern file " + path);
  std::string name = path;
  if (auto slash = name.find_last_of('/'); slash != std::string::npos) name = name.substr(slash + 1);
  if (auto dot = name.rfind(".ant"); dot != std::string::npos) name = name.substr(0, dot);
  return parse_pattern(in, name);
}

std::string format_pattern(const Pattern& p) {
  std::ostringstream out;
  out << "# provenance: " << provenance_name(p.provenance) << "\n";
  out << "ant " << (p.word_hint.empty() ? "?" : p.word_hint) << " " << p.ant.x << " " << p.ant.y
      << " " << heading_char(p.heading) << "\n";
  if (p.cells.empty()) {
    out << "origin 0 0\n";
    return out.str();
  }
  Coord lo = p.cells.begin()->first, hi = lo;
  for (const auto& [c, s] : p.cells) {
    lo.x = std::min(lo.x, c.x);
    lo.y = std::min(lo.y, c.y);
    hi.x = std::max(hi.x, c.x);
    hi.y = std::max(hi.y, c.y);
  }
  out << "origin " << lo.x << " " << hi.y << "\n";
  for (std::int64_t y = hi.y; y >= lo.y; --y) {
    std::string rowtext;
    for (std::int64_t x = lo.x; x <= hi.x; ++x) {
      auto it = p.cells.find({x, y});
      rowtext.push_back(it == p.cells.end() ? '.' : static_cast<char>('0' + it->second));
    }
    out << rowtext << "\n";
  }
  return out.str();
}

void save_pattern(const Pattern& p, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write pattern file " + path);
  out << format_pattern(p);
}

AntConfiguration apply_pattern(const Pattern& p, AntConfiguration base) {
  for (const auto& [c, s] : p.cells) base.grid.set(c, s);
  base.position = p.ant;
  base.heading = p.heading;
  return base;
}

Pattern pattern_from_configuration(const AntConfiguration& conf, const std::string& name) {
  Pattern p;
  p.name = name;
  p.ant = conf.position;
  p.heading = conf.heading;
  for (const auto& [c, s] : conf.grid.nonzero_cells()) {
    if (s > 9) throw StateOutOfRange("state > 9 cannot be written as a pattern");
    p.cells[c] = s;
  }
  return p;
}

}  // namespace antlab
