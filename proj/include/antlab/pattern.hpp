#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>

#include "antlab/grid.hpp"

namespace antlab {

enum class Provenance : std::uint8_t { Transcribed, Searched, Constructed };

const char* provenance_name(Provenance p);

/// A finite seed: nonzero cells plus the starting ant pose. Cell coordinates
/// are absolute (the file's `origin` line is folded in on load).
struct Pattern {
  std::string name;
  std::string word_hint;  // rule word the pattern is meant for ("" = any)
  std::map<Coord, std::uint8_t> cells;  // nonzero states only, < 10
  Coord ant;
  Heading heading = Heading::Up;
  Provenance provenance = Provenance::Constructed;

  bool operator==(const Pattern& o) const {
    return word_hint == o.word_hint && cells == o.cells && ant == o.ant && heading == o.heading;
  }
};

/// Pattern file format (line oriented):
///   ant <word> <i> <j> <heading>     heading in {U,R,D,L}
///   origin <i0> <j0>                 grid coordinate of the top-left body char
///   <body rows>                      '.' = state 0, digits 0-9 = states,
///                                    top row first (decreasing y)
/// Lines starting with '#' are comments; `# provenance: <tag>` is recognised.
Pattern parse_pattern(std::istream& in, const std::string& name = "");
Pattern load_pattern(const std::string& path);

std::string format_pattern(const Pattern& p);
void save_pattern(const Pattern& p, const std::string& path);

/// Writes the pattern's nonzero cells over the base grid and takes the ant
/// pose from the pattern. State range vs. a rule word is checked at run time.
AntConfiguration apply_pattern(const Pattern& p, AntConfiguration base = {});

/// Pattern whose cells are the grid's nonzero cells and whose pose is the
/// configuration's pose. Fails (StateOutOfRange) if any state > 9.
Pattern pattern_from_configuration(const AntConfiguration& conf, const std::string& name = "");

}  // namespace antlab
