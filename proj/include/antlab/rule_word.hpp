#pragma once

#include <cstdint>
#include <string>

#include "antlab/errors.hpp"

namespace antlab {

/// The ant's turn program: a non-empty word over {L, R}. State alphabet is
/// {0, ..., size()-1}; state k turns right iff letter k is R.
class RuleWord {
 public:
  // Throws ParseError on empty input or any character outside {L,R,l,r}.
  static RuleWord parse(const std::string& text);

  const std::string& letters() const { return letters_; }
  std::uint8_t size() const { return static_cast<std::uint8_t>(letters_.size()); }
  bool turns_right(std::uint8_t state) const { return right_mask_ >> state & 1; }

  bool operator==(const RuleWord&) const = default;

 private:
  explicit RuleWord(std::string letters);

  std::string letters_;
  std::uint64_t right_mask_ = 0;
};

}  // namespace antlab
