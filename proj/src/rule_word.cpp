#include "antlab/rule_word.hpp"

#include <cctype>

namespace antlab {

RuleWord RuleWord::parse(const std::string& text) {
  if (text.empty()) throw ParseError("empty rule word");
  if (text.size() > 64) throw ParseError("rule word longer than 64 letters");
  std::string up;
  up.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[i])));
    if (c != 'L' && c != 'R') {
      throw ParseError("illegal character in rule word at position " + std::to_string(i));
    }
    up.push_back(c);
  }
  return RuleWord(std::move(up));
}

RuleWord::RuleWord(std::string letters) : letters_(std::move(letters)) {
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (letters_[k] == 'R') right_mask_ |= 1ULL << k;
  }
}

}  // namespace antlab
