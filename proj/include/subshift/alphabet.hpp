#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace subshift {

// Symbols are handled internally as indices into the alphabet.
using Symbol = int;
using Word = std::vector<Symbol>;

class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> symbols);

  std::size_t size() const { return symbols_.size(); }
  const std::string& name(Symbol s) const { return symbols_.at(static_cast<std::size_t>(s)); }
  const std::vector<std::string>& symbols() const { return symbols_; }
  bool contains(std::string_view name) const;
  Symbol index(std::string_view name) const;  // throws InputError
  bool single_char() const { return single_char_; }

  // Text forms: plain concatenation when every symbol is one character,
  // comma separated otherwise.
  Word parse_word(std::string_view text) const;
  std::string format_word(const Word& w) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.symbols_ == b.symbols_; }

 private:
  std::vector<std::string> symbols_;
  std::unordered_map<std::string, Symbol> index_;
  bool single_char_ = true;
};

}  // namespace subshift
