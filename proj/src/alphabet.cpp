#include "subshift/alphabet.hpp"

#include "subshift/errors.hpp"

namespace subshift {

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw InputError("alphabet must not be empty");
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    const auto& s = symbols_[i];
    if (s.empty()) throw InputError("empty symbol name");
    if (s.find(',') != std::string::npos) throw InputError("symbol names may not contain ','");
    if (!index_.emplace(s, static_cast<Symbol>(i)).second)
      throw InputError("duplicate symbol '" + s + "'");
    if (s.size() != 1) single_char_ = false;
  }
}

bool Alphabet::contains(std::string_view name) const {
  return index_.count(std::string(name)) != 0;
}

Symbol Alphabet::index(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) throw InputError("symbol '" + std::string(name) + "' not in alphabet");
  return it->second;
}

Word Alphabet::parse_word(std::string_view text) const {
  Word w;
  if (text.empty()) return w;
  if (single_char_ && text.find(',') == std::string_view::npos) {
    for (char c : text) w.push_back(index(std::string_view(&c, 1)));
    return w;
  }
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    auto piece = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    w.push_back(index(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return w;
}

std::string Alphabet::format_word(const Word& w) const {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!single_char_ && i) out += ',';
    out += name(w[i]);
  }
  return out;
}

}  // namespace subshift
