#include <sstream>

#include "subshift/configuration.hpp"
#include "subshift/errors.hpp"

namespace subshift {

nlohmann::json ConfigurationWindow::header() const {
  return {{"generator", generator},
          {"parameters", parameters},
          {"scheme_version", scheme_version},
          {"origin", {window.x0, window.y0}},
          {"width", window.width},
          {"height", window.height},
          {"alphabet", alphabet.symbols()}};
}

std::string config_to_text(const ConfigurationWindow& cw) {
  return cw.header().dump() + "\n" + pattern_to_text(cw.window, cw.alphabet);
}

ConfigurationWindow config_from_text(const std::string& text) {
  auto nl = text.find('\n');
  std::string first = text.substr(0, nl);
  if (first.empty() || first[0] != '{') throw InputError("configuration file must start with a JSON header line");
  ConfigurationWindow cw;
  try {
    auto h = nlohmann::json::parse(first);
    cw.generator = h.value("generator", "");
    cw.parameters = h.value("parameters", nlohmann::json::object());
    cw.scheme_version = h.value("scheme_version", 1);
    cw.alphabet = Alphabet(h.at("alphabet").get<std::vector<std::string>>());
    cw.window = pattern_from_text(nl == std::string::npos ? "" : text.substr(nl + 1), cw.alphabet);
    if (h.contains("origin")) {
      cw.window.x0 = h["origin"].at(0).get<int>();
      cw.window.y0 = h["origin"].at(1).get<int>();
    }
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("bad configuration header: ") + ex.what());
  }
  return cw;
}

}  // namespace subshift
