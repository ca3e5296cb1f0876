#pragma once

#include <string>

#include <json.hpp>

#include "subshift/pattern2d.hpp"

namespace subshift {

// Plane rectangle [x0, x0 + w) × [y0, y0 + h).
struct Bounds {
  int x0 = 0, y0 = 0, w = 0, h = 0;
};

// A generator's output on a finite window, with enough header data to
// regenerate it.
struct ConfigurationWindow {
  std::string generator;
  nlohmann::json parameters = nlohmann::json::object();
  int scheme_version = 1;
  Alphabet alphabet;
  Pattern2D window;

  nlohmann::json header() const;
};

// One JSON header line followed by the pattern rows.
std::string config_to_text(const ConfigurationWindow& cw);
ConfigurationWindow config_from_text(const std::string& text);

}  // namespace subshift
