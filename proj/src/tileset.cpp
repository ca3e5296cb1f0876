#include "subshift/tileset.hpp"

#include <algorithm>
#include <map>

#include "subshift/errors.hpp"

namespace subshift {

TileSet2D::TileSet2D(Alphabet alphabet, std::vector<Pattern2D> forbidden, nlohmann::json metadata)
    : alphabet_(std::move(alphabet)), forbidden_(std::move(forbidden)), metadata_(std::move(metadata)) {
  const std::size_t k = alphabet_.size();
  auto rules = std::make_shared<CompiledRules>();
  rules->allowed = Bitset::full(k);
  rules->right_of.assign(k, Bitset::full(k));
  rules->left_of.assign(k, Bitset::full(k));
  rules->above.assign(k, Bitset::full(k));
  rules->below.assign(k, Bitset::full(k));
  std::map<std::pair<int, int>, std::size_t> shape_index;
  for (auto& f : forbidden_) {
    if (f.width <= 0 || f.height <= 0) throw InputError("forbidden pattern with empty domain");
    if (f.has_holes()) throw InputError("forbidden patterns must be fully labeled");
    for (Symbol s : f.cells)
      if (s < 0 || static_cast<std::size_t>(s) >= k) throw InputError("forbidden pattern symbol outside alphabet");
    f.x0 = f.y0 = 0;
    window_w_ = std::max(window_w_, f.width);
    window_h_ = std::max(window_h_, f.height);
    if (f.width == 1 && f.height == 1) {
      rules->allowed.reset(static_cast<std::size_t>(f.cells[0]));
    } else if (f.width == 2 && f.height == 1) {
      rules->right_of[f.cells[0]].reset(static_cast<std::size_t>(f.cells[1]));
      rules->left_of[f.cells[1]].reset(static_cast<std::size_t>(f.cells[0]));
    } else if (f.width == 1 && f.height == 2) {
      rules->above[f.cells[0]].reset(static_cast<std::size_t>(f.cells[1]));
      rules->below[f.cells[1]].reset(static_cast<std::size_t>(f.cells[0]));
    } else {
      auto [it, fresh] = shape_index.try_emplace({f.width, f.height}, rules->shapes.size());
      if (fresh) rules->shapes.push_back({f.width, f.height, {}});
      rules->shapes[it->second].forbidden.insert(f.cells);
    }
  }
  rules->reach_up = window_h_ - 1;
  rules_ = std::move(rules);
}

TileSet2D tileset_from_json(const nlohmann::json& j) {
  try {
    Alphabet a(j.at("alphabet").get<std::vector<std::string>>());
    std::vector<Pattern2D> forb;
    for (const auto& f : j.at("forbidden")) {
      int w = f.at("w").get<int>(), h = f.at("h").get<int>();
      auto cells = f.at("cells").get<std::vector<std::string>>();
      if (w <= 0 || h <= 0 || cells.size() != static_cast<std::size_t>(w) * static_cast<std::size_t>(h))
        throw InputError("forbidden pattern cell count does not match w*h");
      Pattern2D p(w, h);
      for (std::size_t i = 0; i < cells.size(); ++i) p.cells[i] = a.index(cells[i]);
      forb.push_back(std::move(p));
    }
    return TileSet2D(std::move(a), std::move(forb), j.value("metadata", nlohmann::json::object()));
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("bad tile set JSON: ") + ex.what());
  }
}

nlohmann::json tileset_to_json(const TileSet2D& ts) {
  nlohmann::json forb = nlohmann::json::array();
  for (const auto& f : ts.forbidden()) {
    std::vector<std::string> cells;
    for (Symbol s : f.cells) cells.push_back(ts.alphabet().name(s));
    forb.push_back({{"w", f.width}, {"h", f.height}, {"cells", cells}});
  }
  nlohmann::json j{{"alphabet", ts.alphabet().symbols()}, {"forbidden", forb}};
  if (!ts.metadata().empty()) j["metadata"] = ts.metadata();
  return j;
}

}  // namespace subshift
