#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "subshift/chain.hpp"
#include "subshift/cone.hpp"
#include "subshift/configuration.hpp"
#include "subshift/counter_machine.hpp"
#include "subshift/derivative1d.hpp"
#include "subshift/diamond.hpp"
#include "subshift/errors.hpp"
#include "subshift/grid.hpp"
#include "subshift/poset.hpp"
#include "subshift/sft2d.hpp"
#include "subshift/sofic1d.hpp"

using nlohmann::json;
using namespace subshift;

namespace {

constexpr int kExitVerify = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

struct VerificationFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  bool quiet = false;
  bool timing = false;
  std::uint64_t max_states = 10'000'000;
  std::uint64_t max_patterns = 10'000'000;
  double timeout_s = 60.0;
  std::string format = "json";
};

// Shared state of one invocation: the report under construction plus the
// bytes of every input file, hashed into the digest.
struct Run {
  Options opt;
  std::vector<std::string> argv;
  std::string command;
  std::vector<std::string> input_names;
  std::uint64_t digest = 14695981039346656037ull;
  json results = json::object();

  Budget budget() const { return {opt.max_states, opt.max_patterns, opt.timeout_s}; }

  std::string read(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    std::string data = ss.str();
    for (unsigned char c : data) digest = (digest ^ c) * 1099511628211ull;
    input_names.push_back(path);
    return data;
  }

  json read_json(const std::string& path) {
    std::string text = read(path);
    try {
      return json::parse(text);
    } catch (const json::exception& ex) {
      throw InputError(path + ": " + ex.what());
    }
  }
};

void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << data;
}

std::string hex64(std::uint64_t v) {
  std::ostringstream ss;
  ss << std::hex << std::setw(16) << std::setfill('0') << v;
  return ss.str();
}

std::optional<unsigned> thread_cap() {
  const char* env = std::getenv("SUBSHIFT_LAB_THREADS");
  if (!env || !*env) return std::nullopt;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (*end || v < 1) throw InputError("SUBSHIFT_LAB_THREADS must be a positive integer");
  return static_cast<unsigned>(v);
}

json make_report(const Run& run, double seconds) {
  json budget = {{"max_states", run.opt.max_states},
                 {"max_patterns", run.opt.max_patterns},
                 {"timeout_s", run.opt.timeout_s},
                 {"threads_used", 1}};
  if (auto cap = thread_cap()) budget["threads_cap"] = *cap;
  json r = {{"command", run.command},
            {"args", run.argv},
            {"inputs", run.input_names},
            {"inputs_digest", hex64(run.digest)},
            {"results", run.results},
            {"budget", budget}};
  if (run.opt.timing) r["timing"] = {{"wall_s", seconds}};
  return r;
}

void print_text(const json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      print_text(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

void emit_report(const Run& run, double seconds) {
  if (run.opt.quiet) return;
  json r = make_report(run, seconds);
  if (run.opt.format == "text")
    print_text(r, "", std::cout);
  else
    std::cout << r.dump() << '\n';
}

// ---------------------------------------------------------------------------
// Pattern files
//
// A file whose first line is a JSON header is a configuration window. Any
// other file is read as plain rows, top row first, over the alphabet that
// the caller supplies, or over the sorted set of characters it contains.

struct LoadedPattern {
  Alphabet alphabet;
  Pattern2D pattern;
};

LoadedPattern load_pattern(Run& run, const std::string& path, const Alphabet* alphabet) {
  std::string text = run.read(path);
  if (!text.empty() && text[0] == '{') {
    auto cw = config_from_text(text);
    if (alphabet) {
      Pattern2D p = cw.window;
      for (auto& c : p.cells)
        if (c != kHole) c = alphabet->index(cw.alphabet.name(c));
      return {*alphabet, p};
    }
    return {cw.alphabet, cw.window};
  }
  if (alphabet) return {*alphabet, pattern_from_text(text, *alphabet)};
  std::set<std::string> chars;
  for (char c : text)
    if (c != '\n' && c != '\r' && c != '.') chars.insert(std::string(1, c));
  if (chars.empty()) throw InputError(path + ": empty pattern");
  Alphabet a(std::vector<std::string>(chars.begin(), chars.end()));
  return {a, pattern_from_text(text, a)};
}

TileSet2D load_tileset(Run& run, const std::string& path) { return tileset_from_json(run.read_json(path)); }

LabeledGraph load_graph(Run& run, const std::string& path) { return graph_from_json(run.read_json(path)); }

json relation_json(const TransitionRelation& r, const LabeledGraph& g) {
  json out = json::array();
  for (auto [p, q] : r.pairs()) out.push_back({g.state_name(p), g.state_name(q)});
  return out;
}

// ---------------------------------------------------------------------------
// One-dimensional commands

void cmd_contexts(Run& run, const std::string& path, std::size_t probe_len) {
  auto g = load_graph(run, path);
  auto cp = context_partition(g, probe_len);
  json classes = json::array();
  for (const auto& c : cp.classes)
    classes.push_back({{"representative", g.alphabet().format_word(c.representative)},
                       {"relation", relation_json(c.relation, g)},
                       {"member_count", c.member_count}});
  run.results = {{"probe_len", probe_len},
                 {"class_count", cp.classes.size()},
                 {"stabilized", cp.stabilized},
                 {"stabilization_length", cp.stabilization_length},
                 {"classes", classes}};
}

void cmd_derive(Run& run, const std::string& path, const std::string& out) {
  auto g = load_graph(run, path);
  auto d = derive(g);
  json dj = graph_to_json(d);
  if (!out.empty()) write_file(out, dj.dump(2) + "\n");
  run.results = {{"input_states", g.num_states()},
                 {"states", d.num_states()},
                 {"edges", d.edges().size()},
                 {"empty", d.empty()}};
  if (out.empty())
    run.results["graph"] = dj;
  else
    run.results["output"] = out;
}

void cmd_rank(Run& run, const std::string& path) {
  auto g = load_graph(run, path);
  auto chain = rank_chain(g);
  json sizes = json::array();
  for (const auto& p : chain.presentations) sizes.push_back({{"states", p.num_states()}, {"edges", p.edges().size()}});
  run.results = {{"rank", chain.rank}, {"countable", chain.perfect_kernel_empty}, {"chain", sizes}};
}

void cmd_countable(Run& run, const std::string& path) {
  auto g = load_graph(run, path);
  run.results = {{"countable", is_countable(g)}};
}

// ---------------------------------------------------------------------------
// Two-dimensional commands

void cmd_enum2d(Run& run, const std::string& path, int w, int h, bool count_only) {
  auto ts = load_tileset(run, path);
  if (w < 1 || h < 1) throw InputError("--w and --h must be positive");
  std::uint64_t n = 0;
  if (count_only) {
    n = count_admissible(ts, w, h, run.budget());
  } else {
    const auto& a = ts.alphabet();
    enumerate_admissible(
        ts, w, h,
        [&](const Pattern2D& p) {
          ++n;
          json rows = json::array();
          std::istringstream in(pattern_to_text(p, a));
          for (std::string line; std::getline(in, line);) rows.push_back(line);
          std::cout << json{{"index", n - 1}, {"rows", rows}}.dump() << '\n';
          return true;
        },
        run.budget());
  }
  run.results = {{"w", w}, {"h", h}, {"count", n}};
}

void cmd_extend(Run& run, const std::string& ts_path, const std::string& pat_path, int r, const std::string& out) {
  auto ts = load_tileset(run, ts_path);
  auto lp = load_pattern(run, pat_path, &ts.alphabet());
  auto ext = extend(ts, lp.pattern, r, run.budget());
  run.results = {{"r", r}, {"extensible", ext.has_value()}};
  if (ext) {
    if (!out.empty()) {
      write_file(out, pattern_to_text(*ext, ts.alphabet()));
      run.results["output"] = out;
    } else {
      std::istringstream in(pattern_to_text(*ext, ts.alphabet()));
      json rows = json::array();
      for (std::string line; std::getline(in, line);) rows.push_back(line);
      run.results["witness"] = rows;
    }
  }
}

void cmd_approx(Run& run, const std::string& ts_path, const std::string& pat_path, int n, int m) {
  auto ts = load_tileset(run, ts_path);
  auto lp = load_pattern(run, pat_path, &ts.alphabet());
  bool member = approx_derivative_member(ts, lp.pattern, n, m, run.budget());
  auto [ax, ay] = agree_square_origin(lp.pattern.width, lp.pattern.height, n, m);
  run.results = {{"n", n}, {"m", m}, {"member", member}, {"agree_square_origin", {ax, ay}}};
}

// Re-encodes both patterns over the union of their alphabets, so files
// produced by different generators can be compared by symbol name.
void cmd_compare(Run& run, const std::string& a_path, const std::string& b_path, int size) {
  auto a = load_pattern(run, a_path, nullptr);
  auto b = load_pattern(run, b_path, nullptr);
  std::set<std::string> names(a.alphabet.symbols().begin(), a.alphabet.symbols().end());
  names.insert(b.alphabet.symbols().begin(), b.alphabet.symbols().end());
  Alphabet u(std::vector<std::string>(names.begin(), names.end()));
  auto recode = [&](LoadedPattern& lp) {
    for (auto& c : lp.pattern.cells)
      if (c != kHole) c = u.index(lp.alphabet.name(c));
  };
  recode(a);
  recode(b);
  if (size < 1) throw InputError("--size must be positive");
  auto pa = PatternSet::blocks_of(a.pattern, size, size);
  auto pb = PatternSet::blocks_of(b.pattern, size, size);
  run.results = {{"size", size},
                 {"blocks_a", pa.size()},
                 {"blocks_b", pb.size()},
                 {"a_in_b", subpattern_leq(pa, pb)},
                 {"b_in_a", subpattern_leq(pb, pa)}};
}

void cmd_render(Run& run, const std::string& path, const std::string& out, const std::string& tileset) {
  std::optional<TileSet2D> ts;
  if (!tileset.empty()) ts = load_tileset(run, tileset);
  auto lp = load_pattern(run, path, ts ? &ts->alphabet() : nullptr);
  std::string data = run.opt.format == "text" ? pattern_to_text(lp.pattern, lp.alphabet)
                                              : pattern_to_pgm(lp.pattern, lp.alphabet);
  if (out.empty()) {
    std::cout << data;
    run.opt.quiet = true;
  } else {
    write_file(out, data);
  }
  run.results = {{"width", lp.pattern.width},
                 {"height", lp.pattern.height},
                 {"format", run.opt.format == "text" ? "text" : "pgm"}};
  if (!out.empty()) run.results["output"] = out;
}

// ---------------------------------------------------------------------------
// Generators and verifiers

struct WindowArgs {
  std::optional<int> x0, y0, w, h;
  Bounds with_default(Bounds d) const { return {x0.value_or(d.x0), y0.value_or(d.y0), w.value_or(d.w), h.value_or(d.h)}; }
};

void add_window_flags(CLI::App* app, WindowArgs& wa) {
  app->add_option("--x0", wa.x0, "Window left column");
  app->add_option("--y0", wa.y0, "Window bottom row");
  app->add_option("--w", wa.w, "Window width");
  app->add_option("--h", wa.h, "Window height");
}

void finish_gen(Run& run, const ConfigurationWindow& cw, const std::string& out) {
  std::string text = config_to_text(cw);
  run.results = {{"generator", cw.generator},
                 {"parameters", cw.parameters},
                 {"origin", {cw.window.x0, cw.window.y0}},
                 {"width", cw.window.width},
                 {"height", cw.window.height},
                 {"alphabet_size", cw.alphabet.size()}};
  if (out.empty()) {
    std::istringstream in(text);
    json lines = json::array();
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    run.results["window"] = lines;
  } else {
    write_file(out, text);
    run.results["output"] = out;
  }
}

void write_tileset(Run& run, const TileSet2D& ts, const std::string& path) {
  if (path.empty()) return;
  write_file(path, tileset_to_json(ts).dump() + "\n");
  run.results["tileset"] = path;
}

CounterMachineSpec pick_machine(Run& run, const std::string& name, int guess_k) {
  if (name == "doubling") return doubling_machine();
  if (name == "trivial") return trivial_machine();
  if (name == "guess-loop") return guess_loop_machine(guess_k);
  return machine_from_json(run.read_json(name));
}

std::vector<int> parse_choices(const std::string& s) {
  std::vector<int> out;
  std::istringstream in(s);
  for (std::string tok; std::getline(in, tok, ',');) {
    if (tok.empty()) continue;
    try {
      out.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw InputError("bad choice '" + tok + "'");
    }
  }
  return out;
}

json matrix_json(const std::vector<std::vector<bool>>& m) {
  json out = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (bool b : row) r.push_back(b ? 1 : 0);
    out.push_back(r);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  Run run;
  for (int i = 1; i < argc; ++i) run.argv.emplace_back(argv[i]);

  CLI::App app{"Sofic shift derivatives and two-dimensional SFT constructions"};
  app.name("subshift-lab");
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  app.add_flag("--quiet", run.opt.quiet, "Do not print the run report");
  app.add_flag("--timing", run.opt.timing, "Include wall time in the report");
  app.add_option("--max-states", run.opt.max_states, "Search node and memo budget")->capture_default_str();
  app.add_option("--max-patterns", run.opt.max_patterns, "Emitted pattern budget")->capture_default_str();
  app.add_option("--timeout-s", run.opt.timeout_s, "Wall-clock budget in seconds")->capture_default_str();
  app.add_option("--format", run.opt.format, "Report or render format")
      ->check(CLI::IsMember({"json", "text", "pgm"}))
      ->capture_default_str();

  std::function<void()> action;

  std::string graph_path, out_path, ts_path, pat_path;
  std::size_t probe_len = 8;
  auto* contexts = app.add_subcommand("contexts", "Context classes of a sofic presentation");
  contexts->add_option("graph", graph_path, "LabeledGraph JSON")->required();
  contexts->add_option("--probe-len", probe_len, "Word length to probe")->capture_default_str();
  contexts->callback([&] { action = [&] { cmd_contexts(run, graph_path, probe_len); }; });

  auto* derive_cmd = app.add_subcommand("derive", "Presentation of the derived shift");
  derive_cmd->add_option("graph", graph_path, "LabeledGraph JSON")->required();
  derive_cmd->add_option("-o,--output", out_path, "Write the derived graph here");
  derive_cmd->callback([&] { action = [&] { cmd_derive(run, graph_path, out_path); }; });

  auto* rank = app.add_subcommand("rank", "Cantor-Bendixson rank");
  rank->add_option("graph", graph_path, "LabeledGraph JSON")->required();
  rank->callback([&] { action = [&] { cmd_rank(run, graph_path); }; });

  auto* countable = app.add_subcommand("countable", "Whether the shift is countable");
  countable->add_option("graph", graph_path, "LabeledGraph JSON")->required();
  countable->callback([&] { action = [&] { cmd_countable(run, graph_path); }; });

  int w = 0, h = 0;
  bool count_only = false;
  auto* enum2d = app.add_subcommand("enum2d", "Locally admissible rectangles of a tile set");
  enum2d->add_option("tileset", ts_path, "TileSet2D JSON")->required();
  enum2d->add_option("--w", w, "Width")->required();
  enum2d->add_option("--h", h, "Height")->required();
  enum2d->add_flag("--count-only", count_only, "Only count");
  enum2d->callback([&] { action = [&] { cmd_enum2d(run, ts_path, w, h, count_only); }; });

  int r = 1;
  auto* extend_cmd = app.add_subcommand("extend", "Extend a pattern by r cells on every side");
  extend_cmd->add_option("tileset", ts_path, "TileSet2D JSON")->required();
  extend_cmd->add_option("pattern", pat_path, "Pattern file")->required();
  extend_cmd->add_option("--r", r, "Margin")->required();
  extend_cmd->add_option("-o,--output", out_path, "Write the extension here");
  extend_cmd->callback([&] { action = [&] { cmd_extend(run, ts_path, pat_path, r, out_path); }; });

  int n = 0, m = 0;
  auto* approx = app.add_subcommand("approx-derive2d", "Approximate derivative membership test");
  approx->add_option("tileset", ts_path, "TileSet2D JSON")->required();
  approx->add_option("pattern", pat_path, "Pattern file")->required();
  approx->add_option("--n", n, "Agree-square side")->required();
  approx->add_option("--m", m, "Completion side")->required();
  approx->callback([&] { action = [&] { cmd_approx(run, ts_path, pat_path, n, m); }; });

  std::string b_path;
  int size = 3;
  auto* compare = app.add_subcommand("compare", "Block inclusion between two patterns");
  compare->add_option("a", pat_path, "First pattern file")->required();
  compare->add_option("b", b_path, "Second pattern file")->required();
  compare->add_option("--size", size, "Block side")->capture_default_str();
  compare->callback([&] { action = [&] { cmd_compare(run, pat_path, b_path, size); }; });

  auto* render = app.add_subcommand("render", "Render a pattern as PGM or text");
  render->add_option("pattern", pat_path, "Pattern file")->required();
  render->add_option("-o,--output", out_path, "Output file (stdout if omitted)");
  render->add_option("--tileset", ts_path, "Alphabet source for plain text patterns");
  render->callback([&] { action = [&] { cmd_render(run, pat_path, out_path, ts_path); }; });

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a configuration window");
  gen->require_subcommand(1);
  WindowArgs wa;
  std::string tileset_out;

  int side = 3;
  bool delete_diagonal = false;
  auto* gen_grid = gen->add_subcommand("grid", "Square grid point");
  gen_grid->add_option("--side", side, "Cell side")->capture_default_str();
  gen_grid->add_flag("--delete-diagonal", delete_diagonal, "Blank out the diagonals");
  add_window_flags(gen_grid, wa);
  gen_grid->add_option("-o,--output", out_path, "Window file");
  gen_grid->add_option("--tileset", tileset_out, "Also write the grid tile set here");
  gen_grid->callback([&] {
    action = [&] {
      auto cw = grid_window(side, wa.with_default({0, 0, 4 * (side + 1), 4 * (side + 1)}));
      if (delete_diagonal) {
        const Symbol d = cw.alphabet.index("d"), b = cw.alphabet.index("b");
        for (auto& c : cw.window.cells)
          if (c == d) c = b;
        cw.parameters["deleted_diagonal"] = true;
      }
      finish_gen(run, cw, out_path);
      write_tileset(run, grid_shift(), tileset_out);
    };
  });

  int dn = 1, dm = 1;
  auto* gen_diamond = gen->add_subcommand("diamond", "Nested diamonds of type (n, m)");
  gen_diamond->add_option("--n", dn, "Blue diamond size")->capture_default_str();
  gen_diamond->add_option("--m", dm, "Red diamond size")->capture_default_str();
  add_window_flags(gen_diamond, wa);
  gen_diamond->add_option("-o,--output", out_path, "Window file");
  gen_diamond->add_option("--tileset", tileset_out, "Also write the diamond tile set here");
  gen_diamond->callback([&] {
    action = [&] {
      auto core = diamond_core(dn, dm);
      auto cw = (wa.x0 || wa.y0 || wa.w || wa.h)
                    ? diamond_config(dn, dm,
                                     wa.with_default({core.window.x0, core.window.y0, core.window.width,
                                                      core.window.height}))
                    : core;
      finish_gen(run, cw, out_path);
      write_tileset(run, diamond_shift(), tileset_out);
    };
  });

  std::string poset_path, element;
  auto* gen_poset = gen->add_subcommand("poset", "Point f(x) of the poset embedding");
  gen_poset->add_option("--poset", poset_path, "Poset JSON")->required();
  gen_poset->add_option("--element", element, "Element x")->required();
  add_window_flags(gen_poset, wa);
  gen_poset->add_option("-o,--output", out_path, "Window file");
  gen_poset->callback([&] {
    action = [&] {
      auto p = poset_from_json(run.read_json(poset_path));
      finish_gen(run, poset_config(p, element, wa.with_default({-8, -8, 48, 48})), out_path);
    };
  });

  int chain_i = 1;
  auto* gen_chain = gen->add_subcommand("chain", "Point x_i of the decreasing chain");
  gen_chain->add_option("--i", chain_i, "Chain index")->capture_default_str();
  add_window_flags(gen_chain, wa);
  gen_chain->add_option("-o,--output", out_path, "Window file");
  gen_chain->callback([&] {
    action = [&] { finish_gen(run, chain_point(chain_i, wa.with_default({-16, -16, 64, 64})), out_path); };
  });

  std::string machine = "doubling", choices;
  int cone_l = 2, cone_k = 2, guess_k = 2, sweeps = 3;
  std::optional<int> cone_height;
  auto* gen_cone = gen->add_subcommand("cone", "Counter machine run inside a cone");
  gen_cone->add_option("--machine", machine, "doubling, trivial, guess-loop or a machine JSON file")
      ->capture_default_str();
  gen_cone->add_option("--guess-k", guess_k, "Counters of the guess-loop machine")->capture_default_str();
  gen_cone->add_option("--l", cone_l, "Offset of the wall")->capture_default_str();
  gen_cone->add_option("--k", cone_k, "Extra wall offset")->capture_default_str();
  gen_cone->add_option("--sweeps", sweeps, "Machine steps to show")->capture_default_str();
  gen_cone->add_option("--height", cone_height, "Rows (overrides --sweeps)");
  gen_cone->add_option("--choices", choices, "Comma-separated branch choices");
  gen_cone->add_option("-o,--output", out_path, "Window file");
  gen_cone->callback([&] {
    action = [&] {
      auto spec = pick_machine(run, machine, guess_k);
      auto cw = cone_render(spec, cone_l, cone_k, cone_height.value_or(cone_rows_for_sweeps(sweeps)),
                            parse_choices(choices));
      finish_gen(run, cw, out_path);
      json trace = json::array();
      for (const auto& c : cone_decode(spec, cw).configs)
        trace.push_back({{"state", spec.states.at(static_cast<std::size_t>(c.state))}, {"counters", c.values}});
      run.results["trace"] = trace;
    };
  });

  // verify
  auto* verify = app.add_subcommand("verify", "Check a construction property");
  verify->require_subcommand(1);

  int vi = 1, vj = 2, small = 8, big = 256;
  auto* v_chain = verify->add_subcommand("chain", "Pattern inclusion between x_i and x_j");
  v_chain->add_option("--i", vi, "First index")->capture_default_str();
  v_chain->add_option("--j", vj, "Second index")->capture_default_str();
  v_chain->add_option("--small", small, "Probe pattern side")->capture_default_str();
  v_chain->add_option("--big", big, "Scanned window side")->capture_default_str();
  v_chain->callback([&] {
    action = [&] {
      auto ev = verify_chain(vi, vj, small, big);
      const bool want_leq = vi <= vj, want_geq = vi >= vj;
      const bool ok = ev.leq == want_leq && ev.geq == want_geq;
      run.results = {{"i", vi},         {"j", vj},          {"small", small},         {"big", big},
                     {"leq", ev.leq},   {"geq", ev.geq},    {"expected_leq", want_leq}, {"expected_geq", want_geq},
                     {"ok", ok}};
      if (!ok) throw VerificationFailed("chain inclusion went the unexpected direction");
    };
  });

  auto* v_embed = verify->add_subcommand("embedding", "Poset order is mirrored by pattern inclusion");
  v_embed->add_option("--poset", poset_path, "Poset JSON")->required();
  int e_small = 4, e_big = 512;
  v_embed->add_option("--small", e_small, "Probe pattern side")->capture_default_str();
  v_embed->add_option("--big", e_big, "Scanned window side")->capture_default_str();
  v_embed->callback([&] {
    action = [&] {
      auto p = poset_from_json(run.read_json(poset_path));
      auto mat = verify_embedding(p, e_small, e_big);
      bool ok = true;
      for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = 0; b < p.size(); ++b) ok = ok && mat[a][b] == p.leq(b, a);
      run.results = {{"elements", p.elements()}, {"matrix", matrix_json(mat)}, {"ok", ok}};
      if (!ok) throw VerificationFailed("pattern inclusion does not match the order");
    };
  });

  auto* v_adm = verify->add_subcommand("admissible", "Pattern avoids every forbidden pattern");
  v_adm->add_option("tileset", ts_path, "TileSet2D JSON")->required();
  v_adm->add_option("pattern", pat_path, "Pattern file")->required();
  v_adm->callback([&] {
    action = [&] {
      auto ts = load_tileset(run, ts_path);
      auto lp = load_pattern(run, pat_path, &ts.alphabet());
      bool ok = locally_admissible(ts, lp.pattern);
      run.results = {{"admissible", ok}, {"width", lp.pattern.width}, {"height", lp.pattern.height}};
      if (!ok) throw VerificationFailed("pattern contains a forbidden pattern");
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "subshift-lab: " << e.what() << "\n\n" << app.help();
    return kExitInput;
  }

  for (auto* sub = app.get_subcommands().front(); sub; ) {
    run.command += (run.command.empty() ? "" : " ") + sub->get_name();
    auto subs = sub->get_subcommands();
    sub = subs.empty() ? nullptr : subs.front();
  }

  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(); };
  try {
    if (run.opt.format == "pgm" && run.command != "render") throw InputError("--format pgm only applies to render");
    thread_cap();
    action();
    emit_report(run, elapsed());
    return 0;
  } catch (const VerificationFailed& e) {
    emit_report(run, elapsed());
    std::cerr << "subshift-lab: verification failed: " << e.what() << '\n';
    return kExitVerify;
  } catch (const BudgetError& e) {
    run.results["budget_exceeded"] = e.what();
    run.results["partial_count"] = e.partial_count();
    emit_report(run, elapsed());
    std::cerr << "subshift-lab: budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const InputError& e) {
    std::cerr << "subshift-lab: " << e.what() << '\n';
    return kExitInput;
  } catch (const SimulationError& e) {
    std::cerr << "subshift-lab: " << e.what() << '\n';
    return kExitInput;
  } catch (const json::exception& e) {
    std::cerr << "subshift-lab: bad JSON: " << e.what() << '\n';
    return kExitInput;
  }
}
