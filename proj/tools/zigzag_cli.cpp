// Command-line front end for the zigzag-distance library.
//
// Exit codes: 0 success or property true, 1 property false, 2 input error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <string>

#include "zigzag/report.hpp"
#include "zigzag/zigzag.hpp"

namespace {

using namespace zigzag;

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kInputError = 2;

DiGraph load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error(path + ": cannot open file");
  ParsedGraph p = parse_dg(in, path);
  for (const auto& w : p.warnings) std::cerr << "warning: " << w << '\n';
  return std::move(p.graph);
}

void emit(bool json, const Json& j, const std::string& text) {
  if (json)
    std::cout << j.dump(2) << '\n';
  else
    std::cout << text;
}

int analyze(const std::string& file, bool json) {
  DiGraph g = load(file);
  DistanceMatrix d = distance_matrix(g);
  ObstructionReport obs = obstruction_check(g);
  Json closed = Json::object();
  std::string closed_text;
  for (Vertex x = 0; x < g.size(); ++x)
    for (Vertex y = 0; y < g.size(); ++y) {
      bool c = is_macneille_closed(d(x, y));
      closed[g.name(x) + "," + g.name(y)] = c;
      if (!c) closed_text += "  d(" + g.name(x) + ", " + g.name(y) + ") is not MacNeille-closed\n";
    }
  Json j{{"vertices", g.size()}, {"arcs", g.arc_count()},        {"oriented", is_oriented(g)},
         {"acyclic", is_acyclic(g)}, {"obstructions", obstruction_json(g, obs)}, {"distances", matrix_json(d)},
         {"macneille_closed", std::move(closed)}};
  std::string text = "vertices: " + std::to_string(g.size()) + ", arcs: " + std::to_string(g.arc_count()) + '\n' +
                     "oriented: " + yes_no(is_oriented(g)) + '\n' + "acyclic: " + yes_no(is_acyclic(g)) + '\n' +
                     obstruction_text(g, obs) + matrix_text(d) + "MacNeille-closed: " +
                     (closed_text.empty() ? "all pairs\n" : "no\n" + closed_text);
  emit(json, j, text);
  return kTrue;
}

int distance_cmd(const std::string& file, const std::string& x, const std::string& y, bool json) {
  DiGraph g = load(file);
  UpSet d = distance(g, g.vertex(x), g.vertex(y));
  emit(json, Json{{"x", x}, {"y", y}, {"distance", upset_json(d)}}, to_string(d) + '\n');
  return kTrue;
}

int check_ar(const std::string& file, bool json) {
  DiGraph g = load(file);
  ArVerdict v = is_absolute_retract(g);
  emit(json, verdict_json(g, v), verdict_text(g, v));
  return v.verdict ? kTrue : kFalse;
}

int embed(const std::string& file, std::optional<std::size_t> bound, bool minimize, bool json) {
  DiGraph g = load(file);
  EmbeddingCertificate c;
  if (minimize) {
    if (!is_connected(g)) throw input_error("--minimize needs a connected graph");
    c = minimum_zigzag_embedding(g);
  } else {
    c = embed_zigzag_product(g, bound.value_or(2 * g.size()));
  }
  emit(json, certificate_json(g, c), certificate_text(g, c));
  return c.isometric ? kTrue : kFalse;
}

int hull(const std::string& file, std::size_t max_add, bool json) {
  DiGraph g = load(file);
  HullResult h = injective_hull_search(g, max_add);
  emit(json, hull_json(h), hull_text(h));
  return h.status == HullResult::Status::found ? kTrue : kFalse;
}

int retract(const std::string& host_file, const std::string& sub_file, bool json) {
  DiGraph host = load(host_file);
  DiGraph sub = load(sub_file);
  RetractionResult r = retraction_search(host, sub);
  emit(json, retraction_json(host, r), retraction_text(host, r));
  return r.retraction ? kTrue : kFalse;
}

int selftest(std::size_t max_n, std::uint64_t seed, bool json) {
  ConsistencyReport r = check_theorem_consistency(max_n, seed);
  Json j{{"graphs", r.graphs},
         {"connected", r.connected},
         {"closed", r.closed},
         {"absolute_retracts", r.absolute_retracts},
         {"extensions_checked", r.extensions_checked},
         {"violations", r.violations},
         {"ok", r.ok()}};
  std::string text = "graphs: " + std::to_string(r.graphs) + " (connected " + std::to_string(r.connected) +
                     ", closed " + std::to_string(r.closed) + ", absolute retracts " +
                     std::to_string(r.absolute_retracts) + ")\nretraction checks: " +
                     std::to_string(r.extensions_checked) + '\n';
  for (const auto& v : r.violations) text += "VIOLATION " + v + '\n';
  text += r.ok() ? "selftest: ok\n" : "selftest: FAILED\n";
  emit(json, j, text);
  return r.ok() ? kTrue : kFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zigzag distances, absolute retracts and hulls of oriented graphs"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Emit JSON instead of text");

  std::string file, file2, x, y;
  std::optional<std::size_t> bound;
  bool minimize = false;
  std::size_t max_add = 3, max_n = 4;
  std::uint64_t seed = 1;

  auto* a = app.add_subcommand("analyze", "Orientation, acyclicity, obstructions and the distance matrix");
  a->add_option("file", file, ".dg graph file")->required();
  auto* d = app.add_subcommand("distance", "Minimal words of d(x, y)");
  d->add_option("file", file, ".dg graph file")->required();
  d->add_option("x", x, "source vertex")->required();
  d->add_option("y", y, "target vertex")->required();
  auto* c = app.add_subcommand("check-ar", "Absolute-retract verdict (exit 1 when false)");
  c->add_option("file", file, ".dg graph file")->required();
  auto* e = app.add_subcommand("embed", "Isometric embedding into a product of zigzags");
  e->add_option("file", file, ".dg graph file")->required();
  e->add_option("--bound", bound, "word-length bound for disconnected pairs (default 2|V|)");
  e->add_flag("--minimize", minimize, "use the fewest factors (connected graphs)");
  auto* h = app.add_subcommand("hull", "Smallest absolute-retract extension inside the product universe");
  h->add_option("file", file, ".dg graph file")->required();
  h->add_option("--max-add", max_add, "maximum number of added vertices")->capture_default_str();
  auto* r = app.add_subcommand("retract", "Retraction of HOST onto SUB fixing SUB");
  r->add_option("host", file, "host .dg file")->required();
  r->add_option("sub", file2, "subgraph .dg file")->required();
  auto* s = app.add_subcommand("selftest", "Exhaustive consistency check over small oriented graphs");
  s->add_option("--max-n", max_n, "largest vertex count")->capture_default_str();
  s->add_option("--seed", seed, "seed for random extensions")->capture_default_str();
  for (auto* sub : {a, d, c, e, h, r, s}) sub->add_flag("--json", json, "Emit JSON instead of text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& err) {
    return app.exit(err);
  } catch (const CLI::CallForAllHelp& err) {
    return app.exit(err);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return kInputError;
  }

  try {
    if (*a) return analyze(file, json);
    if (*d) return distance_cmd(file, x, y, json);
    if (*c) return check_ar(file, json);
    if (*e) return embed(file, bound, minimize, json);
    if (*h) return hull(file, max_add, json);
    if (*r) return retract(file, file2, json);
    if (*s) return selftest(max_n, seed, json);
  } catch (const input_error& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
