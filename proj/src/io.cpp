#include "atheory/io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace atheory {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character.
    std::size_t line = 1, column = 1;
    const auto stop = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    const auto colon = what.find("syntax error");
    throw ParseError(colon == std::string::npos ? what : what.substr(colon), line, column);
  }
}

const json& member(const json& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected a JSON object at top level");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing key \"") + key + "\"");
  return *it;
}

std::string string_at(const json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where + ": expected a string");
  return j.get<std::string>();
}

Vertex vertex_at(const Graph& g, const json& j, const std::string& where) {
  const auto name = string_at(j, where);
  auto v = g.find(name);
  if (!v) throw ParseError(where + ": unknown vertex '" + name + "'");
  return *v;
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Graph parse_graph(std::string_view text) {
  const auto j = parse_json(text);
  const auto& vs = member(j, "vertices");
  if (!vs.is_array()) throw ParseError("\"vertices\" must be an array");
  std::vector<std::string> names;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const auto where = "vertices[" + std::to_string(i) + "]";
    names.push_back(string_at(vs[i], where));
    if (!seen.insert(names.back()).second) throw ParseError(where + ": duplicate vertex '" + names.back() + "'");
  }
  std::vector<std::pair<std::string, std::string>> edges;
  std::set<std::pair<std::string, std::string>> pairs;
  if (j.contains("edges")) {
    const auto& es = j["edges"];
    if (!es.is_array()) throw ParseError("\"edges\" must be an array");
    for (std::size_t i = 0; i < es.size(); ++i) {
      const auto where = "edges[" + std::to_string(i) + "]";
      if (!es[i].is_array() || es[i].size() != 2) throw ParseError(where + ": expected a pair of vertices");
      auto a = string_at(es[i][0], where);
      auto b = string_at(es[i][1], where);
      if (!seen.count(a)) throw ParseError(where + ": unknown vertex '" + a + "'");
      if (!seen.count(b)) throw ParseError(where + ": unknown vertex '" + b + "'");
      if (a == b) throw ParseError(where + ": loop at '" + a + "'");
      if (pairs.count({b, a})) throw ParseError(where + ": reversed duplicate of edge {" + b + ", " + a + "}");
      if (!pairs.insert({a, b}).second) throw ParseError(where + ": duplicate edge {" + a + ", " + b + "}");
      edges.emplace_back(std::move(a), std::move(b));
    }
  }
  std::optional<std::string> base;
  if (j.contains("base") && !j["base"].is_null()) {
    base = string_at(j["base"], "base");
    if (!seen.count(*base)) throw ParseError("base: unknown vertex '" + *base + "'");
  }
  return Graph::from_names(std::move(names), edges, base);
}

Graph read_graph_file(const std::string& path) {
  try {
    return parse_graph(read_text_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string format_graph(const Graph& g) {
  ordered j;
  j["vertices"] = g.names();
  j["edges"] = ordered::array();
  for (const auto& e : g.edges()) j["edges"].push_back({g.name(e.u), g.name(e.v)});
  if (g.base()) j["base"] = g.name(*g.base());
  return j.dump(2) + "\n";
}

std::string point_key(const Point& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p[i]);
  }
  return out;
}

Point parse_point_key(std::string_view key, int dim) {
  Point p;
  if (dim == 0) {
    if (!key.empty()) throw ParseError("point '" + std::string(key) + "' has the wrong dimension");
    return p;
  }
  std::size_t start = 0;
  while (true) {
    const auto comma = key.find(',', start);
    auto token = key.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || token.empty())
      throw ParseError("bad coordinate in point '" + std::string(key) + "'");
    p.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (static_cast<int>(p.size()) != dim)
    throw ParseError("point '" + std::string(key) + "' has the wrong dimension");
  return p;
}

namespace {

template <class ValueOf>
GridMap grid_from_json(const json& j, const Graph& g, Vertex base, ValueOf&& value_of) {
  const auto& d = member(j, "dim");
  if (!d.is_number_integer() || d.get<int>() < 0) throw ParseError("\"dim\" must be a nonnegative integer");
  const int dim = d.get<int>();
  std::vector<int> axes;
  if (j.contains("degenerate")) {
    const auto& a = j["degenerate"];
    if (!a.is_array()) throw ParseError("\"degenerate\" must be an array");
    for (const auto& x : a) {
      if (!x.is_number_integer() || x.get<int>() < 1 || x.get<int>() > dim)
        throw ParseError("degenerate axis out of range");
      axes.push_back(x.get<int>());
    }
    std::sort(axes.begin(), axes.end());
    if (std::adjacent_find(axes.begin(), axes.end()) != axes.end()) throw ParseError("repeated degenerate axis");
  }
  const int core_dim = dim - static_cast<int>(axes.size());
  std::map<Point, Vertex> support;
  if (j.contains("support")) {
    const auto& s = j["support"];
    if (!s.is_object()) throw ParseError("\"support\" must be an object");
    for (const auto& [key, v] : s.items()) {
      auto p = parse_point_key(key, core_dim);
      const auto where = "support[\"" + key + "\"]";
      if (!support.emplace(std::move(p), value_of(v, where)).second)
        throw ParseError(where + ": point listed twice");
    }
  }
  GridMap out(g, core_dim, base, std::move(support));
  for (int a : axes) out = degeneracy(out, a);
  return out;
}

}  // namespace

GridMap parse_grid(std::string_view text, const Graph& g) {
  const auto j = parse_json(text);
  const Vertex base = vertex_at(g, member(j, "base"), "base");
  return grid_from_json(j, g, base, [&](const json& v, const std::string& where) { return vertex_at(g, v, where); });
}

GridMap read_grid_file(const std::string& path, const Graph& g) {
  try {
    return parse_grid(read_text_file(path), g);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string format_grid(const GridMap& f) {
  ordered j;
  j["dim"] = f.dim();
  j["base"] = f.graph().name(f.base_value());
  if (!f.finitely_supported()) {
    j["degenerate"] = ordered::array();
    for (int a : f.degenerate_axes()) j["degenerate"].push_back(a + 1);
  }
  j["support"] = ordered::object();
  for (const auto& [p, v] : f.core()) j["support"][point_key(p)] = f.graph().name(v);
  return j.dump(2) + "\n";
}

LoopGrid parse_loop_grid(std::string_view text, const Graph& host) {
  const auto j = parse_json(text);
  const Vertex base = host.require_base();
  const auto base_loop = parse_path(host, string_at(member(j, "base"), "base"));
  if (base_loop.walk != std::vector<Vertex>{base})
    throw ParseError("base: must be the length-0 loop at the host base vertex");
  // First pass collects the loops so the loop graph is known before the grid.
  std::vector<PathVertex> loops;
  if (j.contains("support") && j["support"].is_object())
    for (const auto& [key, v] : j["support"].items()) {
      const auto where = "support[\"" + key + "\"]";
      try {
        loops.push_back(parse_path(host, string_at(v, where)));
      } catch (const ParseError&) {
        throw;
      } catch (const Error& e) {
        throw ParseError(where + ": " + e.what());
      }
    }
  auto omega = loop_subgraph(host, base, loops);
  const Vertex root = *omega.find(PathVertex{{base}});
  auto map = grid_from_json(j, omega.graph, root, [&](const json& v, const std::string& where) {
    return *omega.find(normalize(parse_path(host, string_at(v, where))));
  });
  return {std::move(omega), std::move(map)};
}

LoopWalk parse_loop(const Graph& g, std::string_view text) {
  return LoopWalk{parse_path(g, std::string(text)).walk};
}

std::string format_walk(const Graph& g, const std::vector<Vertex>& walk) {
  return path_name(g, PathVertex{walk});
}

}  // namespace atheory
