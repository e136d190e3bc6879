#include "atheory/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "atheory/cubical.hpp"
#include "atheory/fundamental.hpp"
#include "atheory/graph.hpp"
#include "atheory/io.hpp"
#include "atheory/loopspace.hpp"
#include "atheory/simplicial.hpp"

namespace atheory::cli {

using ordered = nlohmann::ordered_json;

int CommandResult::exit_code() const {
  switch (status) {
    case Status::ok: return 0;
    case Status::distinct: return 10;
    case Status::unknown: return 11;
    case Status::error: return 1;
  }
  return 1;
}

namespace {

struct Options {
  bool json = false;
  std::vector<std::string> files;
  std::string base;
  std::string graph;
  std::vector<std::string> loops;
  bool presentation = false;
  bool abelianize = false;
  int q = 0;
  std::string mode = "maximal";
  std::string sigma0;
  int max_dim = 2;
  int max_len = 4;
  bool no_collapse = false;
  bool components = false;
  std::string box;
  int max_layers = 6;
  std::string cert_dir;
};

Vertex base_of(const Graph& g, const std::string& name) {
  if (!name.empty()) return g.index_of(name);
  return g.require_base();
}

std::vector<std::string> split_tokens(const std::string& text) {
  std::vector<std::string> out;
  std::string token;
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!token.empty()) out.push_back(std::move(token));
      token.clear();
    } else {
      token += c;
    }
  }
  if (!token.empty()) out.push_back(std::move(token));
  return out;
}

std::string json_text(const ordered& j) { return j.dump(2) + "\n"; }

ordered presentation_json(const GroupPresentation& p) {
  ordered j;
  j["generators"] = p.generators;
  j["relators"] = ordered::array();
  for (const auto& r : p.relators) j["relators"].push_back(format_word(p, r));
  return j;
}

ordered invariants_json(const AbelianInvariants& a) {
  ordered j;
  j["free_rank"] = a.free_rank;
  j["torsion"] = a.torsion;
  return j;
}

CommandResult cmd_product(const Options& o) {
  const auto g = read_graph_file(o.files.at(0));
  const auto h = read_graph_file(o.files.at(1));
  return {Status::ok, format_graph(cartesian_product(g, h)), ""};
}

CommandResult cmd_a1(const Options& o) {
  CommandResult r;
  const auto g = read_graph_file(o.files.at(0));
  const Vertex base = base_of(g, o.base);
  const A1Presentation a1(g, base);
  if (a1.restricted())
    r.diagnostics += "warning: graph is disconnected; restricted to the component of the base vertex\n";
  const auto& raw = a1.presentation();
  const auto simple = tietze_reduce(raw);
  const bool none = !o.presentation && !o.abelianize;
  const bool show_presentation = o.presentation || (none && o.loops.empty());
  const bool show_abelian = o.abelianize || (none && o.loops.empty());
  if (o.loops.size() > 2) throw Error("at most two --loop options");

  ordered j;
  std::ostringstream text;
  if (show_presentation) {
    j["presentation"] = presentation_json(raw);
    j["simplified"] = presentation_json(simple.presentation);
    text << "presentation=" << format_presentation(raw) << "\n";
    text << "simplified=" << format_presentation(simple.presentation) << "\n";
  }
  if (show_abelian) {
    const auto inv = abelianization(raw);
    j["abelianization"] = invariants_json(inv);
    text << format_invariants(inv) << "\n";
  }
  std::vector<LoopWalk> walks;
  for (const auto& l : o.loops) {
    walks.push_back(parse_loop(g, l));
    validate_loop(g, base, walks.back());
  }
  if (!walks.empty()) {
    j["words"] = ordered::array();
    for (std::size_t i = 0; i < walks.size(); ++i) {
      const auto w = a1.word_of(walks[i]);
      const auto reduced = free_reduce(substitute(w, simple.images));
      j["words"].push_back({{"loop", o.loops[i]},
                            {"word", format_word(raw, w)},
                            {"simplified", format_word(simple.presentation, reduced)}});
      text << "word[" << i + 1 << "]=" << format_word(raw, w)
           << " simplified=" << format_word(simple.presentation, reduced) << "\n";
    }
  }
  if (walks.size() == 2) {
    const auto v = loops_equivalent(walks[0], walks[1], g, base);
    j["verdict"] = to_string(v);
    text << "verdict=" << to_string(v) << "\n";
    r.status = v == Verdict::equal ? Status::ok : v == Verdict::distinct ? Status::distinct : Status::unknown;
  }
  r.report = o.json ? json_text(j) : text.str();
  return r;
}

CommandResult cmd_gamma_q(const Options& o) {
  CommandResult r;
  const auto complex = parse_facets(read_text_file(o.files.at(0)));
  for (const auto& face : complex.dropped()) {
    std::string joined;
    for (const auto& t : face) joined += (joined.empty() ? "" : " ") + t;
    r.diagnostics += "warning: dropped non-maximal or repeated facet {" + joined + "}\n";
  }
  GammaMode mode;
  if (o.mode == "maximal") {
    mode = GammaMode::maximal;
  } else if (o.mode == "all") {
    mode = GammaMode::all;
  } else {
    throw Error("--mode must be 'maximal' or 'all'");
  }
  std::optional<std::vector<std::string>> sigma0;
  if (!o.sigma0.empty()) sigma0 = split_tokens(o.sigma0);
  r.report = format_graph(gamma_q(complex, o.q, mode, sigma0));
  return r;
}

CommandResult cmd_fvec(const Options& o) {
  const auto g = read_graph_file(o.files.at(0));
  if (o.max_dim < 0) throw Error("--max-dim must be nonnegative");
  const auto fv = f_vector(g, o.max_dim);
  if (o.json) return {Status::ok, json_text(ordered{{"f_vector", fv}}), ""};
  std::string text = "f_vector=";
  for (std::size_t i = 0; i < fv.size(); ++i) text += (i ? " " : "") + std::to_string(fv[i]);
  return {Status::ok, text + "\n", ""};
}

CommandResult cmd_loop_graph(const Options& o) {
  const auto g = read_graph_file(o.files.at(0));
  const Vertex base = base_of(g, o.base);
  const auto omega = build_loop_graph(g, base, o.max_len, !o.no_collapse);
  const auto& lg = omega.graph;
  ordered j;
  std::ostringstream text;
  j["max_length"] = o.max_len;
  j["collapsed"] = !o.no_collapse;
  text << "truncation max_len=" << o.max_len << " collapsed=" << (o.no_collapse ? "false" : "true") << "\n";
  text << "vertices=" << lg.order() << " edges=" << lg.size() << "\n";
  j["graph"] = ordered::parse(format_graph(lg));
  if (o.components) {
    const auto pc = a0(lg, lg.base());
    j["components"] = ordered::array();
    text << "components=" << pc.components.size() << " base_component=" << pc.base_component + 1 << "\n";
    for (std::size_t i = 0; i < pc.components.size(); ++i) {
      ordered names = ordered::array();
      text << "component " << i + 1 << ":";
      for (auto v : pc.components[i]) {
        names.push_back(lg.name(v));
        text << " (" << lg.name(v) << ")";
      }
      text << "\n";
      j["components"].push_back(std::move(names));
    }
    j["base_component"] = pc.base_component + 1;
  }
  return {Status::ok, o.json ? json_text(j) : text.str(), ""};
}

std::vector<int> parse_box(const std::string& text) {
  std::vector<int> out;
  std::size_t start = 0;
  while (true) {
    const auto x = text.find('x', start);
    const auto token = text.substr(start, x == std::string::npos ? std::string::npos : x - start);
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(token, &used));
      if (used != token.size() || out.back() < 1) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw Error("--box must look like W or WxH with positive integers, got '" + text + "'");
    }
    if (x == std::string::npos) break;
    start = x + 1;
  }
  if (out.size() > 2) throw Error("--box takes at most two extents for loops");
  return out;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out << content;
}

CommandResult cmd_homotopy(const Options& o) {
  const auto g = read_graph_file(o.files.at(0));
  const Vertex base = base_of(g, o.base);
  if (o.loops.size() != 2) throw Error("homotopy needs exactly two --loop options");
  std::vector<GridMap> ends;
  for (const auto& l : o.loops) {
    const auto walk = parse_loop(g, l);
    validate_loop(g, base, walk);
    ends.push_back(GridMap::from_walk(g, walk.vertices, base));
  }
  const auto box = parse_box(o.box.empty() ? "7" : o.box);
  int layers = o.max_layers;
  if (box.size() == 2) layers = std::min(layers, box[1] - 1);
  BoundedSearch search(ends[0], SearchBox{{0}, {box[0]}}, layers);
  const auto cert = search.certificate_to(ends[1]);
  ordered j;
  std::ostringstream text;
  j["box"] = box;
  j["max_layers"] = layers;
  j["found"] = cert.has_value();
  CommandResult r;
  if (cert) {
    const int k = static_cast<int>(cert->layers.size()) - 1;
    j["layers"] = k;
    j["h"] = ordered::parse(format_grid(cert->h));
    text << "found layers=" << k << "\n";
    for (std::size_t t = 0; t < cert->layers.size(); ++t) {
      std::vector<Vertex> row;
      for (int x = 0; x < box[0]; ++x) row.push_back(cert->layers[t].at(std::vector<int>{x}));
      text << "row " << t << ": " << format_walk(g, row) << "\n";
    }
    if (!o.cert_dir.empty()) {
      const std::filesystem::path dir(o.cert_dir);
      std::filesystem::create_directories(dir);
      write_file(dir / "f.json", format_grid(cert->f));
      write_file(dir / "g.json", format_grid(cert->g));
      write_file(dir / "h.json", format_grid(cert->h));
    }
  } else {
    r.status = Status::unknown;
    text << "not found within box " << (o.box.empty() ? "7" : o.box) << " and " << layers
         << " layers (not a proof of inequivalence)\n";
  }
  r.report = o.json ? json_text(j) : text.str();
  return r;
}

CommandResult cmd_verify_cert(const Options& o) {
  if (o.graph.empty()) throw Error("verify-cert needs --graph");
  const auto graph = read_graph_file(o.graph);
  const auto f = read_grid_file(o.files.at(0), graph);
  const auto g = read_grid_file(o.files.at(1), graph);
  const auto h = read_grid_file(o.files.at(2), graph);
  if (f.dim() != g.dim() || h.dim() != f.dim() + 1)
    throw Error("h must have dimension one more than f and g");
  const bool valid = check_certificate(f, g, h);
  CommandResult r;
  r.status = valid ? Status::ok : Status::error;
  r.report = o.json ? json_text(ordered{{"valid", valid}}) : std::string(valid ? "certificate valid\n" : "certificate rejected\n");
  return r;
}

CommandResult cmd_alpha(const Options& o) {
  if (o.graph.empty()) throw Error("alpha needs --graph for the host graph");
  const auto host = read_graph_file(o.graph);
  host.require_base();
  LoopGrid input;
  try {
    input = parse_loop_grid(read_text_file(o.files.at(0)), host);
  } catch (const ParseError& e) {
    throw ParseError(o.files.at(0) + ": " + e.what());
  }
  return {Status::ok, format_grid(alpha(input.map, input.omega)), ""};
}

}  // namespace

CommandResult run(const std::vector<std::string>& args) {
  Options o;
  CLI::App app{"Discrete homotopy invariants of graphs and simplicial complexes", "atheory"};
  app.require_subcommand(1);

  auto json_flag = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "Machine-readable output"); };

  auto* product = app.add_subcommand("product", "Cartesian product of two graph files");
  product->add_option("graphs", o.files, "Two graph files")->expected(2)->required();
  json_flag(product);

  auto* a1 = app.add_subcommand("a1", "Presentation of A_1 and loop comparison");
  a1->add_option("graph", o.files, "Graph file")->expected(1)->required();
  a1->add_option("--base", o.base, "Base vertex (default: the file's base)");
  a1->add_flag("--presentation", o.presentation, "Print the raw and simplified presentation");
  a1->add_flag("--abelianize", o.abelianize, "Print the abelian invariants");
  a1->add_option("--loop", o.loops, "Based loop as comma-separated vertices (repeatable)");
  json_flag(a1);

  auto* gq = app.add_subcommand("gamma-q", "Graph Γ_q of a facet file");
  gq->add_option("facets", o.files, "Facet file")->expected(1)->required();
  gq->add_option("-q", o.q, "Shared face dimension")->required();
  gq->add_option("--mode", o.mode, "maximal or all");
  gq->add_option("--sigma0", o.sigma0, "Base simplex as a vertex list");
  json_flag(gq);

  auto* fvec = app.add_subcommand("fvec", "Nondegenerate cell counts of M_*(Γ)");
  fvec->add_option("graph", o.files, "Graph file")->expected(1)->required();
  fvec->add_option("--max-dim", o.max_dim, "Largest dimension");
  json_flag(fvec);

  auto* lg = app.add_subcommand("loop-graph", "Truncated loop graph");
  lg->add_option("graph", o.files, "Graph file")->expected(1)->required();
  lg->add_option("--base", o.base, "Base vertex");
  lg->add_option("--max-len", o.max_len, "Longest walk");
  lg->add_flag("--no-collapse", o.no_collapse, "Keep padded walks as separate vertices");
  lg->add_flag("--components", o.components, "List connected components");
  json_flag(lg);

  auto* hom = app.add_subcommand("homotopy", "Bounded search for a homotopy between two loops");
  hom->add_option("graph", o.files, "Graph file")->expected(1)->required();
  hom->add_option("--base", o.base, "Base vertex");
  hom->add_option("--loop", o.loops, "Based loop (give twice)");
  hom->add_option("--box", o.box, "W or WxH; H-1 caps the number of layers");
  hom->add_option("--max-layers", o.max_layers, "Largest number of layers");
  hom->add_option("--cert-dir", o.cert_dir, "Write f.json, g.json, h.json here when found");
  json_flag(hom);

  auto* vc = app.add_subcommand("verify-cert", "Check a homotopy certificate");
  vc->add_option("grids", o.files, "f, g and h grid files")->expected(3)->required();
  vc->add_option("--graph", o.graph, "Graph file the grids map into")->required();
  json_flag(vc);

  auto* al = app.add_subcommand("alpha", "Turn a grid of loops into a grid one dimension up");
  al->add_option("grid", o.files, "Grid file whose values are loops")->expected(1)->required();
  al->add_option("--graph", o.graph, "Host graph file")->required();
  json_flag(al);

  CommandResult r;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    const int code = app.exit(e, out, err);
    r.status = code == 0 ? Status::ok : Status::error;
    r.report = out.str();
    r.diagnostics = err.str();
    return r;
  }

  try {
    if (product->parsed()) return cmd_product(o);
    if (a1->parsed()) return cmd_a1(o);
    if (gq->parsed()) return cmd_gamma_q(o);
    if (fvec->parsed()) return cmd_fvec(o);
    if (lg->parsed()) return cmd_loop_graph(o);
    if (hom->parsed()) return cmd_homotopy(o);
    if (vc->parsed()) return cmd_verify_cert(o);
    if (al->parsed()) return cmd_alpha(o);
  } catch (const std::exception& e) {
    r.status = Status::error;
    r.diagnostics = std::string("error: ") + e.what() + "\n";
    return r;
  }
  r.status = Status::error;
  r.diagnostics = "error: no subcommand\n";
  return r;
}

}  // namespace atheory::cli
