#include <doctest.h>

#include <filesystem>

#include "atheory/cli.hpp"
#include "atheory/io.hpp"

using namespace atheory;
using cli::Status;

namespace {

std::string fixture(const std::string& name) { return std::string(ATHEORY_FIXTURES) + "/" + name; }

cli::CommandResult run(std::vector<std::string> args) {
  auto first = cli::run(args);
  auto second = cli::run(args);
  CHECK(first.report == second.report);  // byte-identical reruns
  CHECK(first.status == second.status);
  return first;
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(cli::CommandResult{Status::ok, "", ""}.exit_code() == 0);
  CHECK(cli::CommandResult{Status::distinct, "", ""}.exit_code() == 10);
  CHECK(cli::CommandResult{Status::unknown, "", ""}.exit_code() == 11);
  CHECK(cli::CommandResult{Status::error, "", ""}.exit_code() == 1);
}

TEST_CASE("a1 subcommand") {
  auto r = run({"a1", fixture("c5.json"), "--base", "0", "--abelianize"});
  CHECK(r.status == Status::ok);
  CHECK(r.report == "free_rank=1 torsion=[]\n");

  auto p = run({"a1", fixture("c4.json"), "--presentation"});
  CHECK(p.report.find("simplified=< | >") != std::string::npos);

  auto d = run({"a1", fixture("c5.json"), "--loop", "0,1,2,3,4,0", "--loop", "0"});
  CHECK(d.status == Status::distinct);
  auto e = run({"a1", fixture("c4.json"), "--loop", "0,1,2,3,0", "--loop", "0", "--json"});
  CHECK(e.status == Status::ok);
  CHECK(e.report.find("\"verdict\": \"equal\"") != std::string::npos);

  auto bad = run({"a1", fixture("c5.json"), "--loop", "0,2,0", "--loop", "0"});
  CHECK(bad.status == Status::error);
}

TEST_CASE("gamma-q subcommand emits a graph that re-parses") {
  auto r = run({"gamma-q", fixture("cone5.facets"), "-q", "1", "--mode", "maximal"});
  REQUIRE(r.status == Status::ok);
  auto g = parse_graph(r.report);
  CHECK(isomorphic(g, cycle_graph(5)));
  CHECK(format_graph(g) == r.report);

  auto based = run({"gamma-q", fixture("ring5.facets"), "-q", "1", "--sigma0", "0 1 2"});
  CHECK(parse_graph(based.report).base().has_value());
  CHECK(run({"gamma-q", fixture("ring5.facets"), "-q", "1", "--mode", "bogus"}).status == Status::error);
  CHECK(run({"gamma-q", fixture("ring5.facets"), "-q", "4"}).status == Status::error);
}

TEST_CASE("product subcommand") {
  auto r = run({"product", fixture("k2.json"), fixture("k2.json")});
  REQUIRE(r.status == Status::ok);
  auto g = parse_graph(r.report);
  CHECK(isomorphic(g, cycle_graph(4)));
  CHECK(format_graph(g) == r.report);
}

TEST_CASE("fvec and loop-graph subcommands") {
  CHECK(run({"fvec", fixture("k2.json"), "--max-dim", "2"}).report == "f_vector=2 2 10\n");
  auto lg = run({"loop-graph", fixture("k2.json"), "--max-len", "2", "--components"});
  CHECK(lg.report.find("truncation max_len=2") != std::string::npos);
  CHECK(lg.report.find("vertices=2 edges=1") != std::string::npos);
  auto literal = run({"loop-graph", fixture("k2.json"), "--max-len", "2", "--no-collapse", "--json"});
  CHECK(literal.report.find("\"collapsed\": false") != std::string::npos);
}

TEST_CASE("homotopy and verify-cert subcommands") {
  const auto dir = std::filesystem::temp_directory_path() / "atheory_cli_test";
  auto found = run({"homotopy", fixture("c4.json"), "--loop", "0,1,2,3,0", "--loop", "0", "--box", "5",
                    "--max-layers", "4", "--cert-dir", dir.string()});
  CHECK(found.status == Status::ok);
  auto verified = run({"verify-cert", (dir / "f.json").string(), (dir / "g.json").string(),
                       (dir / "h.json").string(), "--graph", fixture("c4.json")});
  CHECK(verified.status == Status::ok);

  auto missing = run({"homotopy", fixture("c5.json"), "--loop", "0,1,2,3,4,0", "--loop", "0", "--box", "6x7",
                      "--max-layers", "6"});
  CHECK(missing.status == Status::unknown);

  CHECK(run({"verify-cert", fixture("c4_loop.grid"), fixture("c4_loop.grid"), fixture("c4_loop_reflexive.grid"),
             "--graph", fixture("c4.json")})
            .status == Status::ok);
  CHECK(run({"verify-cert", fixture("c4_loop.grid"), fixture("c4_const.grid"), fixture("c4_contraction.grid"),
             "--graph", fixture("c4.json")})
            .status == Status::ok);
  CHECK(run({"verify-cert", fixture("c4_loop.grid"), fixture("c4_const.grid"), fixture("c4_loop_reflexive.grid"),
             "--graph", fixture("c4.json")})
            .status == Status::error);
  CHECK(run({"homotopy", fixture("c4.json"), "--loop", "0,1,2,3,0", "--loop", "0", "--box", "3"}).status ==
        Status::error);
}

TEST_CASE("alpha subcommand") {
  auto r = run({"alpha", fixture("k2_loops.grid"), "--graph", fixture("k2.json")});
  REQUIRE(r.status == Status::ok);
  auto k2 = read_graph_file(fixture("k2.json"));
  CHECK(parse_grid(r.report, k2) == GridMap(k2, 2, 0, {{{1, 1}, 1}}));
}

TEST_CASE("malformed input gives positioned diagnostics") {
  auto r = run({"a1", fixture("bad_syntax.json")});
  CHECK(r.status == Status::error);
  CHECK(r.diagnostics.find("line 3, column") != std::string::npos);
  auto rev = run({"fvec", fixture("bad_reversed.json")});
  CHECK(rev.diagnostics.find("edges[1]") != std::string::npos);
  CHECK(run({"nonsense"}).status == Status::error);
  CHECK(run({"fvec"}).status == Status::error);
  CHECK(run({"--help"}).status == Status::ok);
}
