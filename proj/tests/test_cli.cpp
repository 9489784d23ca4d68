#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "tamari/cli.hpp"
#include "tamari/enumeration.hpp"

using namespace tamari;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

const std::string double_edge = "n=2\nsigma=(1 2)\nalpha=(1 2)\nroot=1\n";

}  // namespace

TEST_CASE("convert the worked examples") {
  CHECK(run({"convert", "--from", "map", "--to", "interval"}, "n=1\nsigma=(1)\nalpha=(1)\nroot=1\n").out ==
        "udud;uudd\n");
  CHECK(run({"convert", "--from", "map", "--to", "tree"}, double_edge).out == "(1:(0:()))\n");
  CHECK(run({"convert", "--from", "tree", "--to", "interval"}, "(1:(0:()))\n").out == "uuddud;uuuddd\n");
  CHECK(run({"convert", "--from", "interval", "--to", "map"}, "uuddud;uuuddd\n").out == double_edge);
  CHECK(run({"convert", "--from", "map", "--to", "map"}, "n=0\n").out == "n=0\n");
}

TEST_CASE("input handling") {
  auto r = run({"convert", "--from", "tree", "--to", "interval", "--input", "-"},
               "# trees\n\n()   \n  (0:()) # single edge\n");
  CHECK(r.code == 0);
  CHECK(r.out == "ud;ud\nudud;uudd\n");

  auto path = std::filesystem::temp_directory_path() / "tamari_cli_input.txt";
  std::ofstream(path) << double_edge << double_edge;
  r = run({"convert", "--from", "map", "--to", "interval", "--input", path.string()});
  CHECK(r.out == "uuddud;uuuddd\nuuddud;uuuddd\n");
  std::filesystem::remove(path);

  r = run({"convert", "--from", "map", "--to", "tree", "--input", "/nonexistent/file"});
  CHECK(r.code == 1);
}

TEST_CASE("errors exit with status 1 and one line") {
  for (const auto& r : {run({"convert", "--from", "tree", "--to", "map"}, "(1:())\n"),
                        run({"convert", "--from", "interval", "--to", "map"}, "uudd;uudd\n"),
                        run({"convert", "--from", "map", "--to", "tree"}, "n=2\nsigma=(1)(2)\nalpha=(1)(2)\nroot=1\n"),
                        run({"convert", "--from", "shape", "--to", "map"}),
                        run({"enumerate", "--family", "maps", "--size", "2", "--bogus"}),
                        run({}),
                        run({"render"}, "udud;uudd\n")}) {
    CHECK(r.code == 1);
    CHECK(r.err.rfind("error: ", 0) == 0);
    CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
  }
}

TEST_CASE("enumerate") {
  CHECK(run({"enumerate", "--family", "intervals", "--size", "2"}).out == "udud;uudd\n");
  CHECK(run({"enumerate", "--family", "trees", "--size", "1", "--with-stats"}).out ==
        "(0:()) # lnode=1 znode=1 pnode=0 rlabel=1\n");
  CHECK(run({"enumerate", "--family", "maps", "--size", "1", "--with-stats"}).out ==
        "n=1\nsigma=(1)\nalpha=(1)\nroot=1\n# black=1 white=1 face=1 outdeg=1\n");
  auto maps = run({"enumerate", "--family", "maps", "--size", "3"});
  CHECK(std::count(maps.out.begin(), maps.out.end(), 'n') == 12);
  CHECK(run({"enumerate", "--family", "maps", "--size", "4"}).out ==
        run({"enumerate", "--family", "maps", "--size", "4"}).out);
}

TEST_CASE("stats") {
  CHECK(run({"stats", "--family", "intervals"}, "uuddud;uuuddd\n").out == "c00=1 c01=1 c11=1 rcont=2\n");
  CHECK(run({"stats", "--family", "maps"}, double_edge).out == "black=1 white=1 face=2 outdeg=1\n");
  CHECK(run({"stats", "--family", "trees"}, "(1:(0:()))\n").out == "lnode=1 znode=1 pnode=1 rlabel=1\n");
}

TEST_CASE("verify and gf") {
  auto r = run({"verify", "--max-size", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("PASS count.families") != std::string::npos);
  CHECK(run({"gf", "--family", "intervals", "--max-size", "2"}).out == "1 0 1 0 0 1\n2 1 1 1 0 1\n");
  CHECK(run({"gf", "--family", "maps", "--max-size", "1"}).out == "0 0 1 0 1 1\n1 1 1 1 1 1\n");
  CHECK(run({"gf", "--family", "trees", "--max-size", "1"}).code == 1);
}

TEST_CASE("render") {
  auto r = run({"render", "--format", "dot"}, double_edge);
  CHECK(r.code == 0);
  CHECK(r.out.rfind("graph planar_map {", 0) == 0);
  r = run({"render"}, "(1:(0:()))\n");
  CHECK(r.out.rfind("digraph", 0) == 0);
}

TEST_CASE("trace") {
  auto dir = std::filesystem::temp_directory_path() / "tamari_cli_trace";
  std::filesystem::remove_all(dir);
  auto r = run({"trace", "--from", "map", "--trace-dir", dir.string()}, double_edge);
  CHECK(r.code == 0);
  CHECK(r.out.rfind("0 A3 n=2 ", 0) == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 4);
  CHECK(std::filesystem::exists(dir / "step-0003.dot"));
  std::filesystem::remove_all(dir);

  r = run({"trace", "--from", "tree"}, "(1:(0:()))\n");
  CHECK(r.out.rfind("0 A1' ", 0) == 0);
  CHECK(r.out.find("\n1 A3' ") != std::string::npos);
  CHECK(run({"trace", "--from", "tree"}, "()\n()\n").code == 1);
}

TEST_CASE("map to interval to map reproduces the text, maps to 4 edges") {
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const auto& m : enum_maps_oracle(n)) {
      std::string text = format_hypermap(to_hypermap(m));
      auto interval = run({"convert", "--from", "map", "--to", "interval"}, text);
      REQUIRE(interval.code == 0);
      auto back = run({"convert", "--from", "interval", "--to", "map"}, interval.out);
      CHECK(back.out == text);
    }
  }
}
