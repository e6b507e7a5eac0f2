#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "cli.hpp"
#include "doctest.h"
#include "ewb/closure.hpp"
#include "ewb/free_group.hpp"
#include "ewb/markov.hpp"
#include "support.hpp"

using namespace ewb;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run ewb_run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(EWB_DATA_DIR) + "/" + name; }

class Scratch {
 public:
  Scratch() : dir_(fs::temp_directory_path() / ("ewb_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(dir_);
  }
  ~Scratch() { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
    return path(name);
  }
  std::string read(const std::string& name) const {
    std::ifstream in(path(name));
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

 private:
  fs::path dir_;
};

}  // namespace

TEST_CASE("cli examples") {
  auto rel = ewb_run({"verify-relations", "--n", "6"});
  CHECK(rel.code == 0);
  CHECK(rel.out.find("all relation instances verified") != std::string::npos);

  CHECK(ewb_run({"eq-word", data("braid_a.bw"), data("braid_b.bw")}).code == 0);

  auto t1 = ewb_run({"close", "--input", data("t1.bw")});
  CHECK(t1.code == 2);
  CHECK(t1.err.find("not closable: component 1 has odd wen parity") != std::string::npos);
}

TEST_CASE("cli exit codes for false and input errors") {
  Scratch s;
  auto a = s.write("a.bw", "strands 3\ns1 s1 s1\n");
  auto id = s.write("id.bw", "strands 3\n\n");
  CHECK(ewb_run({"eq-word", a, id}).code == 1);
  CHECK(ewb_run({"eq-word", a, s.write("two.bw", "strands 2\n")}).code == 1);

  auto missing = ewb_run({"close", s.path("nope.bw")});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("cannot open") != std::string::npos);

  auto bad = ewb_run({"close", s.write("bad.bw", "strands 2\ns1 q7\n")});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("line 2") != std::string::npos);

  auto bad_gauss = ewb_run({"gauss-validate", s.write("bad.gd", "crossing c1 +\narc c1.3 c1.1 0\nlooops 0\n")});
  CHECK(bad_gauss.code == 2);
  CHECK(bad_gauss.err.find("line 3") != std::string::npos);

  // parses, but a crossing is missing its arcs
  CHECK(ewb_run({"gauss-validate", s.write("dangling.gd", "crossing c1 +\narc c1.3 c1.1 0\nloops 0\n")}).code == 1);
  CHECK(ewb_run({"gauss-validate", data("L1.gd")}).code == 0);

  CHECK(ewb_run({"no-such-verb"}).code == 2);
  CHECK(ewb_run({"verify-relations", "--n", "0"}).code == 2);
}

TEST_CASE("cli machine format is key=value") {
  auto r = ewb_run({"--format", "machine", "invariants", data("L1.gd")});
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  bool saw_components = false;
  while (std::getline(in, line)) {
    CHECK(line.find('=') != std::string::npos);
    if (line == "components=2") saw_components = true;
  }
  CHECK(saw_components);
  CHECK(r.out.rfind("verb=invariants\nstatus=ok\n", 0) == 0);

  auto err = ewb_run({"close", data("t1.bw"), "--format", "machine"});
  CHECK(err.code == 2);
  CHECK(err.out.find("status=error") != std::string::npos);
}

TEST_CASE("cli file round trips") {
  Scratch s;
  std::mt19937_64 rng(41);
  for (int k = 0; k < 30; ++k) {
    BraidWord b = testing::random_closable_word(rng, 4, 10);
    auto w = s.write("w.bw", format_word_file(b));

    // close writes Gauss data; parse(format) is the identity on it
    REQUIRE(ewb_run({"close", w, "-o", s.path("w.gd")}).code == 0);
    GaussData g = parse_gauss(s.read("w.gd"));
    CHECK(g == closure(b));
    CHECK(format_gauss(parse_gauss(format_gauss(g))) == format_gauss(g));

    // braiding, closing again, and comparing stays inside the CLI
    REQUIRE(ewb_run({"braid", s.path("w.gd"), "-o", s.path("back.bw")}).code == 0);
    CHECK(parse_word_file(s.read("back.bw")) == braid_from_gauss(g));
    REQUIRE(ewb_run({"close", s.path("back.bw"), "-o", s.path("back.gd")}).code == 0);
    CHECK(ewb_run({"eq-gauss", s.path("w.gd"), s.path("back.gd")}).code == 0);

    // stdout form equals the file form
    CHECK(ewb_run({"signrev-word", w}).out == format_word_file(sign_reversal_word(b)));
    CHECK(parse_word_file(format_word_file(b)) == b);
  }
}

TEST_CASE("cli markov witness replays") {
  Scratch s;
  std::mt19937_64 rng(43);
  for (int k = 0; k < 10; ++k) {
    BraidWord a = testing::random_closable_word(rng, 3, 5);
    BraidWord b = apply_move(a, MarkovMove::stabilize(StabilizationType::Welded));
    b = apply_move(b, MarkovMove::cyclic_shift(b.size() - 1));
    auto pa = s.write("a.bw", format_word_file(a));
    auto pb = s.write("b.bw", format_word_file(b));
    auto r = ewb_run({"markov", pa, pb, "-o", s.path("w.txt")});
    REQUIRE(r.code == 0);
    CHECK(ewb_run({"replay", pa, s.path("w.txt"), pb}).code == 0);
    // replay without an expected end prints the end word
    auto end = ewb_run({"replay", pa, s.path("w.txt")});
    CHECK(end.code == 0);
    CHECK(words_equal(parse_word_file(end.out), b));
  }

  auto wrong = s.write("wrong.txt", "m2d\n");
  auto start = s.write("s.bw", "strands 2\ns1 s1\n");
  CHECK(ewb_run({"replay", start, wrong}).code == 1);
  CHECK(ewb_run({"replay", start, s.write("junk.txt", "m9\n")}).code == 2);
}

TEST_CASE("cli markov inconclusive and budget") {
  Scratch s;
  auto a = s.write("a.bw", "strands 2\ns1 s1 s1 s1\n");
  auto b = s.write("b.bw", "strands 2\n\n");
  auto r = ewb_run({"--format", "machine", "markov", a, b, "--budget", "50"});
  CHECK(r.code == 1);
  CHECK(r.out.find("status=inconclusive") != std::string::npos);

  ::setenv("EWB_BUDGET_DEFAULT", "not-a-number", 1);
  CHECK(ewb_run({"markov", a, b}).code == 2);
  ::setenv("EWB_BUDGET_DEFAULT", "40", 1);
  auto env = ewb_run({"--format", "machine", "markov", a, b});
  ::unsetenv("EWB_BUDGET_DEFAULT");
  CHECK(env.code == 1);
  CHECK(env.out.find("status=inconclusive") != std::string::npos);
}
