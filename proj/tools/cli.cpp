#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "ewb/braid.hpp"
#include "ewb/closure.hpp"
#include "ewb/errors.hpp"
#include "ewb/free_group.hpp"
#include "ewb/gauss.hpp"
#include "ewb/markov.hpp"
#include "ewb/relations.hpp"

namespace ewb::cli {
namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Status { Ok, True, False, Inconclusive };

const char* status_name(Status s) {
  switch (s) {
    case Status::Ok: return "ok";
    case Status::True: return "true";
    case Status::False: return "false";
    case Status::Inconclusive: return "inconclusive";
  }
  return "ok";
}

struct Report {
  Status status = Status::Ok;
  std::string message;
  std::vector<std::pair<std::string, std::string>> fields;
  std::string data;  // a word, Gauss or witness file

  void add(std::string key, std::string value) { fields.emplace_back(std::move(key), std::move(value)); }
};

struct Options {
  std::string format = "text";
  std::string output;
  std::string input;
  std::vector<std::string> files;
  std::optional<int> max_degree;
  std::optional<std::size_t> max_length;
  std::optional<std::size_t> budget;
  std::uint64_t seed = 1;
  int n = 6;
  int samples = 200;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

BraidWord word_from_text(const std::string& text, const std::string& path) {
  try {
    return parse_word_file(text);
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(path + ": " + e.what());
  }
}

GaussData gauss_from_text(const std::string& text, const std::string& path) {
  try {
    return parse_gauss(text);
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(path + ": " + e.what());
  }
}

BraidWord load_word(const std::string& path) { return word_from_text(read_file(path), path); }
GaussData load_gauss(const std::string& path) { return gauss_from_text(read_file(path), path); }

GaussData load_valid_gauss(const std::string& path) {
  GaussData g = load_gauss(path);
  if (auto v = validate(g)) throw InputError(path + ": " + v->message);
  return g;
}

bool looks_like_word(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (ls >> first) return first == "strands";
  }
  return false;
}

std::string join(const std::vector<int>& xs) {
  std::string out;
  for (int x : xs) {
    if (!out.empty()) out += ' ';
    out += std::to_string(x);
  }
  return out;
}

std::string cycle_notation(const Permutation& p) {
  std::string out;
  for (const auto& cyc : p.cycles()) out += "(" + join(cyc) + ")";
  return out;
}

void add_gauss_invariants(Report& r, const GaussData& g) {
  int writhe = 0;
  for (const auto& c : g.crossings) writhe += c.sign;
  r.add("crossings", std::to_string(g.crossings.size()));
  r.add("components", std::to_string(component_count(g)));
  r.add("loops", std::to_string(g.loops));
  r.add("writhe", std::to_string(writhe));
  r.add("wen-parity", join(component_wen_parity(g)));
  try {
    r.add("linking", to_string(linking_invariant(g)));
  } catch (const std::domain_error&) {
    r.add("linking", "unavailable (more than 6 components)");
  }
}

Report do_close(const Options& o) {
  GaussData g = closure(load_word(o.input));
  Report r;
  r.data = format_gauss(g);
  r.add("crossings", std::to_string(g.crossings.size()));
  r.add("components", std::to_string(component_count(g)));
  r.add("loops", std::to_string(g.loops));
  return r;
}

Report do_braid(const Options& o) {
  GaussData g = load_valid_gauss(o.input);
  BraidWord b = braid_from_gauss(g);
  Report r;
  r.data = format_word_file(b);
  r.add("strands", std::to_string(b.strands()));
  r.add("length", std::to_string(b.size()));
  return r;
}

Report do_validate(const Options& o) {
  GaussData g = load_gauss(o.input);
  Report r;
  if (auto v = validate(g)) {
    r.status = Status::False;
    r.message = "invalid: " + v->message;
    return r;
  }
  r.status = Status::True;
  r.message = "valid";
  r.add("crossings", std::to_string(g.crossings.size()));
  r.add("arcs", std::to_string(g.arcs.size()));
  r.add("loops", std::to_string(g.loops));
  r.add("components", std::to_string(component_count(g)));
  return r;
}

Report do_eq_word(const Options& o) {
  BraidWord a = load_word(o.files[0]);
  BraidWord b = load_word(o.files[1]);
  Report r;
  if (a.strands() != b.strands()) {
    r.status = Status::False;
    r.message = "not equal: different strand counts";
  } else if (words_equal(a, b)) {
    r.status = Status::True;
    r.message = "equal";
  } else {
    r.status = Status::False;
    r.message = "not equal";
  }
  return r;
}

Report do_eq_gauss(const Options& o) {
  GaussData a = load_valid_gauss(o.files[0]);
  GaussData b = load_valid_gauss(o.files[1]);
  Report r;
  auto iso = same_gauss_data(a, b);
  if (!iso) {
    r.status = Status::False;
    r.message = "not isomorphic";
    return r;
  }
  r.status = Status::True;
  r.message = "isomorphic";
  std::string map;
  for (std::size_t i = 0; i < iso->map.size(); ++i) {
    if (!map.empty()) map += ' ';
    map += a.crossings[i].id + "->" + b.crossings[iso->map[i]].id;
  }
  r.add("map", map);
  return r;
}

Report word_result(const BraidWord& b) {
  Report r;
  r.data = format_word_file(b);
  r.add("strands", std::to_string(b.strands()));
  r.add("length", std::to_string(b.size()));
  return r;
}

Report gauss_result(const GaussData& g) {
  Report r;
  r.data = format_gauss(g);
  r.add("crossings", std::to_string(g.crossings.size()));
  return r;
}

Report do_signrev_word(const Options& o) { return word_result(sign_reversal_word(load_word(o.input))); }
Report do_mirror(const Options& o) { return word_result(mirror_word(load_word(o.input))); }
Report do_signrev_gauss(const Options& o) { return gauss_result(sign_reversal(load_gauss(o.input))); }

Report do_eliminate_wens(const Options& o) {
  GaussData g = load_valid_gauss(o.input);
  WenElimination e = eliminate_wens(g);
  Report r = gauss_result(e.result);
  std::string flipped;
  for (std::size_t c : e.flipped) {
    if (!flipped.empty()) flipped += ' ';
    flipped += g.crossings[c].id;
  }
  r.add("slides", std::to_string(e.slides.size()));
  r.add("flipped", flipped);
  return r;
}

Report do_reduce_kinks(const Options& o) {
  GaussData g = load_valid_gauss(o.input);
  GaussData h = reduce_kinks(g);
  Report r = gauss_result(h);
  r.add("removed", std::to_string(g.crossings.size() - h.crossings.size()));
  return r;
}

Report do_invariants(const Options& o) {
  const std::string text = read_file(o.input);
  Report r;
  if (!looks_like_word(text)) {
    GaussData g = gauss_from_text(text, o.input);
    if (auto v = validate(g)) throw InputError(o.input + ": " + v->message);
    r.add("input", "gauss");
    add_gauss_invariants(r, g);
    return r;
  }
  BraidWord b = word_from_text(text, o.input);
  r.add("input", "word");
  r.add("strands", std::to_string(b.strands()));
  r.add("length", std::to_string(b.size()));
  r.add("permutation", cycle_notation(underlying_permutation(b)));
  r.add("cycle-wen-parity", join(wen_parity(b)));
  r.add("sigma-parity", std::to_string(sigma_exponent_parity(b)));
  r.add("closable", closable(b) ? "yes" : "no");
  if (closable(b)) add_gauss_invariants(r, closure(b));
  return r;
}

std::size_t env_budget() {
  const char* s = std::getenv("EWB_BUDGET_DEFAULT");
  if (s == nullptr || *s == '\0') return SearchLimits{}.budget;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(s, &end, 10);
  if (*end != '\0' || v == 0 || s[0] == '-') throw InputError("EWB_BUDGET_DEFAULT must be a positive integer");
  return static_cast<std::size_t>(v);
}

Report do_markov(const Options& o) {
  BraidWord a = load_word(o.files[0]);
  BraidWord b = load_word(o.files[1]);
  SearchLimits limits;
  limits.max_degree = o.max_degree.value_or(std::max(limits.max_degree, std::max(a.strands(), b.strands()) + 2));
  limits.max_length = o.max_length.value_or(std::max(limits.max_length, std::max(a.size(), b.size()) + 4));
  limits.budget = o.budget ? *o.budget : env_budget();
  SearchResult res = markov_search(a, b, limits);
  Report r;
  r.add("states", std::to_string(res.states));
  if (!res.found()) {
    r.status = Status::Inconclusive;
    r.message = "inconclusive: no witness within budget";
    return r;
  }
  r.status = Status::True;
  r.message = "witness found";
  r.add("moves", std::to_string(res.witness->moves.size()));
  r.data = format_moves(res.witness->moves);
  return r;
}

Report do_replay(const Options& o) {
  BraidWord w = load_word(o.files[0]);
  std::vector<MarkovMove> moves;
  try {
    moves = parse_moves(read_file(o.files[1]), w.strands());
  } catch (const ParseError& e) {
    throw InputError(o.files[1] + ": " + e.what());
  }
  Report r;
  r.add("moves", std::to_string(moves.size()));
  for (std::size_t k = 0; k < moves.size(); ++k) {
    try {
      w = apply_move(w, moves[k]);
    } catch (const std::invalid_argument& e) {
      r.status = Status::False;
      r.message = "move " + std::to_string(k + 1) + " does not apply: " + e.what();
      return r;
    }
  }
  r.add("end-strands", std::to_string(w.strands()));
  r.add("end-length", std::to_string(w.size()));
  if (o.files.size() < 3) {
    r.status = Status::True;
    r.message = "witness replays";
    r.data = format_word_file(w);
    return r;
  }
  BraidWord expected = load_word(o.files[2]);
  if (expected.strands() == w.strands() && words_equal(expected, w)) {
    r.status = Status::True;
    r.message = "witness replays to the expected word";
  } else {
    r.status = Status::False;
    r.message = "witness ends at a different word";
  }
  if (!o.output.empty()) r.data = format_word_file(w);
  return r;
}

Report do_verify_relations(const Options& o) {
  if (o.n < 1 || o.n > 12) throw InputError("--n must lie in 1..12");
  RelationReport rep = verify_relations(o.n);
  Report r;
  r.add("max-n", std::to_string(o.n));
  r.add("families", std::to_string(relation_families().size()));
  r.add("checked", std::to_string(rep.checked));

  std::size_t sample_failures = 0;
  if (o.n >= 2 && o.samples > 0) {
    std::mt19937_64 rng(o.seed);
    for (int k = 0; k < o.samples; ++k) {
      const int n = std::uniform_int_distribution<int>(2, o.n)(rng);
      const auto len = std::uniform_int_distribution<std::size_t>(0, 10)(rng);
      BraidWord w = random_word(n, len, rng);
      if (!words_equal(w, random_relator_insertion(w, rng))) ++sample_failures;
    }
    r.add("samples", std::to_string(o.samples));
    r.add("seed", std::to_string(o.seed));
  }

  if (rep.ok() && sample_failures == 0) {
    r.status = Status::True;
    r.message = "all relation instances verified";
    return r;
  }
  r.status = Status::False;
  r.message = std::to_string(rep.failures.size()) + " relation instances and " + std::to_string(sample_failures) +
              " random insertions failed";
  for (const auto& f : rep.failures) {
    r.add("failure", f.family + ": " + format_word(f.lhs) + " = " + format_word(f.rhs) + " on " +
                         std::to_string(f.lhs.strands()) + " strands");
  }
  return r;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
  if (!out) throw InputError("cannot write " + path);
}

void emit(const std::string& verb, const Report& r, const Options& o, std::ostream& out) {
  const bool to_file = !o.output.empty() && !r.data.empty();
  if (to_file) write_file(o.output, r.data);
  if (o.format == "machine") {
    out << "verb=" << verb << "\nstatus=" << status_name(r.status) << '\n';
    if (!r.message.empty()) out << "message=" << r.message << '\n';
    for (const auto& [k, v] : r.fields) out << k << '=' << v << '\n';
    if (to_file) {
      out << "output=" << o.output << '\n';
    } else {
      std::istringstream data(r.data);
      for (std::string line; std::getline(data, line);) out << "data=" << line << '\n';
    }
    return;
  }
  if (!r.data.empty() && !to_file) {
    out << r.data;
    return;
  }
  if (!r.message.empty()) out << r.message << '\n';
  for (const auto& [k, v] : r.fields) out << k << ": " << v << '\n';
  if (to_file) out << "wrote " << o.output << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Extended welded braids and links: words, Gauss data, closure, braiding, Markov search."};
  app.name("ewb");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "machine"}));
  app.add_option("-o,--output", o.output, "Write the resulting file here instead of stdout");

  using Handler = std::function<Report(const Options&)>;
  std::map<std::string, Handler> handlers;

  auto single = [&](const std::string& name, const std::string& help, Handler h) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("input,-i,--input", o.input, "Input file")->required();
    handlers[name] = std::move(h);
    return sub;
  };
  auto pair = [&](const std::string& name, const std::string& help, Handler h) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("files", o.files, "Two input files")->expected(2)->required();
    handlers[name] = std::move(h);
    return sub;
  };

  single("close", "Closure of a braid word as Gauss data", do_close);
  single("braid", "Braid word whose closure is the given Gauss data", do_braid);
  single("gauss-validate", "Check Gauss data against the well-formedness rules", do_validate);
  pair("eq-word", "Decide equality of two braid words", do_eq_word);
  pair("eq-gauss", "Decide isomorphism of two Gauss data", do_eq_gauss);
  single("signrev-word", "Sign reversal of a braid word", do_signrev_word);
  single("signrev-gauss", "Sign reversal of Gauss data", do_signrev_gauss);
  single("mirror", "Mirror image of a braid word", do_mirror);
  single("eliminate-wens", "Slide wens away until no arc is barred", do_eliminate_wens);
  single("reduce-kinks", "Remove kinks until none is left", do_reduce_kinks);
  single("invariants", "Invariants of a braid word or Gauss data", do_invariants);

  auto* markov = pair("markov", "Bounded search for a Markov move witness", do_markov);
  markov->add_option("--max-degree", o.max_degree, "Largest strand count visited");
  markov->add_option("--max-length", o.max_length, "Longest word visited");
  markov->add_option("--budget", o.budget, "State budget (default $EWB_BUDGET_DEFAULT or 100000)")
      ->check(CLI::PositiveNumber);

  auto* replay_cmd = app.add_subcommand("replay", "Replay a witness: START WITNESS [END]");
  replay_cmd->add_option("files", o.files, "Start word, witness, optional expected end word")
      ->expected(2, 3)
      ->required();
  handlers["replay"] = do_replay;

  auto* rel = app.add_subcommand("verify-relations", "Check every relation instance up to --n strands");
  rel->add_option("--n", o.n, "Largest strand count");
  rel->add_option("--seed", o.seed, "Seed for the random relator insertions");
  rel->add_option("--samples", o.samples, "Number of random relator insertions");
  handlers["verify-relations"] = do_verify_relations;

  std::vector<const char*> argv{"ewb"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const std::string verb = app.get_subcommands().front()->get_name();
  try {
    Report r = handlers.at(verb)(o);
    emit(verb, r, o, out);
    return (r.status == Status::Ok || r.status == Status::True) ? 0 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    if (o.format == "machine") out << "verb=" << verb << "\nstatus=error\nmessage=" << e.what() << '\n';
    return 2;
  }
}

}  // namespace ewb::cli
