#include "ewb/gauss.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>
#include <stdexcept>

#include "ewb/errors.hpp"

namespace ewb {

void normalize(GaussData& g) {
  std::sort(g.arcs.begin(), g.arcs.end(),
            [](const Arc& a, const Arc& b) { return a.source < b.source; });
}

namespace {

// Arc index by endpoint, flattened as crossing * 2 + (slot offset).
struct ArcIndex {
  std::vector<std::size_t> out;  // slots 3,4
  std::vector<std::size_t> in;   // slots 1,2
  static constexpr std::size_t none = static_cast<std::size_t>(-1);

  explicit ArcIndex(const GaussData& g)
      : out(2 * g.crossings.size(), none), in(2 * g.crossings.size(), none) {
    for (std::size_t a = 0; a < g.arcs.size(); ++a) {
      const auto& arc = g.arcs[a];
      out[2 * arc.source.crossing + static_cast<std::size_t>(arc.source.slot - 3)] = a;
      in[2 * arc.target.crossing + static_cast<std::size_t>(arc.target.slot - 1)] = a;
    }
  }
  std::size_t from(Endpoint e) const { return out[2 * e.crossing + static_cast<std::size_t>(e.slot - 3)]; }
  std::size_t into(Endpoint e) const { return in[2 * e.crossing + static_cast<std::size_t>(e.slot - 1)]; }
};

void require_structure(const GaussData& g) {
  if (auto v = validate_structure(g)) throw std::invalid_argument(v->message);
}

std::string endpoint_name(const GaussData& g, Endpoint e) {
  if (e.crossing < g.crossings.size()) return format_endpoint(g, e);
  return "#" + std::to_string(e.crossing) + "." + std::to_string(e.slot);
}

}  // namespace

std::optional<Violation> validate_structure(const GaussData& g) {
  using K = Violation::Kind;
  const std::size_t m = g.crossings.size();
  {
    std::map<std::string, int> seen;
    for (const auto& c : g.crossings) {
      if (c.id.empty()) return Violation{K::BadCrossing, "crossing with empty id"};
      if (c.sign != 1 && c.sign != -1) {
        return Violation{K::BadCrossing, "crossing " + c.id + " has sign other than +1/-1"};
      }
      if (seen[c.id]++ > 0) return Violation{K::Duplicate, "duplicate crossing " + c.id};
    }
  }
  if (g.loops < 0) return Violation{K::BadLoops, "negative loop count"};
  std::vector<int> out_use(2 * m, 0), in_use(2 * m, 0);
  for (const auto& a : g.arcs) {
    if (a.source.crossing >= m || a.target.crossing >= m) {
      return Violation{K::BadEndpoint, "arc refers to an unknown crossing"};
    }
    if (a.source.slot != 3 && a.source.slot != 4) {
      return Violation{K::BadEndpoint, "arc source " + endpoint_name(g, a.source) + " is not an exit slot"};
    }
    if (a.target.slot != 1 && a.target.slot != 2) {
      return Violation{K::BadEndpoint, "arc target " + endpoint_name(g, a.target) + " is not an entry slot"};
    }
    if (out_use[2 * a.source.crossing + static_cast<std::size_t>(a.source.slot - 3)]++ > 0) {
      return Violation{K::Duplicate, "duplicate arc from " + endpoint_name(g, a.source)};
    }
    if (in_use[2 * a.target.crossing + static_cast<std::size_t>(a.target.slot - 1)]++ > 0) {
      return Violation{K::Duplicate, "duplicate arc into " + endpoint_name(g, a.target)};
    }
  }
  for (std::size_t c = 0; c < m; ++c) {
    for (int k = 0; k < 2; ++k) {
      if (out_use[2 * c + static_cast<std::size_t>(k)] == 0) {
        return Violation{K::Dangling, "dangling endpoint " + endpoint_name(g, {c, 3 + k})};
      }
      if (in_use[2 * c + static_cast<std::size_t>(k)] == 0) {
        return Violation{K::Dangling, "dangling endpoint " + endpoint_name(g, {c, 1 + k})};
      }
    }
  }
  return std::nullopt;
}

std::optional<Violation> validate(const GaussData& g) {
  if (auto v = validate_structure(g)) return v;
  auto parity = component_wen_parity(g);
  for (std::size_t k = 0; k < parity.size(); ++k) {
    if (parity[k] != 0) {
      return Violation{Violation::Kind::OddWenParity,
                       "component " + std::to_string(k + 1) + " has odd wen parity"};
    }
  }
  return std::nullopt;
}

std::vector<Component> components(const GaussData& g) {
  require_structure(g);
  const ArcIndex index(g);
  std::vector<Component> out;
  std::vector<bool> visited(2 * g.crossings.size(), false);
  auto flat = [](Passage p) { return 2 * p.crossing + (p.strand == Strand::Over ? 1u : 0u); };
  for (std::size_t c = 0; c < g.crossings.size(); ++c) {
    for (Strand s : {Strand::Under, Strand::Over}) {
      const Passage start{c, s};
      if (visited[flat(start)]) continue;
      Component comp;
      Passage p = start;
      do {
        visited[flat(p)] = true;
        comp.passages.push_back(p);
        const std::size_t a = index.from({p.crossing, p.exit_slot()});
        comp.arcs.push_back(a);
        const Endpoint t = g.arcs[a].target;
        p = {t.crossing, t.slot == 1 ? Strand::Under : Strand::Over};
      } while (!(p == start));
      out.push_back(std::move(comp));
    }
  }
  for (int k = 0; k < g.loops; ++k) out.emplace_back();
  return out;
}

std::size_t component_count(const GaussData& g) { return components(g).size(); }

std::vector<int> component_wen_parity(const GaussData& g) {
  std::vector<int> out;
  for (const auto& comp : components(g)) {
    int parity = 0;
    for (std::size_t a : comp.arcs) parity ^= g.arcs[a].bar ? 1 : 0;
    out.push_back(parity);
  }
  return out;
}

std::size_t arc_from(const GaussData& g, Endpoint source) {
  for (std::size_t a = 0; a < g.arcs.size(); ++a) {
    if (g.arcs[a].source == source) return a;
  }
  throw std::invalid_argument("no arc starts at " + endpoint_name(g, source));
}

std::size_t arc_into(const GaussData& g, Endpoint target) {
  for (std::size_t a = 0; a < g.arcs.size(); ++a) {
    if (g.arcs[a].target == target) return a;
  }
  throw std::invalid_argument("no arc ends at " + endpoint_name(g, target));
}

namespace {

class IsomorphismSearch {
 public:
  IsomorphismSearch(const GaussData& a, const GaussData& b)
      : a_(a), b_(b), ia_(a), ib_(b),
        map_(a.crossings.size(), unset), used_(b.crossings.size(), false) {}

  std::optional<GaussIsomorphism> run() {
    if (solve()) return GaussIsomorphism{map_};
    return std::nullopt;
  }

 private:
  static constexpr std::size_t unset = static_cast<std::size_t>(-1);

  bool solve() {
    auto it = std::find(map_.begin(), map_.end(), unset);
    if (it == map_.end()) return true;
    const auto root = static_cast<std::size_t>(it - map_.begin());
    for (std::size_t cand = 0; cand < b_.crossings.size(); ++cand) {
      const std::size_t mark = trail_.size();
      if (assign_and_propagate(root, cand) && solve()) return true;
      undo(mark);
    }
    return false;
  }

  bool assign(std::size_t x, std::size_t y, std::vector<std::size_t>& queue) {
    if (map_[x] != unset) return map_[x] == y;
    if (used_[y] || a_.crossings[x].sign != b_.crossings[y].sign) return false;
    map_[x] = y;
    used_[y] = true;
    trail_.push_back(x);
    queue.push_back(x);
    return true;
  }

  bool assign_and_propagate(std::size_t root, std::size_t cand) {
    std::vector<std::size_t> queue;
    if (!assign(root, cand, queue)) return false;
    while (!queue.empty()) {
      const std::size_t x = queue.back();
      queue.pop_back();
      const std::size_t y = map_[x];
      for (int slot = 3; slot <= 4; ++slot) {
        const Arc& ea = a_.arcs[ia_.from({x, slot})];
        const Arc& eb = b_.arcs[ib_.from({y, slot})];
        if (ea.target.slot != eb.target.slot || ea.bar != eb.bar) return false;
        if (!assign(ea.target.crossing, eb.target.crossing, queue)) return false;
      }
      for (int slot = 1; slot <= 2; ++slot) {
        const Arc& ea = a_.arcs[ia_.into({x, slot})];
        const Arc& eb = b_.arcs[ib_.into({y, slot})];
        if (ea.source.slot != eb.source.slot || ea.bar != eb.bar) return false;
        if (!assign(ea.source.crossing, eb.source.crossing, queue)) return false;
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const std::size_t x = trail_.back();
      trail_.pop_back();
      used_[map_[x]] = false;
      map_[x] = unset;
    }
  }

  const GaussData& a_;
  const GaussData& b_;
  ArcIndex ia_, ib_;
  std::vector<std::size_t> map_;
  std::vector<bool> used_;
  std::vector<std::size_t> trail_;
};

}  // namespace

std::optional<GaussIsomorphism> same_gauss_data(const GaussData& a, const GaussData& b) {
  require_structure(a);
  require_structure(b);
  if (component_count(a) != component_count(b)) return std::nullopt;
  if (a.crossings.size() != b.crossings.size()) return std::nullopt;
  return IsomorphismSearch(a, b).run();
}

bool is_isomorphism(const GaussData& a, const GaussData& b, const GaussIsomorphism& iso) {
  if (a.crossings.size() != b.crossings.size() || iso.map.size() != a.crossings.size()) return false;
  if (a.arcs.size() != b.arcs.size()) return false;
  if (component_count(a) != component_count(b)) return false;
  std::vector<bool> hit(b.crossings.size(), false);
  for (std::size_t k = 0; k < iso.map.size(); ++k) {
    const std::size_t j = iso.map[k];
    if (j >= b.crossings.size() || hit[j]) return false;
    hit[j] = true;
    if (a.crossings[k].sign != b.crossings[j].sign) return false;
  }
  for (const auto& arc : a.arcs) {
    const Arc mapped{{iso.map[arc.source.crossing], arc.source.slot},
                     {iso.map[arc.target.crossing], arc.target.slot},
                     arc.bar};
    if (std::find(b.arcs.begin(), b.arcs.end(), mapped) == b.arcs.end()) return false;
  }
  return true;
}

GaussData sign_reversal(const GaussData& g) {
  GaussData out = g;
  for (auto& c : out.crossings) c.sign = -c.sign;
  return out;
}

GaussData slide_wen(const GaussData& g, Endpoint arc_source, SlideDirection direction) {
  const std::size_t a = arc_from(g, arc_source);
  if (!g.arcs[a].bar) throw std::invalid_argument("slide_wen: arc carries no wen");
  std::size_t crossing;
  Strand strand;
  std::size_t neighbour;
  if (direction == SlideDirection::Forward) {
    const Endpoint t = g.arcs[a].target;
    crossing = t.crossing;
    strand = t.slot == 1 ? Strand::Under : Strand::Over;
    neighbour = arc_from(g, {crossing, strand == Strand::Under ? 3 : 4});
  } else {
    const Endpoint s = g.arcs[a].source;
    crossing = s.crossing;
    strand = s.slot == 3 ? Strand::Under : Strand::Over;
    neighbour = arc_into(g, {crossing, strand == Strand::Under ? 1 : 2});
  }
  GaussData out = g;
  out.arcs[a].bar = !out.arcs[a].bar;
  out.arcs[neighbour].bar = !out.arcs[neighbour].bar;
  if (strand == Strand::Over) out.crossings[crossing].sign = -out.crossings[crossing].sign;
  return out;
}

WenElimination eliminate_wens(const GaussData& g) {
  if (auto v = validate(g)) throw std::invalid_argument("eliminate_wens: " + v->message);
  WenElimination res{g, {}, {}};
  for (const auto& comp : components(g)) {
    const std::size_t len = comp.arcs.size();
    for (std::size_t k = 0; k < len; ++k) {
      if (!res.result.arcs[comp.arcs[k]].bar) continue;
      // carry this wen forward until it lands on the next barred arc
      bool met = false;
      while (!met) {
        const std::size_t next = comp.arcs[k + 1];  // k + 1 < len by even parity
        met = res.result.arcs[next].bar;
        const Endpoint src = res.result.arcs[comp.arcs[k]].source;
        res.slides.push_back({src, SlideDirection::Forward});
        res.result = slide_wen(res.result, src, SlideDirection::Forward);
        ++k;
      }
    }
  }
  for (std::size_t c = 0; c < g.crossings.size(); ++c) {
    if (res.result.crossings[c].sign != g.crossings[c].sign) res.flipped.push_back(c);
  }
  return res;
}

GaussData full_loop_slide(const GaussData& g, std::size_t component) {
  auto comps = components(g);
  if (component >= comps.size()) throw std::invalid_argument("full_loop_slide: no such component");
  // each arc of the component is crossed twice by the travelling wen, so bars are restored
  GaussData out = g;
  for (const auto& p : comps[component].passages) {
    if (p.strand == Strand::Over) out.crossings[p.crossing].sign = -out.crossings[p.crossing].sign;
  }
  return out;
}

bool is_kink(const GaussData& g, std::size_t c) {
  if (c >= g.crossings.size()) return false;
  const Arc& a3 = g.arcs[arc_from(g, {c, 3})];
  const Arc& a4 = g.arcs[arc_from(g, {c, 4})];
  return (a3.target == Endpoint{c, 2} && !a3.bar) || (a4.target == Endpoint{c, 1} && !a4.bar);
}

GaussData remove_kink(const GaussData& g, std::size_t c) {
  require_structure(g);
  if (!is_kink(g, c)) throw std::invalid_argument("remove_kink: crossing is not a kink");
  const Arc& a3 = g.arcs[arc_from(g, {c, 3})];
  const bool under_then_over = a3.target == Endpoint{c, 2} && !a3.bar;
  const Endpoint in_ep{c, under_then_over ? 1 : 2};
  const Endpoint out_ep{c, under_then_over ? 4 : 3};
  const std::size_t a_in = arc_into(g, in_ep);
  const std::size_t a_out = arc_from(g, out_ep);

  GaussData out;
  out.loops = g.loops;
  auto reindex = [c](Endpoint e) { return Endpoint{e.crossing > c ? e.crossing - 1 : e.crossing, e.slot}; };
  for (std::size_t k = 0; k < g.crossings.size(); ++k) {
    if (k != c) out.crossings.push_back(g.crossings[k]);
  }
  for (const auto& arc : g.arcs) {
    if (arc.source.crossing == c || arc.target.crossing == c) continue;
    out.arcs.push_back({reindex(arc.source), reindex(arc.target), arc.bar});
  }
  if (a_in == a_out) {
    // both arcs at c were self-arcs: the component becomes a crossing-free loop
    ++out.loops;
  } else {
    out.arcs.push_back({reindex(g.arcs[a_in].source), reindex(g.arcs[a_out].target),
                        g.arcs[a_in].bar != g.arcs[a_out].bar});
  }
  normalize(out);
  return out;
}

GaussData reduce_kinks(const GaussData& g) {
  GaussData cur = g;
  for (;;) {
    std::size_t c = 0;
    while (c < cur.crossings.size() && !is_kink(cur, c)) ++c;
    if (c == cur.crossings.size()) return cur;
    cur = remove_kink(cur, c);
  }
}

std::string format_endpoint(const GaussData& g, Endpoint e) {
  return g.crossings.at(e.crossing).id + "." + std::to_string(e.slot);
}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> toks;
  for (std::string t; in >> t;) toks.push_back(t);
  return toks;
}

bool valid_id(const std::string& id) {
  return !id.empty() && std::all_of(id.begin(), id.end(), [](char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
  });
}

int parse_int(const std::string& s, std::size_t lineno, const char* what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(lineno, std::string("malformed ") + what + " '" + s + "'");
  }
  return v;
}

}  // namespace

GaussData parse_gauss(std::string_view text) {
  struct PendingArc {
    std::string src, dst;
    int src_slot, dst_slot;
    bool bar;
    std::size_t line;
  };
  GaussData g;
  std::map<std::string, std::size_t> ids;
  std::vector<PendingArc> pending;
  bool have_loops = false;

  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    const std::string& kw = toks[0];
    if (kw == "crossing") {
      if (toks.size() != 3) throw ParseError(lineno, "expected 'crossing <id> <+|->'");
      if (!valid_id(toks[1])) throw ParseError(lineno, "invalid crossing id '" + toks[1] + "'");
      if (toks[2] != "+" && toks[2] != "-") throw ParseError(lineno, "crossing sign must be + or -");
      if (ids.count(toks[1])) throw ParseError(lineno, "duplicate crossing " + toks[1]);
      ids[toks[1]] = g.crossings.size();
      g.crossings.push_back({toks[1], toks[2] == "+" ? 1 : -1});
    } else if (kw == "arc") {
      if (toks.size() != 4) throw ParseError(lineno, "expected 'arc <id>.<3|4> <id>.<1|2> <0|1>'");
      auto split_ep = [&](const std::string& tok, int lo, int hi, std::string& id) {
        const auto dot = tok.rfind('.');
        if (dot == std::string::npos) throw ParseError(lineno, "malformed endpoint '" + tok + "'");
        id = tok.substr(0, dot);
        if (!valid_id(id)) throw ParseError(lineno, "invalid crossing id '" + id + "'");
        const int slot = parse_int(tok.substr(dot + 1), lineno, "slot");
        if (slot < lo || slot > hi) {
          throw ParseError(lineno, "slot of '" + tok + "' must be " + std::to_string(lo) + " or " +
                                       std::to_string(hi));
        }
        return slot;
      };
      PendingArc p;
      p.src_slot = split_ep(toks[1], 3, 4, p.src);
      p.dst_slot = split_ep(toks[2], 1, 2, p.dst);
      if (toks[3] != "0" && toks[3] != "1") throw ParseError(lineno, "bar must be 0 or 1");
      p.bar = toks[3] == "1";
      p.line = lineno;
      pending.push_back(std::move(p));
    } else if (kw == "loops") {
      if (toks.size() != 2) throw ParseError(lineno, "expected 'loops <k>'");
      if (have_loops) throw ParseError(lineno, "duplicate loops declaration");
      g.loops = parse_int(toks[1], lineno, "loop count");
      if (g.loops < 0) throw ParseError(lineno, "loop count must be non-negative");
      have_loops = true;
    } else {
      throw ParseError(lineno, "unknown keyword '" + kw + "'");
    }
  }
  std::map<std::pair<std::size_t, int>, std::size_t> sources;
  for (const auto& p : pending) {
    auto lookup = [&](const std::string& id) {
      auto it = ids.find(id);
      if (it == ids.end()) throw ParseError(p.line, "undeclared crossing " + id);
      return it->second;
    };
    const Endpoint s{lookup(p.src), p.src_slot};
    const Endpoint t{lookup(p.dst), p.dst_slot};
    if (!sources.emplace(std::make_pair(s.crossing, s.slot), p.line).second) {
      throw ParseError(p.line, "duplicate arc from " + p.src + "." + std::to_string(p.src_slot));
    }
    g.arcs.push_back({s, t, p.bar});
  }
  normalize(g);
  return g;
}

std::string format_gauss(const GaussData& g) {
  std::string out;
  for (const auto& c : g.crossings) out += "crossing " + c.id + (c.sign > 0 ? " +\n" : " -\n");
  GaussData sorted = g;
  normalize(sorted);
  for (const auto& a : sorted.arcs) {
    out += "arc " + format_endpoint(g, a.source) + " " + format_endpoint(g, a.target) +
           (a.bar ? " 1\n" : " 0\n");
  }
  out += "loops " + std::to_string(g.loops) + "\n";
  return out;
}

}  // namespace ewb
