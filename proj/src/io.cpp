#include "andgraph/io.hpp"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "andgraph/errors.hpp"

namespace andgraph {

namespace {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string raw(text.substr(start, end - start));
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::istringstream in(raw);
    Line line{number, {}};
    for (std::string tok; in >> tok;) line.tokens.push_back(tok);
    const bool comment = !line.tokens.empty() && line.tokens[0] == "c";
    if (!line.tokens.empty() && !comment) out.push_back(std::move(line));
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

long parse_int(const Line& l, std::size_t i, const char* what) {
  if (i >= l.tokens.size()) throw ParseError(l.number, std::string("missing ") + what);
  const std::string& s = l.tokens[i];
  long value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(l.number, std::string("bad ") + what + " '" + s + "'");
  }
  return value;
}

Rational parse_q(const Line& l, std::size_t i, const char* what) {
  if (i >= l.tokens.size()) throw ParseError(l.number, std::string("missing ") + what);
  try {
    return parse_rational(l.tokens[i]);
  } catch (const std::invalid_argument&) {
    throw ParseError(l.number, std::string("bad ") + what + " '" + l.tokens[i] + "'");
  }
}

void expect_arity(const Line& l, std::size_t count) {
  if (l.tokens.size() != count) {
    throw ParseError(l.number, "expected " + std::to_string(count) + " fields on '" +
                                   l.tokens[0] + "' line, got " +
                                   std::to_string(l.tokens.size()));
  }
}

VertexId parse_vertex(const Line& l, std::size_t i, long n, const char* what) {
  const long v = parse_int(l, i, what);
  if (v < 1 || v > n) {
    throw ParseError(l.number, std::string(what) + " " + std::to_string(v) + " outside 1.." +
                                   std::to_string(n));
  }
  return static_cast<VertexId>(v);
}

[[noreturn]] void unknown(const Line& l) {
  throw ParseError(l.number, "unexpected line type '" + l.tokens[0] + "'");
}

// One record per id 1..n, where n is the number of records.
template <typename T>
struct Record {
  long id;
  int line;
  T value;
};

template <typename T>
std::vector<T> by_id(std::vector<Record<T>> records, const char* what) {
  const long n = static_cast<long>(records.size());
  std::vector<std::optional<T>> slots(static_cast<std::size_t>(n));
  for (auto& r : records) {
    if (r.id < 1 || r.id > n) {
      throw ParseError(r.line, std::string(what) + " id " + std::to_string(r.id) + " outside 1.." +
                                   std::to_string(n));
    }
    if (slots[r.id - 1]) throw ParseError(r.line, std::string("duplicate ") + what + " id " + std::to_string(r.id));
    slots[r.id - 1] = std::move(r.value);
  }
  std::vector<T> out;
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

std::string q(const Rational& r) { return format_rational(r); }

}  // namespace

Graph parse_graph(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty() || lines[0].tokens[0] != "p") throw ParseError(lines.empty() ? 0 : lines[0].number, "missing 'p and <n> <m>' header");
  const Line& h = lines[0];
  expect_arity(h, 4);
  if (h.tokens[1] != "and") throw ParseError(h.number, "header must read 'p and <n> <m>'");
  const long n = parse_int(h, 2, "vertex count");
  const long m = parse_int(h, 3, "edge count");
  if (n < 0 || m < 0) throw ParseError(h.number, "negative count");
  Graph g(static_cast<int>(n));
  long edges = 0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.tokens[0] != "e") unknown(l);
    expect_arity(l, 3);
    const VertexId u = parse_vertex(l, 1, n, "vertex");
    const VertexId v = parse_vertex(l, 2, n, "vertex");
    if (u == v) throw ParseError(l.number, "loop at vertex " + std::to_string(u));
    if (g.adjacent(u, v)) {
      throw ParseError(l.number, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }
    g.add_edge(u, v);
    ++edges;
  }
  if (edges != m) {
    throw ParseError(h.number, "header announces " + std::to_string(m) + " edges, found " +
                                   std::to_string(edges));
  }
  return g;
}

std::string format_graph(const Graph& g) {
  std::string out = "p and " + std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (const Edge& e : g.edges()) out += "e " + std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

IntervalModel parse_interval_model(std::string_view text) {
  std::vector<Record<Interval>> records;
  for (const Line& l : split_lines(text)) {
    if (l.tokens[0] != "i") unknown(l);
    expect_arity(l, 4);
    const long id = parse_int(l, 1, "vertex");
    Interval iv{parse_q(l, 2, "left end"), parse_q(l, 3, "right end")};
    if (iv.hi < iv.lo) throw ParseError(l.number, "interval with right end before left end");
    records.push_back({id, l.number, std::move(iv)});
  }
  return IntervalModel{by_id(std::move(records), "interval")};
}

std::string format_interval_model(const IntervalModel& m) {
  std::string out;
  for (std::size_t i = 0; i < m.intervals.size(); ++i) {
    out += "i " + std::to_string(i + 1) + " " + q(m.intervals[i].lo) + " " + q(m.intervals[i].hi) + "\n";
  }
  return out;
}

OuterplanarModel parse_outerplanar_model(std::string_view text) {
  OuterplanarModel m;
  for (const Line& l : split_lines(text)) {
    if (l.tokens[0] == "outer") {
      if (l.tokens.size() < 3) throw ParseError(l.number, "a block needs at least two vertices");
      OuterBlock b;
      for (std::size_t i = 1; i < l.tokens.size(); ++i) {
        const long v = parse_int(l, i, "vertex");
        if (v < 1) throw ParseError(l.number, "vertex ids start at 1");
        b.cycle.push_back(static_cast<VertexId>(v));
      }
      m.blocks.push_back(std::move(b));
    } else if (l.tokens[0] == "chord") {
      expect_arity(l, 3);
      if (m.blocks.empty()) throw ParseError(l.number, "chord before any 'outer' line");
      const long u = parse_int(l, 1, "vertex");
      const long v = parse_int(l, 2, "vertex");
      if (u < 1 || v < 1 || u == v) throw ParseError(l.number, "bad chord endpoints");
      m.blocks.back().chords.push_back(Edge::make(static_cast<VertexId>(u), static_cast<VertexId>(v)));
    } else {
      unknown(l);
    }
  }
  return m;
}

std::string format_outerplanar_model(const OuterplanarModel& m) {
  std::string out;
  for (const OuterBlock& b : m.blocks) {
    out += "outer";
    for (VertexId v : b.cycle) out += " " + std::to_string(v);
    out += "\n";
    for (const Edge& c : b.chords) out += "chord " + std::to_string(c.u) + " " + std::to_string(c.v) + "\n";
  }
  return out;
}

RootedPathModel parse_rooted_path_model(std::string_view text) {
  RootedPathModel m;
  std::vector<Record<std::vector<int>>> paths;
  for (const Line& l : split_lines(text)) {
    if (l.tokens[0] == "t") {
      expect_arity(l, 3);
      const long p = parse_int(l, 1, "parent node");
      const long c = parse_int(l, 2, "child node");
      if (p < 1 || c < 1) throw ParseError(l.number, "node ids start at 1");
      m.arcs.emplace_back(static_cast<int>(p), static_cast<int>(c));
    } else if (l.tokens[0] == "k") {
      if (l.tokens.size() < 3) throw ParseError(l.number, "a path needs at least one node");
      const long id = parse_int(l, 1, "vertex");
      std::vector<int> nodes;
      for (std::size_t i = 2; i < l.tokens.size(); ++i) {
        const long v = parse_int(l, i, "node");
        if (v < 1) throw ParseError(l.number, "node ids start at 1");
        nodes.push_back(static_cast<int>(v));
      }
      paths.push_back({id, l.number, std::move(nodes)});
    } else {
      unknown(l);
    }
  }
  m.paths = by_id(std::move(paths), "path");
  return m;
}

std::string format_rooted_path_model(const RootedPathModel& m) {
  std::string out;
  for (const auto& [p, c] : m.arcs) out += "t " + std::to_string(p) + " " + std::to_string(c) + "\n";
  for (std::size_t v = 0; v < m.paths.size(); ++v) {
    out += "k " + std::to_string(v + 1);
    for (int node : m.paths[v]) out += " " + std::to_string(node);
    out += "\n";
  }
  return out;
}

Realization parse_realization(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty() || lines[0].tokens[0] != "r") {
    throw ParseError(lines.empty() ? 0 : lines[0].number, "missing 'r and <n> <d>' header");
  }
  const Line& h = lines[0];
  expect_arity(h, 4);
  if (h.tokens[1] != "and") throw ParseError(h.number, "header must read 'r and <n> <d>'");
  const long n = parse_int(h, 2, "vertex count");
  const long d = parse_int(h, 3, "dimension");
  if (n < 0) throw ParseError(h.number, "negative vertex count");
  if (d < 1) throw ParseError(h.number, "dimension must be at least 1");
  std::vector<Placement> placements(static_cast<std::size_t>(n));
  for (Placement& p : placements) {
    p.box.resize(static_cast<std::size_t>(d));
    p.point.resize(static_cast<std::size_t>(d));
  }
  std::set<std::pair<long, long>> seen;
  std::optional<int> central_line;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.tokens[0] == "central") {
      expect_arity(l, 1);
      central_line = l.number;
      continue;
    }
    if (l.tokens[0] != "v") unknown(l);
    expect_arity(l, 6);
    const VertexId v = parse_vertex(l, 1, n, "vertex");
    const long k = parse_int(l, 2, "dimension index");
    if (k < 1 || k > d) throw ParseError(l.number, "dimension index outside 1.." + std::to_string(d));
    if (!seen.emplace(v, k).second) {
      throw ParseError(l.number, "duplicate line for vertex " + std::to_string(v) + " dimension " +
                                     std::to_string(k));
    }
    Interval box{parse_q(l, 3, "left end"), parse_q(l, 4, "right end")};
    Rational p = parse_q(l, 5, "point");
    if (box.hi < box.lo) throw ParseError(l.number, "box with right end before left end");
    if (!box.contains(p)) throw ParseError(l.number, "point outside its box");
    placements[v - 1].box[k - 1] = std::move(box);
    placements[v - 1].point[k - 1] = std::move(p);
  }
  if (static_cast<long>(seen.size()) != n * d) {
    throw ParseError(h.number, "expected " + std::to_string(n * d) + " 'v' lines, found " +
                                   std::to_string(seen.size()));
  }
  Realization r(static_cast<int>(d), std::move(placements));
  if (central_line && !is_central(r)) {
    throw ParseError(*central_line, "realization is flagged central but is not");
  }
  return r;
}

std::string format_realization(const Realization& r) {
  std::string out = "r and " + std::to_string(r.order()) + " " + std::to_string(r.dimension()) + "\n";
  if (r.dimension() == 1 && is_central(r)) out += "central\n";
  for (VertexId v = 1; v <= r.order(); ++v) {
    const Placement& pl = r.at(v);
    for (int k = 0; k < r.dimension(); ++k) {
      out += "v " + std::to_string(v) + " " + std::to_string(k + 1) + " " + q(pl.box[k].lo) + " " +
             q(pl.box[k].hi) + " " + q(pl.point[k]) + "\n";
    }
  }
  return out;
}

Ordering parse_ordering(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.size() != 1 || lines[0].tokens[0] != "o") {
    throw ParseError(lines.empty() ? 0 : lines[lines.size() > 1 ? 1 : 0].number,
                     "expected a single 'o <v1> ... <vn>' line");
  }
  const Line& l = lines[0];
  const long n = static_cast<long>(l.tokens.size()) - 1;
  std::vector<VertexId> seq;
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (std::size_t i = 1; i < l.tokens.size(); ++i) {
    const VertexId v = parse_vertex(l, i, n, "vertex");
    if (seen[v]) throw ParseError(l.number, "vertex " + std::to_string(v) + " repeated");
    seen[v] = true;
    seq.push_back(v);
  }
  return Ordering(std::move(seq));
}

std::string format_ordering(const Ordering& o) {
  std::string out = "o";
  for (VertexId v : o.sequence()) out += " " + std::to_string(v);
  return out + "\n";
}

std::vector<ImplicitCode> parse_implicit_codes(std::string_view text) {
  std::vector<Record<ImplicitCode>> records;
  for (const Line& l : split_lines(text)) {
    if (l.tokens[0] != "ic") unknown(l);
    expect_arity(l, 5);
    const long id = parse_int(l, 1, "vertex");
    ImplicitCode c{static_cast<int>(parse_int(l, 2, "left rank")),
                   static_cast<int>(parse_int(l, 3, "right rank")),
                   static_cast<int>(parse_int(l, 4, "position"))};
    if (!(1 <= c.left && c.left <= c.position && c.position <= c.right)) {
      throw ParseError(l.number, "code must satisfy 1 <= l <= p <= rho");
    }
    records.push_back({id, l.number, c});
  }
  return by_id(std::move(records), "code");
}

std::string format_implicit_codes(const std::vector<ImplicitCode>& codes) {
  std::string out;
  for (std::size_t i = 0; i < codes.size(); ++i) {
    out += "ic " + std::to_string(i + 1) + " " + std::to_string(codes[i].left) + " " +
           std::to_string(codes[i].right) + " " + std::to_string(codes[i].position) + "\n";
  }
  return out;
}

CornerBoxModel parse_corner_boxes(std::string_view text) {
  CornerBoxModel m;
  m.shift = 0;
  std::map<long, std::map<long, PlanarBox>> boxes;
  bool have_shift = false;
  for (const Line& l : split_lines(text)) {
    if (l.tokens[0] == "s") {
      expect_arity(l, 2);
      if (have_shift) throw ParseError(l.number, "duplicate shift line");
      m.shift = parse_q(l, 1, "shift");
      have_shift = true;
      continue;
    }
    if (l.tokens[0] != "b") unknown(l);
    expect_arity(l, 7);
    const long id = parse_int(l, 1, "vertex");
    const long k = parse_int(l, 2, "dimension index");
    if (id < 1 || k < 1) throw ParseError(l.number, "ids start at 1");
    PlanarBox b{{parse_q(l, 3, "x low"), parse_q(l, 4, "x high")},
                {parse_q(l, 5, "y low"), parse_q(l, 6, "y high")}};
    if (b.x.hi < b.x.lo || b.y.hi < b.y.lo) throw ParseError(l.number, "empty box");
    if (!boxes[id].emplace(k, std::move(b)).second) {
      throw ParseError(l.number, "duplicate box for vertex " + std::to_string(id));
    }
  }
  const long n = static_cast<long>(boxes.size());
  std::size_t d = 0;
  for (const auto& [id, dims] : boxes) {
    if (id > n) throw ParseError(0, "box ids must be 1.." + std::to_string(n));
    if (d == 0) d = dims.size();
    if (dims.size() != d || dims.rbegin()->first != static_cast<long>(d)) {
      throw ParseError(0, "vertex " + std::to_string(id) + " lacks some dimensions");
    }
    CornerBox cb;
    for (const auto& [k, b] : dims) cb.factors.push_back(b);
    m.boxes.push_back(std::move(cb));
  }
  return m;
}

std::string format_corner_boxes(const CornerBoxModel& m) {
  std::string out = "s " + q(m.shift) + "\n";
  for (std::size_t v = 0; v < m.boxes.size(); ++v) {
    const auto& fs = m.boxes[v].factors;
    for (std::size_t k = 0; k < fs.size(); ++k) {
      out += "b " + std::to_string(v + 1) + " " + std::to_string(k + 1) + " " + q(fs[k].x.lo) + " " +
             q(fs[k].x.hi) + " " + q(fs[k].y.lo) + " " + q(fs[k].y.hi) + "\n";
    }
  }
  return out;
}

SemiSquareModel parse_semisquares(std::string_view text) {
  SemiSquareModel m;
  m.shift = 0;
  bool have_shift = false;
  std::vector<Record<SemiSquare>> records;
  for (const Line& l : split_lines(text)) {
    if (l.tokens[0] == "s") {
      expect_arity(l, 2);
      if (have_shift) throw ParseError(l.number, "duplicate shift line");
      m.shift = parse_q(l, 1, "shift");
      have_shift = true;
      continue;
    }
    if (l.tokens[0] != "tri") unknown(l);
    expect_arity(l, 8);
    const long id = parse_int(l, 1, "vertex");
    SemiSquare t{{parse_q(l, 2, "corner x"), parse_q(l, 3, "corner y")},
                 {parse_q(l, 4, "right x"), parse_q(l, 5, "right y")},
                 {parse_q(l, 6, "top x"), parse_q(l, 7, "top y")}};
    if (t.right.y != t.corner.y || t.top.x != t.corner.x || t.right.x < t.corner.x ||
        t.top.y < t.corner.y) {
      throw ParseError(l.number, "legs must run right and up from the corner");
    }
    records.push_back({id, l.number, std::move(t)});
  }
  m.triangles = by_id(std::move(records), "triangle");
  return m;
}

std::string format_semisquares(const SemiSquareModel& m) {
  std::string out = "s " + q(m.shift) + "\n";
  for (std::size_t v = 0; v < m.triangles.size(); ++v) {
    const SemiSquare& t = m.triangles[v];
    out += "tri " + std::to_string(v + 1) + " " + q(t.corner.x) + " " + q(t.corner.y) + " " +
           q(t.right.x) + " " + q(t.right.y) + " " + q(t.top.x) + " " + q(t.top.y) + "\n";
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file_atomic(const std::string& path, std::string_view contents) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp);
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) {
      std::remove(tmp.c_str());
      throw std::runtime_error("cannot write " + tmp);
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::remove(tmp.c_str());
    throw std::runtime_error("cannot replace " + path + ": " + ec.message());
  }
}

}  // namespace andgraph
