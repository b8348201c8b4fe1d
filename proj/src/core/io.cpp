#include "tightlab/io.hpp"

#include <fstream>
#include <sstream>

#include "tightlab/error.hpp"

namespace tl {

namespace {

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(ErrorCode::kParse, std::string("invalid JSON: ") + e.what());
  }
}

int json_int(const Json& j, const char* field) {
  if (!j.contains(field) || !j.at(field).is_number_integer())
    fail(ErrorCode::kParse, std::string("missing integer field '") + field + "'");
  return j.at(field).get<int>();
}

}  // namespace

Json set_to_json(VertexSet s) {
  Json out = Json::array();
  for (Vertex v : members(s)) out.push_back(v);
  return out;
}

VertexSet set_from_json(const Json& j, int n) {
  if (!j.is_array()) fail(ErrorCode::kParse, "vertex set must be an array");
  VertexSet s = 0;
  for (const Json& v : j) {
    if (!v.is_number_integer()) fail(ErrorCode::kParse, "vertex ids must be integers");
    const int x = v.get<int>();
    if (x < 0 || x >= n) fail(ErrorCode::kOutOfRange, "vertex " + std::to_string(x) + " out of range");
    if (has_vertex(s, x)) fail(ErrorCode::kInvalidArgument, "vertex " + std::to_string(x) + " repeated");
    s |= singleton(x);
  }
  return s;
}

Json rational_to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  fail(ErrorCode::kParse, "expected a rational as \"p/q\" or an integer");
}

Json hypergraph_to_json(const Hypergraph& h) {
  Json edges = Json::array();
  for (VertexSet e : h.edges()) edges.push_back(set_to_json(e));
  return Json{{"n", h.n()}, {"k", h.k()}, {"edges", std::move(edges)}};
}

BuildResult hypergraph_from_json(const Json& j) {
  if (!j.is_object()) fail(ErrorCode::kParse, "hypergraph JSON must be an object");
  const int n = json_int(j, "n");
  const int k = json_int(j, "k");
  if (!j.contains("edges") || !j.at("edges").is_array())
    fail(ErrorCode::kParse, "missing array field 'edges'");
  std::vector<std::vector<int>> edges;
  for (const Json& e : j.at("edges")) {
    if (!e.is_array()) fail(ErrorCode::kParse, "each edge must be an array");
    std::vector<int> tuple;
    for (const Json& v : e) {
      if (!v.is_number_integer()) fail(ErrorCode::kParse, "vertex ids must be integers");
      tuple.push_back(v.get<int>());
    }
    edges.push_back(std::move(tuple));
  }
  return build_hypergraph(n, k, edges);
}

std::string hypergraph_to_text(const Hypergraph& h) {
  std::ostringstream os;
  os << h.n() << ' ' << h.k() << '\n';
  for (VertexSet e : h.edges()) {
    bool first = true;
    for (Vertex v : members(e)) {
      os << (first ? "" : " ") << v;
      first = false;
    }
    os << '\n';
  }
  return os.str();
}

BuildResult hypergraph_from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  bool header = false;
  int n = 0, k = 0;
  std::vector<std::vector<int>> edges;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream ls(line);
    std::vector<long long> nums;
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        nums.push_back(std::stoll(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        fail(ErrorCode::kParse, "line " + std::to_string(lineno) + ": '" + tok + "' is not an integer");
      }
    }
    if (!header) {
      if (nums.size() != 2) fail(ErrorCode::kParse, "first line must be 'n k'");
      n = static_cast<int>(nums[0]);
      k = static_cast<int>(nums[1]);
      header = true;
      continue;
    }
    std::vector<int> e;
    for (long long x : nums) {
      if (x < 0 || x > (1LL << 30))
        fail(ErrorCode::kOutOfRange, "line " + std::to_string(lineno) + ": vertex " + std::to_string(x) + " out of range");
      e.push_back(static_cast<int>(x));
    }
    edges.push_back(std::move(e));
  }
  if (!header) fail(ErrorCode::kParse, "empty hypergraph file");
  return build_hypergraph(n, k, edges);
}

BuildResult parse_hypergraph(std::string_view text) {
  const auto start = text.find_first_not_of(" \t\r\n");
  if (start != std::string_view::npos && text[start] == '{') return hypergraph_from_json(parse_json(text));
  return hypergraph_from_text(text);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::kIo, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::kIo, "cannot write " + path);
  out << contents;
  if (!out) fail(ErrorCode::kIo, "write failed for " + path);
}

BuildResult load_hypergraph(const std::string& path) { return parse_hypergraph(read_file(path)); }

void save_hypergraph(const std::string& path, const Hypergraph& h) {
  const bool json = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
  write_file(path, json ? hypergraph_to_json(h).dump() + "\n" : hypergraph_to_text(h));
}

Json walk_to_json(const TightWalk& w) {
  return Json{{"closed", w.closed}, {"vertices", w.vertices}};
}

TightWalk walk_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.at("vertices").is_array())
    fail(ErrorCode::kParse, "walk JSON needs a 'vertices' array");
  TightWalk w;
  w.closed = j.value("closed", false);
  for (const Json& v : j.at("vertices")) {
    if (!v.is_number_integer()) fail(ErrorCode::kParse, "walk vertices must be integers");
    w.vertices.push_back(v.get<int>());
  }
  return w;
}

}  // namespace tl
