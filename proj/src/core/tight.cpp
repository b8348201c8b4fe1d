#include "tightlab/tight.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "tightlab/error.hpp"

namespace tl {

namespace {

constexpr int kTupleBits = 6;
constexpr int kMaxTupleLength = 10;

std::string format_seq(const std::vector<Vertex>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

// Ordered k-tuples packed first-vertex-most-significant so that numeric order
// is lexicographic order.
std::uint64_t encode(const std::vector<Vertex>& t) {
  std::uint64_t key = 0;
  for (Vertex v : t) key = (key << kTupleBits) | static_cast<std::uint64_t>(v);
  return key;
}

std::vector<Vertex> decode(std::uint64_t key, int k) {
  std::vector<Vertex> t(k);
  for (int i = k - 1; i >= 0; --i) {
    t[i] = static_cast<Vertex>(key & ((1U << kTupleBits) - 1));
    key >>= kTupleBits;
  }
  return t;
}

std::uint64_t shift_key(std::uint64_t key, int k, Vertex u) {
  const std::uint64_t mask =
      k * kTupleBits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << (k * kTupleBits)) - 1;
  return ((key << kTupleBits) | static_cast<std::uint64_t>(u)) & mask;
}

VertexSet key_set(std::uint64_t key, int k) {
  VertexSet s = 0;
  for (int i = 0; i < k; ++i) {
    s |= singleton(static_cast<Vertex>(key & ((1U << kTupleBits) - 1)));
    key >>= kTupleBits;
  }
  return s;
}

void require_tuple_length(const Hypergraph& h) {
  if (h.k() < 1) fail(ErrorCode::kInvalidArgument, "walks need k >= 1");
  if (h.k() > kMaxTupleLength)
    fail(ErrorCode::kGuardExceeded, "walk search supports k <= 10");
}

// Calls f(successor key) in increasing order of the appended vertex.
template <class F>
void for_each_successor(const Hypergraph& h, std::uint64_t key, F&& f) {
  const int k = h.k();
  const VertexSet tail = key_set(key, k) & ~singleton(static_cast<Vertex>(
                                              key >> (kTupleBits * (k - 1))));
  for (Vertex u = 0; u < h.n(); ++u) {
    if (has_vertex(tail, u)) continue;
    if (h.contains(tail | singleton(u))) f(shift_key(key, k, u));
  }
}

void require_directed_edge(const Hypergraph& h, const DirectedEdge& t, const char* name) {
  if (static_cast<int>(t.size()) != h.k())
    fail(ErrorCode::kInvalidArgument, std::string(name) + " must have k vertices");
  for (Vertex v : t)
    if (v < 0 || v >= h.n())
      fail(ErrorCode::kOutOfRange, std::string(name) + " has a vertex out of range");
  const VertexSet s = to_set(t);
  if (set_size(s) != h.k())
    fail(ErrorCode::kInvalidArgument, std::string(name) + " repeats a vertex");
  if (!h.contains(s))
    fail(ErrorCode::kInvalidArgument, std::string(name) + " is not an edge " + format_seq(t));
}

// Shortest, then lexicographically least, open walk from `from` to `to` with
// at least `min_steps` appended vertices and optional residue of its length.
std::optional<std::vector<Vertex>> residue_bfs(const Hypergraph& h, std::uint64_t from,
                                               std::uint64_t to, std::optional<int> residue,
                                               int min_steps) {
  const int k = h.k();
  auto accepts = [&](std::uint64_t key, int r) {
    return key == to && (!residue || *residue == r);
  };
  if (min_steps == 0 && accepts(from, 0)) return decode(from, k);

  struct Node {
    std::uint64_t key;
    int r;
    std::int64_t parent;
    Vertex appended;
  };
  std::vector<Node> nodes;
  // Keys use at most 60 bits and r < 16, so the pair packs into one word.
  std::unordered_map<std::uint64_t, std::size_t> seen;
  auto state_id = [](std::uint64_t key, int r) { return (key << 4) | static_cast<std::uint64_t>(r); };
  nodes.push_back({from, 0, -1, -1});
  seen.emplace(state_id(from, 0), 0);
  std::deque<std::size_t> queue{0};
  auto rebuild = [&](std::size_t idx, Vertex last) {
    std::vector<Vertex> tail{last};
    for (std::int64_t i = static_cast<std::int64_t>(idx); nodes[i].parent >= 0; i = nodes[i].parent)
      tail.push_back(nodes[i].appended);
    std::vector<Vertex> walk = decode(from, k);
    walk.insert(walk.end(), tail.rbegin(), tail.rend());
    return walk;
  };
  while (!queue.empty()) {
    const std::size_t cur = queue.front();
    queue.pop_front();
    const std::uint64_t key = nodes[cur].key;
    const int nr = (nodes[cur].r + 1) % k;
    std::optional<std::vector<Vertex>> found;
    for_each_successor(h, key, [&](std::uint64_t next) {
      if (found) return;
      const Vertex u = static_cast<Vertex>(next & ((1U << kTupleBits) - 1));
      if (accepts(next, nr)) {
        found = rebuild(cur, u);
        return;
      }
      const auto [it, fresh] = seen.emplace(state_id(next, nr), nodes.size());
      if (!fresh) return;
      nodes.push_back({next, nr, static_cast<std::int64_t>(cur), u});
      queue.push_back(nodes.size() - 1);
    });
    if (found) return found;
  }
  return std::nullopt;
}

struct DirectedGraph {
  std::vector<std::uint64_t> keys;  // sorted, so index order is lex order
  std::vector<std::vector<std::size_t>> out;
};

DirectedGraph directed_edge_graph(const Hypergraph& h, std::size_t guard) {
  require_tuple_length(h);
  const int k = h.k();
  std::uint64_t perms = 1;
  for (int i = 2; i <= k; ++i) perms *= static_cast<std::uint64_t>(i);
  if (h.edge_count() > 0 && perms > guard / h.edge_count())
    fail(ErrorCode::kGuardExceeded,
         "directed-edge digraph would have " + std::to_string(perms) + " x " +
             std::to_string(h.edge_count()) + " nodes, above the guard of " +
             std::to_string(guard));
  DirectedGraph g;
  for (VertexSet e : h.edges()) {
    std::vector<Vertex> t = members(e);
    do {
      g.keys.push_back(encode(t));
    } while (std::next_permutation(t.begin(), t.end()));
  }
  std::sort(g.keys.begin(), g.keys.end());
  std::unordered_map<std::uint64_t, std::size_t> index;
  index.reserve(g.keys.size());
  for (std::size_t i = 0; i < g.keys.size(); ++i) index.emplace(g.keys[i], i);
  g.out.resize(g.keys.size());
  for (std::size_t i = 0; i < g.keys.size(); ++i)
    for_each_successor(h, g.keys[i], [&](std::uint64_t next) { g.out[i].push_back(index.at(next)); });
  return g;
}

std::vector<bool> reachable(const std::vector<std::vector<std::size_t>>& adj, std::size_t root) {
  std::vector<bool> seen(adj.size(), false);
  std::vector<std::size_t> stack{root};
  seen[root] = true;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
  }
  return seen;
}

// Iterative Tarjan; component ids are arbitrary.
std::vector<std::size_t> strong_components(const DirectedGraph& g, std::size_t& count) {
  const std::size_t n = g.keys.size();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnset), low(n, 0), comp(n, kUnset);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::pair<std::size_t, std::size_t>> call;  // (vertex, next edge)
  std::size_t counter = 0;
  count = 0;
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnset) continue;
    call.emplace_back(root, 0);
    while (!call.empty()) {
      auto& [v, ei] = call.back();
      if (ei == 0 && index[v] == kUnset) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
      }
      if (ei < g.out[v].size()) {
        const std::size_t w = g.out[v][ei++];
        if (index[w] == kUnset) {
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = count;
        } while (w != v);
        ++count;
      }
      const std::size_t done = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
    }
  }
  return comp;
}

}  // namespace

WalkDiagnostic check_walk(const Hypergraph& h, const std::vector<Vertex>& seq, bool closed) {
  const int k = h.k();
  const std::size_t len = seq.size();
  WalkDiagnostic d;
  if (k < 1) return {false, 0, "walks need k >= 1"};
  const std::size_t min_len = closed ? static_cast<std::size_t>(k) + 1 : static_cast<std::size_t>(k);
  if (len < min_len)
    return {false, 0, "walk has " + std::to_string(len) + " vertices, needs at least " +
                          std::to_string(min_len)};
  for (std::size_t i = 0; i < len; ++i)
    if (seq[i] < 0 || seq[i] >= h.n())
      return {false, i, "vertex " + std::to_string(seq[i]) + " out of range"};
  const std::size_t windows = closed ? len : len - k + 1;
  for (std::size_t i = 0; i < windows; ++i) {
    std::vector<Vertex> w(k);
    VertexSet s = 0;
    for (int j = 0; j < k; ++j) {
      w[j] = seq[(i + j) % len];
      s |= singleton(w[j]);
    }
    if (set_size(s) != k)
      return {false, i, "window " + std::to_string(i) + " " + format_seq(w) + " repeats a vertex"};
    if (!h.contains(s))
      return {false, i, "window " + std::to_string(i) + " " + format_seq(w) + " is not an edge"};
  }
  return d;
}

TightWalk validate_walk(const Hypergraph& h, std::vector<Vertex> seq, bool closed) {
  const WalkDiagnostic d = check_walk(h, seq, closed);
  if (!d.ok) fail(ErrorCode::kInvalidArgument, d.reason);
  return TightWalk{std::move(seq), closed};
}

Hypergraph ComponentPartition::component(const Hypergraph& h, int id) const {
  if (id < 0 || static_cast<std::size_t>(id) >= summaries.size())
    fail(ErrorCode::kOutOfRange, "no component " + std::to_string(id));
  std::vector<VertexSet> edges;
  for (std::size_t i = 0; i < h.edges().size(); ++i)
    if (component_of[i] == id) edges.push_back(h.edges()[i]);
  return Hypergraph(h.n(), h.k(), std::move(edges));
}

ComponentPartition tight_components(const Hypergraph& h) {
  const auto& edges = h.edges();
  const std::size_t m = edges.size();
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::unordered_map<VertexSet, std::size_t> first_owner;
  for (std::size_t i = 0; i < m; ++i) {
    for (Vertex v : members(edges[i])) {
      const VertexSet sub = edges[i] & ~singleton(v);
      const auto [it, fresh] = first_owner.emplace(sub, i);
      if (!fresh) {
        const std::size_t a = find(it->second), b = find(i);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
  }
  ComponentPartition p;
  p.component_of.assign(m, -1);
  std::unordered_map<std::size_t, int> id_of_root;
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t r = find(i);
    auto [it, fresh] = id_of_root.emplace(r, static_cast<int>(p.summaries.size()));
    if (fresh) p.summaries.emplace_back();
    p.component_of[i] = it->second;
  }
  const int k = h.k();
  std::vector<std::vector<VertexSet>> shadows(p.summaries.size());
  for (std::size_t i = 0; i < m; ++i) {
    ComponentSummary& s = p.summaries[p.component_of[i]];
    ++s.edge_count;
    s.span |= edges[i];
    for_each_subset_of(edges[i], k - 1, [&](VertexSet sub) { shadows[p.component_of[i]].push_back(sub); });
  }
  for (std::size_t c = 0; c < p.summaries.size(); ++c) {
    auto& sh = shadows[c];
    std::sort(sh.begin(), sh.end());
    sh.erase(std::unique(sh.begin(), sh.end()), sh.end());
    ComponentSummary& s = p.summaries[c];
    s.shadow_edge_count = sh.size();
    s.edge_density = ratio(BigInt(s.edge_count), binomial(h.n(), k));
    s.shadow_density = ratio(BigInt(s.shadow_edge_count), binomial(h.n(), k - 1));
  }
  return p;
}

bool co_walk_oracle(const Hypergraph& h, VertexSet e, VertexSet f) {
  require_tuple_length(h);
  if (!h.contains(e) || !h.contains(f))
    fail(ErrorCode::kInvalidArgument, "co_walk_oracle needs two edges of the hypergraph");
  if (e == f) return true;
  // Every ordering of e is a possible first window; f may appear in any order.
  std::unordered_map<std::uint64_t, bool> seen;
  std::vector<std::uint64_t> stack;
  std::vector<Vertex> t = members(e);
  do {
    seen.emplace(encode(t), true);
    stack.push_back(encode(t));
  } while (std::next_permutation(t.begin(), t.end()));
  const int k = h.k();
  while (!stack.empty()) {
    const std::uint64_t key = stack.back();
    stack.pop_back();
    if (key_set(key, k) == f) return true;
    for_each_successor(h, key, [&](std::uint64_t next) {
      if (seen.emplace(next, true).second) stack.push_back(next);
    });
  }
  return false;
}

bool is_strongly_connected(const Hypergraph& h, std::size_t guard) {
  if (h.empty()) fail(ErrorCode::kInvalidArgument, "strong connectivity needs a nonempty hypergraph");
  const DirectedGraph g = directed_edge_graph(h, guard);
  const std::vector<bool> fwd = reachable(g.out, 0);
  if (std::find(fwd.begin(), fwd.end(), false) != fwd.end()) return false;
  std::vector<std::vector<std::size_t>> rev(g.out.size());
  for (std::size_t v = 0; v < g.out.size(); ++v)
    for (std::size_t w : g.out[v]) rev[w].push_back(v);
  const std::vector<bool> back = reachable(rev, 0);
  return std::find(back.begin(), back.end(), false) == back.end();
}

std::optional<TightWalk> find_tight_walk(const Hypergraph& h, const DirectedEdge& from,
                                         const DirectedEdge& to, std::optional<int> residue) {
  require_tuple_length(h);
  require_directed_edge(h, from, "from");
  require_directed_edge(h, to, "to");
  if (residue) residue = ((*residue % h.k()) + h.k()) % h.k();
  // States count walk length mod k; the initial walk has length k.
  auto found = residue_bfs(h, encode(from), encode(to), residue, 0);
  if (!found) return std::nullopt;
  return TightWalk{std::move(*found), false};
}

ClosedWalkSearch find_closed_walk(const Hypergraph& h, int residue, std::size_t guard) {
  require_tuple_length(h);
  const int k = h.k();
  residue = ((residue % k) + k) % k;
  ClosedWalkSearch out;
  if (h.empty()) return out;
  const DirectedGraph g = directed_edge_graph(h, guard);
  std::size_t count = 0;
  const std::vector<std::size_t> comp = strong_components(g, count);

  // Representative is the least member; period from BFS levels inside the
  // component: gcd over internal arcs u -> v of level(u) + 1 - level(v).
  std::vector<std::size_t> rep(count, static_cast<std::size_t>(-1));
  std::vector<std::size_t> size(count, 0);
  for (std::size_t v = 0; v < g.keys.size(); ++v) {
    if (rep[comp[v]] == static_cast<std::size_t>(-1)) rep[comp[v]] = v;
    ++size[comp[v]];
  }
  std::vector<std::int64_t> level(g.keys.size(), -1);
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return rep[a] < rep[b]; });
  for (std::size_t c : order) {
    StrongComponentInfo info;
    info.representative = decode(g.keys[rep[c]], k);
    info.size = size[c];
    std::deque<std::size_t> q{rep[c]};
    level[rep[c]] = 0;
    std::uint64_t period = 0;
    while (!q.empty()) {
      const std::size_t v = q.front();
      q.pop_front();
      for (std::size_t w : g.out[v]) {
        if (comp[w] != c) continue;
        info.has_cycle = true;
        if (level[w] < 0) {
          level[w] = level[v] + 1;
          q.push_back(w);
        } else {
          const std::int64_t diff = level[v] + 1 - level[w];
          period = std::gcd(period, static_cast<std::uint64_t>(diff < 0 ? -diff : diff));
        }
      }
    }
    info.period = info.has_cycle ? static_cast<std::size_t>(period) : 0;
    out.components.push_back(info);
  }
  for (const StrongComponentInfo& info : out.components) {
    if (!info.has_cycle) continue;
    const std::uint64_t gk = std::gcd(static_cast<std::uint64_t>(info.period), static_cast<std::uint64_t>(k));
    if (static_cast<std::uint64_t>(residue) % gk != 0) continue;
    const std::uint64_t key = encode(info.representative);
    auto open = residue_bfs(h, key, key, residue, 1);
    if (!open) fail(ErrorCode::kCertificateViolation, "period analysis promised a closed walk that the search did not find");
    std::vector<Vertex> cyc(open->begin(), open->end() - k);
    // A rotation of a single edge has only k vertices; go round twice.
    if (static_cast<int>(cyc.size()) == k) cyc.insert(cyc.end(), cyc.begin(), cyc.end());
    out.walk = validate_walk(h, std::move(cyc), true);
    return out;
  }
  return out;
}

std::string check_switcher(const Hypergraph& c, const Switcher& sw) {
  if (!c.contains(sw.edge)) return "switcher edge is not an edge";
  if (!has_vertex(sw.edge, sw.central)) return "central vertex is not in the switcher edge";
  if (c.k() == 1) return {};  // every edge of a 1-graph is a switcher
  VertexSet covered = 0;
  for (const auto& [b, w] : sw.witnesses) {
    if (b < 0 || b >= c.n() || !has_vertex(sw.edge, b))
      return "witness target " + std::to_string(b) + " is not in the switcher edge";
    if (w < 0 || w >= c.n() || has_vertex(sw.edge, w))
      return "witness " + std::to_string(w) + " for " + std::to_string(b) + " lies in the edge";
    const VertexSet grown = sw.edge | singleton(w);
    if (!c.contains(grown & ~singleton(sw.central)) || !c.contains(grown & ~singleton(b)))
      return "witness " + std::to_string(w) + " for " + std::to_string(b) + " does not close both edges";
    covered |= singleton(b);
  }
  if (covered != sw.edge) return "some vertex of the switcher edge has no witness";
  return {};
}

TightWalk switcher_loop(const Hypergraph& c, const Switcher& sw) {
  const std::string problem = check_switcher(c, sw);
  if (!problem.empty()) fail(ErrorCode::kInvalidArgument, "invalid switcher: " + problem);
  const int l = c.k();
  // a[1] is central; a[2..l] ascending; b[i] witnesses a[i].
  std::vector<Vertex> a(l + 1), b(l + 1, -1);
  a[1] = sw.central;
  {
    int i = 2;
    for (Vertex v : members(sw.edge & ~singleton(sw.central))) a[i++] = v;
  }
  for (int i = 1; i <= l; ++i)
    for (const auto& [target, w] : sw.witnesses)
      if (target == a[i]) b[i] = w;
  if (l == 1) return validate_walk(c, {a[1], a[1]}, true);

  std::vector<Vertex> walk(a.begin() + 1, a.end());  // A_0
  if (l == 2) {
    walk.push_back(b[2]);
    return validate_walk(c, std::move(walk), true);
  }
  // A_1 = (b2, a1, a3..al)
  walk.push_back(b[2]);
  walk.push_back(a[1]);
  for (int j = 3; j <= l; ++j) walk.push_back(a[j]);
  // A_i = (a2..ai, b_{i+1}, a1, a_{i+2}..al) for 2 <= i <= l-2
  for (int i = 2; i <= l - 2; ++i) {
    for (int j = 2; j <= i; ++j) walk.push_back(a[j]);
    walk.push_back(b[i + 1]);
    walk.push_back(a[1]);
    for (int j = i + 2; j <= l; ++j) walk.push_back(a[j]);
  }
  // A_{l-1} = (a2..a_{l-1}, b_l)
  for (int j = 2; j <= l - 1; ++j) walk.push_back(a[j]);
  walk.push_back(b[l]);
  return validate_walk(c, std::move(walk), true);
}

ShortenResult shorten_walk_mod_k(const Hypergraph& h, const TightWalk& w) {
  if (!w.closed) fail(ErrorCode::kInvalidArgument, "shorten_walk_mod_k needs a closed walk");
  require_tuple_length(h);
  ShortenResult out{validate_walk(h, w.vertices, true), {}};
  const std::size_t k = static_cast<std::size_t>(h.k());
  std::vector<Vertex>& v = out.walk.vertices;
  while (true) {
    const std::size_t len = v.size();
    std::vector<std::uint64_t> z(len);
    for (std::size_t i = 0; i < len; ++i) {
      std::uint64_t key = 0;
      for (std::size_t j = 0; j < k; ++j) key = (key << kTupleBits) | static_cast<std::uint64_t>(v[(i + j) % len]);
      z[i] = key;
    }
    // Earliest i, then the farthest j, keeping at least k + 1 vertices.
    bool cut = false;
    for (std::size_t i = 0; i < len && !cut; ++i) {
      for (std::size_t j = len - 1; j > i; --j) {
        if ((j - i) % k != 0 || z[j] != z[i] || len - (j - i) < k + 1) continue;
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(i), v.begin() + static_cast<std::ptrdiff_t>(j));
        out.excisions.emplace_back(i, j);
        cut = true;
        break;
      }
    }
    if (!cut) break;
  }
  out.walk = validate_walk(h, std::move(v), true);
  return out;
}

}  // namespace tl
