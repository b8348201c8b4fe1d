#include "tightlab/hamilton.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>
#include <tuple>

#include "tightlab/error.hpp"
#include "tightlab/random.hpp"

namespace tl {

const char* outcome_name(SearchOutcome o) {
  switch (o) {
    case SearchOutcome::kFound: return "found";
    case SearchOutcome::kExhausted: return "exhausted-none";
    case SearchOutcome::kTimeout: return "timeout";
  }
  return "unknown";
}

namespace {

using Clock = std::chrono::steady_clock;

class Meter {
 public:
  Meter(std::uint64_t max_nodes, double max_seconds)
      : max_nodes_(max_nodes), max_seconds_(max_seconds), start_(Clock::now()) {}

  // Counts one expanded node; false once the budget is spent.
  bool tick() {
    ++nodes_;
    if (nodes_ > max_nodes_) return stop();
    if ((nodes_ & 1023U) == 0 && elapsed() > max_seconds_) return stop();
    return true;
  }
  bool stopped() const { return stopped_; }
  std::uint64_t nodes() const { return nodes_; }
  double elapsed() const { return std::chrono::duration<double>(Clock::now() - start_).count(); }

 private:
  bool stop() {
    stopped_ = true;
    return false;
  }

  std::uint64_t max_nodes_;
  double max_seconds_;
  Clock::time_point start_;
  std::uint64_t nodes_ = 0;
  bool stopped_ = false;
};

class CycleSearch {
 public:
  CycleSearch(const Hypergraph& h, int length, Meter& meter)
      : h_(h), k_(h.k()), len_(length), meter_(meter), seq_(static_cast<std::size_t>(length)) {}

  // Cycles whose least vertex is `first`.
  bool run(Vertex first) {
    allowed_ = full_set(h_.n()) & ~(singleton(first) - 1);
    seq_[0] = first;
    used_ = singleton(first);
    if (k_ == 1 && !h_.contains(singleton(first))) return false;
    return extend(1);
  }

  const std::vector<Vertex>& sequence() const { return seq_; }

 private:
  VertexSet tail(int end, int count) const {
    VertexSet s = 0;
    for (int i = end - count + 1; i <= end; ++i) s |= singleton(seq_[static_cast<std::size_t>(i)]);
    return s;
  }

  bool closes() const {
    for (int i = len_ - k_ + 1; i < len_; ++i) {
      VertexSet s = 0;
      for (int j = 0; j < k_; ++j) s |= singleton(seq_[static_cast<std::size_t>((i + j) % len_)]);
      if (!h_.contains(s)) return false;
    }
    return true;
  }

  bool has_extension(int p) const {
    const VertexSet last = tail(p, k_ - 1);
    VertexSet free = allowed_ & ~used_;
    while (free) {
      const Vertex y = std::countr_zero(free);
      free &= free - 1;
      if (p + 1 == len_ - 1 && len_ >= 3 && y < seq_[1]) continue;
      if (h_.contains(last | singleton(y))) return true;
    }
    return false;
  }

  bool extend(int p) {
    if (p == len_) return true;
    VertexSet free = allowed_ & ~used_;
    while (free) {
      const Vertex x = std::countr_zero(free);
      free &= free - 1;
      if (p == len_ - 1 && len_ >= 3 && x < seq_[1]) continue;
      if (!meter_.tick()) return false;
      seq_[static_cast<std::size_t>(p)] = x;
      if (p >= k_ - 1 && !h_.contains(tail(p, k_))) continue;
      if (p == len_ - 1) {
        if (closes()) return true;
        continue;
      }
      if (p >= k_ - 2 && !has_extension(p)) continue;
      used_ |= singleton(x);
      if (extend(p + 1)) return true;
      used_ &= ~singleton(x);
      if (meter_.stopped()) return false;
    }
    return false;
  }

  const Hypergraph& h_;
  int k_;
  int len_;
  Meter& meter_;
  std::vector<Vertex> seq_;
  VertexSet used_ = 0;
  VertexSet allowed_ = 0;
};

HamiltonResult search_cycle(const Hypergraph& h, int length, bool hamilton, const SearchBudget& budget) {
  Meter meter(budget.max_nodes, budget.max_seconds);
  HamiltonResult res;
  CycleSearch search(h, length, meter);
  const int last_first = hamilton ? 0 : h.n() - length;
  for (Vertex first = 0; first <= last_first; ++first) {
    if (search.run(first)) {
      res.outcome = SearchOutcome::kFound;
      res.cycle = validate_walk(h, search.sequence(), true);
      break;
    }
    if (meter.stopped()) {
      res.outcome = SearchOutcome::kTimeout;
      break;
    }
  }
  res.nodes = meter.nodes();
  res.seconds = meter.elapsed();
  return res;
}

}  // namespace

HamiltonResult find_tight_hamilton(const Hypergraph& h, const SearchBudget& budget) {
  if (h.n() < h.k() + 1) fail(ErrorCode::kInvalidArgument, "Hamilton search needs n >= k + 1");
  return search_cycle(h, h.n(), true, budget);
}

HamiltonResult find_tight_cycle(const Hypergraph& h, int length, const SearchBudget& budget) {
  if (length < h.k() + 1 || length > h.n())
    fail(ErrorCode::kOutOfRange, "cycle length must lie in [k + 1, n]");
  return search_cycle(h, length, length == h.n(), budget);
}

VertexSet AbsorbingGadget::span() const {
  VertexSet s = to_set(a) | to_set(b) | to_set(c);
  for (const auto& part : p) s |= to_set(part);
  for (const auto& part : q) s |= to_set(part);
  return s;
}

namespace {

std::vector<Vertex> concat(std::initializer_list<const std::vector<Vertex>*> parts) {
  std::vector<Vertex> out;
  for (const auto* part : parts) out.insert(out.end(), part->begin(), part->end());
  return out;
}

std::vector<Vertex> through(const std::vector<Vertex>& p, Vertex x, const std::vector<Vertex>& q) {
  std::vector<Vertex> out = p;
  out.push_back(x);
  out.insert(out.end(), q.begin(), q.end());
  return out;
}

void require_target(const Hypergraph& g, const std::vector<Vertex>& target) {
  if (g.k() < 2) fail(ErrorCode::kInvalidArgument, "absorbing gadgets need k >= 2");
  if (static_cast<int>(target.size()) != g.k())
    fail(ErrorCode::kInvalidArgument, "target must have k vertices");
  for (Vertex t : target)
    if (t < 0 || t >= g.n()) fail(ErrorCode::kInvalidArgument, "target vertex out of range");
  if (set_size(to_set(target)) != g.k()) fail(ErrorCode::kInvalidArgument, "target repeats a vertex");
}

// Slot layout: A, B, C in slots 0..3k-1, then P_i and Q_i with k - 1 slots
// each. A reference r >= 0 is a slot, r < 0 the target vertex t_{-r-1}.
struct Window {
  std::vector<int> refs;
};

class GadgetBuilder {
 public:
  GadgetBuilder(const Hypergraph& g, const std::vector<Vertex>& target, Meter& meter)
      : g_(g), k_(g.k()), target_(target), meter_(meter) {
    const int k = k_;
    slots_ = k * (2 * k + 1);
    by_trigger_.resize(static_cast<std::size_t>(slots_));
    for (int s = 0; s + k <= 3 * k; ++s) add_window(range(s, k));
    for (int s = 1; s < k; ++s) {
      std::vector<int> refs;
      for (int m = s; m < s + k; ++m) refs.push_back(m < k ? m : 2 * k + (m - k));
      add_window(refs);
    }
    for (int i = 0; i < k; ++i) {
      const int p0 = p_slot(i), q0 = p0 + (k - 1);
      for (int mid : {k + i, -1 - i}) {
        std::vector<int> z;
        for (int m = 0; m < k - 1; ++m) z.push_back(p0 + m);
        z.push_back(mid);
        for (int m = 0; m < k - 1; ++m) z.push_back(q0 + m);
        for (int s = 0; s < k; ++s) add_window({z.begin() + s, z.begin() + s + k});
      }
    }
    avoid_ = to_set(target);
    values_.assign(static_cast<std::size_t>(slots_), -1);
  }

  // Orders candidates per slot; ascending unless a restart index is given.
  void set_order(std::optional<std::pair<std::uint64_t, int>> restart) {
    order_.assign(static_cast<std::size_t>(slots_), {});
    for (int s = 0; s < slots_; ++s) {
      auto& o = order_[static_cast<std::size_t>(s)];
      o.resize(static_cast<std::size_t>(g_.n()));
      std::iota(o.begin(), o.end(), 0);
      if (restart) {
        const auto [seed, r] = *restart;
        std::vector<std::uint64_t> key(o.size());
        for (std::size_t v = 0; v < o.size(); ++v)
          key[v] = counter_hash({seed, static_cast<std::uint64_t>(r), static_cast<std::uint64_t>(s), v});
        std::sort(o.begin(), o.end(), [&](Vertex x, Vertex y) { return key[x] < key[y]; });
      }
    }
  }

  bool run() {
    used_ = 0;
    return place(0);
  }

  AbsorbingGadget gadget() const {
    AbsorbingGadget out;
    out.target = target_;
    auto take = [&](int from, int count) {
      return std::vector<Vertex>(values_.begin() + from, values_.begin() + from + count);
    };
    out.a = take(0, k_);
    out.b = take(k_, k_);
    out.c = take(2 * k_, k_);
    for (int i = 0; i < k_; ++i) {
      out.p.push_back(take(p_slot(i), k_ - 1));
      out.q.push_back(take(p_slot(i) + k_ - 1, k_ - 1));
    }
    return out;
  }

 private:
  int p_slot(int i) const { return 3 * k_ + i * (2 * k_ - 2); }

  static std::vector<int> range(int from, int count) {
    std::vector<int> r(static_cast<std::size_t>(count));
    std::iota(r.begin(), r.end(), from);
    return r;
  }

  void add_window(std::vector<int> refs) {
    int trigger = -1;
    for (int r : refs) trigger = std::max(trigger, r);
    // Every window holds a slot since k >= 2.
    by_trigger_[static_cast<std::size_t>(trigger)].push_back(Window{std::move(refs)});
  }

  Vertex value(int ref) const {
    return ref >= 0 ? values_[static_cast<std::size_t>(ref)] : target_[static_cast<std::size_t>(-ref - 1)];
  }

  bool windows_hold(int slot) const {
    for (const Window& w : by_trigger_[static_cast<std::size_t>(slot)]) {
      VertexSet s = 0;
      for (int r : w.refs) s |= singleton(value(r));
      if (!g_.contains(s)) return false;
    }
    return true;
  }

  bool place(int slot) {
    if (slot == slots_) return true;
    for (Vertex x : order_[static_cast<std::size_t>(slot)]) {
      if (has_vertex(used_ | avoid_, x)) continue;
      if (!meter_.tick()) return false;
      values_[static_cast<std::size_t>(slot)] = x;
      if (!windows_hold(slot)) continue;
      used_ |= singleton(x);
      if (place(slot + 1)) return true;
      used_ &= ~singleton(x);
      if (meter_.stopped()) return false;
    }
    return false;
  }

  const Hypergraph& g_;
  int k_;
  std::vector<Vertex> target_;
  Meter& meter_;
  int slots_ = 0;
  std::vector<std::vector<Window>> by_trigger_;
  std::vector<std::vector<Vertex>> order_;
  std::vector<Vertex> values_;
  VertexSet used_ = 0;
  VertexSet avoid_ = 0;
};

}  // namespace

std::string check_gadget(const Hypergraph& g, const AbsorbingGadget& gd) {
  const int k = g.k();
  const auto sz = static_cast<std::size_t>(k);
  if (gd.target.size() != sz || gd.a.size() != sz || gd.b.size() != sz || gd.c.size() != sz ||
      gd.p.size() != sz || gd.q.size() != sz)
    return "gadget parts have the wrong sizes";
  for (std::size_t i = 0; i < sz; ++i)
    if (gd.p[i].size() != sz - 1 || gd.q[i].size() != sz - 1) return "P_i and Q_i need k - 1 vertices";
  std::vector<Vertex> all = concat({&gd.target, &gd.a, &gd.b, &gd.c});
  for (std::size_t i = 0; i < sz; ++i) all = concat({&all, &gd.p[i], &gd.q[i]});
  VertexSet seen = 0;
  for (Vertex v : all) {
    if (v < 0 || v >= g.n()) return "vertex " + std::to_string(v) + " out of range";
    if (has_vertex(seen, v)) return "vertex " + std::to_string(v) + " used twice";
    seen |= singleton(v);
  }
  auto path_ok = [&](const std::vector<Vertex>& seq, const std::string& name) -> std::string {
    const WalkDiagnostic d = check_walk(g, seq, false);
    return d.ok ? std::string() : name + ": " + d.reason;
  };
  for (std::string msg : {path_ok(concat({&gd.a, &gd.c}), "AC"), path_ok(concat({&gd.a, &gd.b, &gd.c}), "ABC")})
    if (!msg.empty()) return msg;
  for (std::size_t i = 0; i < sz; ++i) {
    const std::string idx = std::to_string(i + 1);
    std::string msg = path_ok(through(gd.p[i], gd.b[i], gd.q[i]), "P" + idx + " b" + idx + " Q" + idx);
    if (msg.empty()) msg = path_ok(through(gd.p[i], gd.target[i], gd.q[i]), "P" + idx + " t" + idx + " Q" + idx);
    if (!msg.empty()) return msg;
  }
  return {};
}

GadgetSearch find_absorbing_gadget(const Hypergraph& g, const std::vector<Vertex>& target,
                                   const GadgetOptions& options) {
  require_target(g, target);
  const int k = g.k();
  GadgetSearch res;
  // Cheap certificates of absence: too few vertices, or a target vertex in
  // no edge.
  if (g.n() < k * (2 * k + 1) + k) return res;
  for (Vertex t : target)
    if (!has_vertex(g.support(), t)) return res;

  auto finish = [&](GadgetBuilder& b) {
    AbsorbingGadget gd = b.gadget();
    const std::string msg = check_gadget(g, gd);
    if (!msg.empty()) fail(ErrorCode::kCertificateViolation, "gadget failed its recheck: " + msg);
    res.outcome = SearchOutcome::kFound;
    res.gadget = std::move(gd);
  };
  for (int r = 0; r < options.restarts; ++r) {
    Meter meter(options.nodes_per_restart, options.budget.max_seconds);
    GadgetBuilder b(g, target, meter);
    b.set_order(std::make_pair(options.seed, r));
    ++res.restarts_used;
    const bool ok = b.run();
    res.nodes += meter.nodes();
    if (ok) {
      finish(b);
      return res;
    }
  }
  Meter meter(options.budget.max_nodes, options.budget.max_seconds);
  GadgetBuilder b(g, target, meter);
  b.set_order(std::nullopt);
  const bool ok = b.run();
  res.nodes += meter.nodes();
  if (ok)
    finish(b);
  else
    res.outcome = meter.stopped() ? SearchOutcome::kTimeout : SearchOutcome::kExhausted;
  return res;
}

std::vector<Vertex> gadget_path(const AbsorbingGadget& gd) {
  std::vector<Vertex> out = concat({&gd.a, &gd.c});
  for (std::size_t i = 0; i < gd.p.size(); ++i) {
    const std::vector<Vertex> seg = through(gd.p[i], gd.b[i], gd.q[i]);
    out.insert(out.end(), seg.begin(), seg.end());
  }
  return out;
}

namespace {

// Start of the first occurrence of seg inside path, or npos.
std::size_t find_segment(const std::vector<Vertex>& path, const std::vector<Vertex>& seg) {
  const auto it = std::search(path.begin(), path.end(), seg.begin(), seg.end());
  return it == path.end() ? std::string::npos : static_cast<std::size_t>(it - path.begin());
}

}  // namespace

SwapReport verify_absorption_swap(const Hypergraph& g, const std::vector<Vertex>& path,
                                  const AbsorbingGadget& gd) {
  SwapReport rep;
  const int k = g.k();
  const std::string gadget_msg = check_gadget(g, gd);
  if (!gadget_msg.empty()) {
    rep.reason = "invalid gadget: " + gadget_msg;
    return rep;
  }
  const WalkDiagnostic pd = check_walk(g, path, false);
  if (!pd.ok) {
    rep.reason = "P is not a tight path: " + pd.reason;
    return rep;
  }
  const VertexSet vp = to_set(path);
  if (set_size(vp) != static_cast<int>(path.size())) {
    rep.reason = "P repeats a vertex";
    return rep;
  }
  if ((vp & to_set(gd.target)) != 0) {
    rep.reason = "T meets V(P)";
    return rep;
  }
  // (position, old length, replacement), applied right to left.
  std::vector<std::tuple<std::size_t, std::size_t, std::vector<Vertex>>> edits;
  const std::vector<Vertex> ac = concat({&gd.a, &gd.c});
  const std::size_t at = find_segment(path, ac);
  if (at == std::string::npos) {
    rep.reason = "AC is not a subpath of P";
    return rep;
  }
  edits.emplace_back(at, ac.size(), concat({&gd.a, &gd.b, &gd.c}));
  for (std::size_t i = 0; i < gd.p.size(); ++i) {
    const std::vector<Vertex> seg = through(gd.p[i], gd.b[i], gd.q[i]);
    const std::size_t pos = find_segment(path, seg);
    if (pos == std::string::npos) {
      rep.reason = "P" + std::to_string(i + 1) + " b" + std::to_string(i + 1) + " Q" + std::to_string(i + 1) +
                   " is not a subpath of P";
      return rep;
    }
    edits.emplace_back(pos, seg.size(), through(gd.p[i], gd.target[i], gd.q[i]));
  }
  std::sort(edits.begin(), edits.end(),
            [](const auto& x, const auto& y) { return std::get<0>(x) > std::get<0>(y); });
  std::vector<Vertex> out = path;
  for (const auto& [pos, len, repl] : edits) {
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(pos), out.begin() + static_cast<std::ptrdiff_t>(pos + len));
    out.insert(out.begin() + static_cast<std::ptrdiff_t>(pos), repl.begin(), repl.end());
  }
  const WalkDiagnostic sd = check_walk(g, out, false);
  if (!sd.ok) {
    rep.reason = "P' is not a tight path: " + sd.reason;
    return rep;
  }
  const auto ends = static_cast<std::size_t>(k - 1);
  if (!std::equal(path.begin(), path.begin() + ends, out.begin()) ||
      !std::equal(path.end() - ends, path.end(), out.end() - ends)) {
    rep.reason = "P' changes an end (k-1)-tuple";
    return rep;
  }
  const VertexSet vq = to_set(out);
  if (set_size(vq) != static_cast<int>(out.size()) || vq != (vp | to_set(gd.target))) {
    rep.reason = "V(P') differs from V(P) + T";
    return rep;
  }
  rep.ok = true;
  rep.swapped = std::move(out);
  return rep;
}

}  // namespace tl
