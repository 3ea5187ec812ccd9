#include "fgdyn/subgroup.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

#include "fgdyn/errors.hpp"

namespace fgdyn {

namespace {

// Union-find folding. Each state keeps its outgoing transitions; targets are
// resolved through find() when read, so stale ids after a merge are harmless.
class Folder {
 public:
  int add_state() {
    parent_.push_back(static_cast<int>(parent_.size()));
    out_.emplace_back();
    return parent_.back();
  }

  int find(int s) {
    while (parent_[s] != s) {
      parent_[s] = parent_[parent_[s]];
      s = parent_[s];
    }
    return s;
  }

  void add_edge(int s, Letter x, int t) {
    link(s, x, t);
    link(t, x.inverse(), s);
    drain();
  }

  std::vector<std::map<Letter, int>> finish();

 private:
  void link(int s, Letter x, int t) {
    s = find(s);
    t = find(t);
    auto [it, inserted] = out_[s].try_emplace(x, t);
    if (!inserted && find(it->second) != t) pending_.emplace_back(find(it->second), t);
  }

  void drain() {
    while (!pending_.empty()) {
      auto [u, v] = pending_.front();
      pending_.pop_front();
      u = find(u);
      v = find(v);
      if (u == v) continue;
      if (out_[u].size() < out_[v].size()) std::swap(u, v);
      parent_[v] = u;
      auto moved = std::move(out_[v]);
      out_[v].clear();
      for (auto [x, t] : moved) link(u, x, t);
    }
  }

  std::vector<int> parent_;
  std::vector<std::map<Letter, int>> out_;
  std::deque<std::pair<int, int>> pending_;
};

std::vector<std::map<Letter, int>> Folder::finish() {
  const int n = static_cast<int>(parent_.size());
  // Resolve every transition to representatives.
  std::vector<std::map<Letter, int>> adj(n);
  std::vector<bool> alive(n, false);
  for (int s = 0; s < n; ++s) {
    if (find(s) != s) continue;
    alive[s] = true;
    for (auto [x, t] : out_[s]) adj[s][x] = find(t);
  }
  // Trim hanging trees: repeatedly drop non-base states of degree <= 1.
  const int base = find(0);
  std::deque<int> queue;
  for (int s = 0; s < n; ++s)
    if (alive[s] && s != base && adj[s].size() <= 1) queue.push_back(s);
  while (!queue.empty()) {
    int s = queue.front();
    queue.pop_front();
    if (!alive[s] || adj[s].size() > 1) continue;
    alive[s] = false;
    for (auto [x, t] : adj[s]) {
      adj[t].erase(x.inverse());
      if (t != base && alive[t] && adj[t].size() <= 1) queue.push_back(t);
    }
    adj[s].clear();
  }
  // Canonical breadth-first renumbering from the base.
  std::vector<int> id(n, -1);
  std::vector<int> order{base};
  id[base] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (auto [x, t] : adj[order[i]]) {
      if (id[t] < 0) {
        id[t] = static_cast<int>(order.size());
        order.push_back(t);
      }
    }
  }
  std::vector<std::map<Letter, int>> result(order.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    for (auto [x, t] : adj[order[i]]) result[i][x] = id[t];
  return result;
}

}  // namespace

StallingsGraph::StallingsGraph() : out_(1) {}

StallingsGraph StallingsGraph::from_generators(const std::vector<Word>& generators) {
  Folder f;
  const int base = f.add_state();
  for (const Word& g : generators) {
    if (g.empty()) continue;
    int cur = base;
    for (std::size_t i = 0; i < g.size(); ++i) {
      int next = (i + 1 == g.size()) ? base : f.add_state();
      f.add_edge(cur, g[i], next);
      cur = next;
    }
  }
  return StallingsGraph(f.finish());
}

std::optional<int> StallingsGraph::step(int state, Letter x) const {
  const auto& m = out_.at(state);
  auto it = m.find(x);
  if (it == m.end()) return std::nullopt;
  return it->second;
}

std::optional<int> StallingsGraph::read(int state, const Word& w) const {
  for (Letter x : w) {
    auto next = step(state, x);
    if (!next) return std::nullopt;
    state = *next;
  }
  return state;
}

std::size_t StallingsGraph::edge_count() const {
  std::size_t n = 0;
  for (const auto& m : out_)
    for (auto [x, t] : m)
      if (x.sign() > 0) ++n;
  return n;
}

StallingsGraph build_core_graph(const std::vector<Word>& generators) {
  return StallingsGraph::from_generators(generators);
}

bool contains(const StallingsGraph& h, const Word& g) {
  auto end = h.read(h.base(), g);
  return end && *end == h.base();
}

std::vector<Word> enumerate_elements(const StallingsGraph& h, std::size_t max_length) {
  std::vector<Word> found;
  std::vector<Letter> path;
  // Depth-first over reduced paths from the base.
  auto dfs = [&](auto&& self, int state) -> void {
    if (state == h.base()) found.push_back(Word::reduce(path));
    if (path.size() == max_length) return;
    for (auto [x, t] : h.transitions(state)) {
      if (!path.empty() && path.back() == x.inverse()) continue;
      path.push_back(x);
      self(self, t);
      path.pop_back();
    }
  };
  dfs(dfs, h.base());
  std::sort(found.begin(), found.end());
  return found;
}

CosetPosition coset_step(const StallingsGraph& h, const CosetPosition& pos, Letter x) {
  CosetPosition next = pos;
  if (pos.tail.empty()) {
    if (auto t = h.step(pos.state, x)) {
      next.state = *t;
      return next;
    }
    next.tail = Word::letter(x);
    return next;
  }
  WordBuilder b(pos.tail);
  b.push(x);
  next.tail = std::move(b).build();
  return next;
}

CosetPosition coset_of(const StallingsGraph& h, const Word& g) {
  CosetPosition pos{h.base(), {}};
  for (Letter x : g) pos = coset_step(h, pos, x);
  return pos;
}

namespace {

// Walks H·p·c^j for j = 0, 1, 2, ... and returns the first j whose coset is
// `target`. Inside the core the walk is a deterministic sequence over
// finitely many positions; outside the core the tail eventually grows by a
// full copy of c per step (c is cyclically reduced) and never shrinks again.
std::optional<long> first_hit(const StallingsGraph& h, CosetPosition pos, const Word& c,
                              const CosetPosition& target) {
  std::set<int> seen_core;
  for (long j = 0;; ++j) {
    if (pos == target) return j;
    if (pos.tail.empty() && !seen_core.insert(pos.state).second) return std::nullopt;
    const std::size_t before = pos.tail.size();
    const bool was_outside = !pos.tail.empty();
    for (Letter x : c) pos = coset_step(h, pos, x);
    const bool pure_growth = was_outside && pos.tail.size() == before + c.size();
    if (pure_growth && (pos.state != target.state || pos.tail.size() > target.tail.size()))
      return std::nullopt;
  }
}

}  // namespace

std::optional<long> coset_power_membership(const StallingsGraph& h, const Word& p, const Word& c,
                                           const Word& q) {
  if (c.empty()) throw EmptyWordError("coset_power_membership needs a nonempty period");
  if (!is_cyclically_reduced(c))
    throw std::invalid_argument("coset_power_membership needs a cyclically reduced period");
  // [p c^k q] in H  <=>  H p c^k = H q^-1.
  const CosetPosition target = coset_of(h, invert(q));
  const CosetPosition start = coset_of(h, p);
  auto fwd = first_hit(h, start, c, target);
  auto bwd = first_hit(h, start, invert(c), target);
  if (fwd && bwd) return (*fwd <= *bwd) ? *fwd : -*bwd;
  if (fwd) return *fwd;
  if (bwd) return -*bwd;
  return std::nullopt;
}

std::string core_graph_dot(const StallingsGraph& h, const Alphabet& alphabet) {
  std::ostringstream os;
  os << "digraph core {\n";
  os << "  s0 [shape=doublecircle];\n";
  for (int s = 1; s < h.state_count(); ++s) os << "  s" << s << ";\n";
  for (int s = 0; s < h.state_count(); ++s)
    for (auto [x, t] : h.transitions(s))
      if (x.sign() > 0)
        os << "  s" << s << " -> s" << t << " [label=\"" << alphabet.name(x.generator()) << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace fgdyn
