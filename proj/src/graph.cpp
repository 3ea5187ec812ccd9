#include "fgdyn/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fgdyn {

namespace {

std::optional<std::size_t> rotation_offset(const Word& c, const Word& target) {
  if (c.size() != target.size()) return std::nullopt;
  for (std::size_t s = 0; s < c.size(); ++s)
    if (rotate(c, s) == target) return s;
  return std::nullopt;
}

IsoglossResult isogloss_rational(const StallingsGraph& h, const RationalPoint& x, const RationalPoint& y) {
  // x = p c^inf, y = p' c'^inf. With c = s t and c' = t s, x = p s (c')^inf,
  // so x = g y iff g = p c^k s p'^-1 for some k.
  auto offset = rotation_offset(x.period(), y.period());
  if (!offset) return {};
  const Word s = x.period().prefix(*offset);
  const Word q = concat(s, invert(y.head()));
  auto k = coset_power_membership(h, x.head(), x.period(), q);
  if (!k) return {};
  const Word ck = power(x.period(), *k);
  return {true, false, concat({x.head(), ck, q})};
}

}  // namespace

IsoglossResult isogloss(const StallingsGraph& h, const LimitPoint& x, const LimitPoint& y,
                        std::size_t search_bound) {
  if (x.is_rational() && y.is_rational()) return isogloss_rational(h, x.rational(), y.rational());

  std::size_t nx = x.certified_length();
  std::size_t ny = y.certified_length();
  if (x.is_rational()) nx = ny + search_bound;
  if (y.is_rational()) ny = nx + search_bound;
  const Word xp = x.prefix(nx);
  const Word yp = y.prefix(ny);
  for (const Word& g : enumerate_elements(h, search_bound)) {
    if (ny <= g.size()) continue;
    // Up to |g| letters of y's prefix may cancel against g.
    const std::size_t need = std::min(nx, ny - g.size());
    if (common_prefix_length(concat(g, yp), xp) >= need) return {true, true, g};
  }
  return {false, true, std::nullopt};
}

FixedCheck verify_fixed_generators(const AutoPair& phi, const std::vector<Word>& generators) {
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (phi.forward().apply(generators[i]) != generators[i]) return {false, i};
  return {};
}

std::size_t DynamicsGraph::loop_count() const {
  return static_cast<std::size_t>(
      std::count_if(edges.begin(), edges.end(), [](const GraphEdge& e) { return e.source == e.target; }));
}

int DynamicsGraph::weakly_connected_components() const {
  std::vector<int> parent(vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& e : edges) parent[find(e.source)] = find(e.target);
  int count = 0;
  for (std::size_t v = 0; v < vertices.size(); ++v) count += find(static_cast<int>(v)) == static_cast<int>(v);
  return count;
}

std::optional<int> DynamicsGraph::find_vertex(const LimitPoint& p, const StallingsGraph& h) const {
  for (std::size_t v = 0; v < vertices.size(); ++v)
    if (isogloss(h, vertices[v].representative, p)) return static_cast<int>(v);
  return std::nullopt;
}

std::vector<Word> default_seeds(int rank) {
  auto words = all_reduced_words(rank, 2);
  words.erase(words.begin());  // identity
  return words;
}

std::string point_name(const LimitPoint& p, const Alphabet& alphabet) {
  if (p.is_rational()) {
    const auto& r = p.rational();
    std::string head = format_word_compact(r.head(), alphabet);
    return (head.empty() ? "" : head + " ") + "(" + format_word_compact(r.period(), alphabet) + ")^inf";
  }
  return format_word_compact(p.approx().prefix.prefix(12), alphabet) + "…";
}

DynamicsGraph build_graph(const AutoPair& phi, const std::vector<Word>& fixed_generators,
                          const std::vector<Word>& seeds, const IterationConfig& cfg,
                          std::size_t search_bound) {
  if (auto check = verify_fixed_generators(phi, fixed_generators); !check.ok)
    throw std::invalid_argument("fixed-subgroup generator " + std::to_string(*check.first_failure + 1) + " (" +
                                format_word(fixed_generators[*check.first_failure], phi.alphabet()) +
                                ") is not fixed");
  const StallingsGraph h = build_core_graph(fixed_generators);
  const AutoPair phi_inv = phi.inverse();

  DynamicsGraph g;
  g.alphabet = phi.alphabet();
  std::map<std::pair<int, int>, std::vector<Word>> merged;

  auto class_of = [&](const LimitPoint& p) {
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
      auto iso = isogloss(h, g.vertices[v].representative, p, search_bound);
      if (iso) {
        g.vertices[v].members.push_back(p);
        g.vertices[v].approximate = g.vertices[v].approximate || iso.approximate;
        return static_cast<int>(v);
      }
    }
    g.vertices.push_back({p, {p}, point_name(p, g.alphabet), !p.is_rational()});
    return static_cast<int>(g.vertices.size() - 1);
  };

  for (const Word& seed : seeds) {
    if (seed.empty()) continue;
    const std::string seed_text = format_word(seed, g.alphabet);
    if (phi.forward().apply(seed) == seed) {
      g.diagnostics.push_back("seed '" + seed_text + "' is fixed; skipped");
      continue;
    }
    const LimitResult fwd = omega_limit(phi, seed, cfg);
    const LimitResult bwd = omega_limit(phi_inv, seed, cfg);
    if (!fwd.is_boundary() || !bwd.is_boundary()) {
      std::string why = !fwd.is_boundary() && !fwd.is_fixed() ? fwd.not_converged().diagnostics
                        : !bwd.is_fixed() && !bwd.is_boundary() ? bwd.not_converged().diagnostics
                                                                 : "limit is an element";
      g.diagnostics.push_back("seed '" + seed_text + "' unresolved: " + why);
      continue;
    }
    const int source = class_of(bwd.boundary().point);
    const int target = class_of(fwd.boundary().point);
    merged[{source, target}].push_back(seed);
  }

  // Deterministic layout: vertices by name, edges by endpoint names.
  std::vector<int> order(g.vertices.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.vertices[a].name < g.vertices[b].name; });
  std::vector<int> rank(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);
  std::vector<IsoglossyClass> sorted;
  for (int v : order) sorted.push_back(std::move(g.vertices[v]));
  g.vertices = std::move(sorted);

  for (auto& [ends, labels] : merged) {
    std::sort(labels.begin(), labels.end(), [&](const Word& a, const Word& b) {
      return format_word(a, g.alphabet) < format_word(b, g.alphabet);
    });
    g.edges.push_back({rank[ends.first], rank[ends.second], std::move(labels)});
  }
  std::sort(g.edges.begin(), g.edges.end(), [](const GraphEdge& a, const GraphEdge& b) {
    return std::pair(a.source, a.target) < std::pair(b.source, b.target);
  });
  return g;
}

std::optional<ParabolicLoop> has_parabolic_loop(const DynamicsGraph& g) {
  for (const auto& e : g.edges)
    if (e.source == e.target) return ParabolicLoop{e.source, e.labels};
  return std::nullopt;
}

std::string emit_dot(const DynamicsGraph& g) {
  std::ostringstream os;
  os << "digraph dynamics {\n";
  os << "  // sample-based under-approximation\n";
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    os << "  v" << v << " [label=\"" << g.vertices[v].name << "\"";
    if (g.vertices[v].approximate) os << ", style=dashed";
    os << "];\n";
  }
  for (const auto& e : g.edges) {
    os << "  v" << e.source << " -> v" << e.target << " [label=\"";
    for (std::size_t i = 0; i < e.labels.size(); ++i)
      os << (i ? ", " : "") << format_word_compact(e.labels[i], g.alphabet);
    os << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

TemplateMatch match_template(const DynamicsGraph& g, const GraphTemplate& t, const StallingsGraph& h,
                             std::size_t search_bound) {
  TemplateMatch m;
  auto fail = [&](std::string s) {
    m.matches = false;
    m.problems.push_back(std::move(s));
  };
  if (g.vertices.size() != t.vertices.size())
    fail("vertex count " + std::to_string(g.vertices.size()) + " != expected " + std::to_string(t.vertices.size()));
  if (g.edges.size() != t.edges.size())
    fail("edge count " + std::to_string(g.edges.size()) + " != expected " + std::to_string(t.edges.size()));

  // template vertex -> graph vertex
  std::vector<int> to_graph(t.vertices.size(), -1);
  std::vector<bool> used(g.vertices.size(), false);
  for (std::size_t i = 0; i < t.vertices.size(); ++i) {
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
      if (used[v]) continue;
      if (isogloss(h, g.vertices[v].representative, t.vertices[i], search_bound)) {
        to_graph[i] = static_cast<int>(v);
        used[v] = true;
        break;
      }
    }
    if (to_graph[i] < 0) fail("no graph vertex matches expected " + point_name(t.vertices[i], g.alphabet));
  }
  if (!m.matches) return m;

  for (const auto& te : t.edges) {
    const int s = to_graph[te.source];
    const int d = to_graph[te.target];
    auto it = std::find_if(g.edges.begin(), g.edges.end(),
                           [&](const GraphEdge& e) { return e.source == s && e.target == d; });
    const std::string desc = point_name(t.vertices[te.source], g.alphabet) + " -> " +
                             point_name(t.vertices[te.target], g.alphabet);
    if (it == g.edges.end()) {
      fail("missing edge " + desc);
      continue;
    }
    for (const Word& label : te.labels)
      if (std::find(it->labels.begin(), it->labels.end(), label) == it->labels.end())
        fail("edge " + desc + " lacks label " + format_word(label, g.alphabet));
  }
  return m;
}

}  // namespace fgdyn
