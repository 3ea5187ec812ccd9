#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fgdyn/dynamics.hpp"
#include "fgdyn/subgroup.hpp"

namespace fgdyn {

struct IsoglossResult {
  bool isogloss = false;
  /// Decided by bounded search over short subgroup elements rather than exactly.
  bool approximate = false;
  /// Some g in H with X = gY, when found.
  std::optional<Word> witness;

  explicit operator bool() const { return isogloss; }
};

/// X ~ Y iff X = gY for some g in H. Exact for two rational points; a
/// bounded search over elements of H of length <= search_bound otherwise.
IsoglossResult isogloss(const StallingsGraph& h, const LimitPoint& x, const LimitPoint& y,
                        std::size_t search_bound = 8);

struct FixedCheck {
  bool ok = true;
  /// Index into the generator list of the first one not fixed.
  std::optional<std::size_t> first_failure;
};

FixedCheck verify_fixed_generators(const AutoPair& phi, const std::vector<Word>& generators);

struct IsoglossyClass {
  /// First-discovered member.
  LimitPoint representative;
  std::vector<LimitPoint> members;
  std::string name;
  /// Some member was attached through an approximate comparison.
  bool approximate = false;
};

struct GraphEdge {
  int source = 0;
  int target = 0;
  /// Seeds whose backward and forward limits give this edge, smallest first.
  std::vector<Word> labels;
};

/// Sample-based under-approximation of the dynamics graph: vertices are
/// isoglossy classes of observed limit points, edges run from the class of
/// the backward limit of a seed to the class of its forward limit.
struct DynamicsGraph {
  Alphabet alphabet = Alphabet::standard(2);
  std::vector<IsoglossyClass> vertices;
  std::vector<GraphEdge> edges;
  std::vector<std::string> diagnostics;
  bool under_approximation = true;

  std::size_t loop_count() const;
  int weakly_connected_components() const;
  std::optional<int> find_vertex(const LimitPoint& p, const StallingsGraph& h) const;
};

/// Every non-identity reduced word of length <= 2.
std::vector<Word> default_seeds(int rank);

/// Throws std::invalid_argument if some entry of `fixed_generators` is not fixed.
DynamicsGraph build_graph(const AutoPair& phi, const std::vector<Word>& fixed_generators,
                          const std::vector<Word>& seeds, const IterationConfig& cfg = {},
                          std::size_t search_bound = 8);

struct ParabolicLoop {
  int vertex = 0;
  std::vector<Word> labels;
};
std::optional<ParabolicLoop> has_parabolic_loop(const DynamicsGraph& g);

/// Display name: "b (a^-1)^inf" for rational points, the first 12 letters
/// followed by "…" for prefix approximations.
std::string point_name(const LimitPoint& p, const Alphabet& alphabet);

/// DOT digraph; byte-identical for identical graphs.
std::string emit_dot(const DynamicsGraph& g);

/// Expected shape of a dynamics graph, as drawn for a known family.
struct GraphTemplate {
  std::string title;
  std::vector<LimitPoint> vertices;
  struct Edge {
    int source = 0;
    int target = 0;
    /// Labels that must be among the graph edge's labels (may be empty).
    std::vector<Word> labels;
  };
  std::vector<Edge> edges;
};

struct TemplateMatch {
  bool matches = true;
  std::vector<std::string> problems;
};

/// Matches graph vertices to template vertices up to isoglossy, then
/// compares edges and required labels.
TemplateMatch match_template(const DynamicsGraph& g, const GraphTemplate& t, const StallingsGraph& h,
                             std::size_t search_bound = 8);

}  // namespace fgdyn
