#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fgdyn/word.hpp"

namespace fgdyn {

/// Folded core graph of a finitely generated subgroup of F_N.
///
/// States are numbered breadth-first from the base state (0), visiting
/// outgoing letters in the order a, a^-1, b, b^-1, ...; two graphs of the
/// same subgroup therefore compare equal with operator==.
class StallingsGraph {
 public:
  /// Graph of the trivial subgroup.
  StallingsGraph();

  /// Folds the wedge of loops spelled by `generators`. Identity generators
  /// are skipped.
  static StallingsGraph from_generators(const std::vector<Word>& generators);

  int state_count() const { return static_cast<int>(out_.size()); }
  int base() const { return 0; }

  /// Target of the `x`-transition out of `state`, if any.
  std::optional<int> step(int state, Letter x) const;
  /// Reads `w` from `state`; nullopt if the path leaves the graph.
  std::optional<int> read(int state, const Word& w) const;
  const std::map<Letter, int>& transitions(int state) const { return out_.at(state); }

  /// Number of positive-letter edges.
  std::size_t edge_count() const;
  /// Free rank of the subgroup: edges - states + 1.
  int rank() const { return static_cast<int>(edge_count()) - state_count() + 1; }

  friend bool operator==(const StallingsGraph&, const StallingsGraph&) = default;

 private:
  explicit StallingsGraph(std::vector<std::map<Letter, int>> out) : out_(std::move(out)) {}

  std::vector<std::map<Letter, int>> out_;
};

StallingsGraph build_core_graph(const std::vector<Word>& generators);

/// True iff `g` reads as a loop at the base state.
bool contains(const StallingsGraph& h, const Word& g);

/// All subgroup elements of length <= max_length, shortlex ordered.
std::vector<Word> enumerate_elements(const StallingsGraph& h, std::size_t max_length);

/// Some k with [p c^k q] in H, preferring the smallest |k| and k > 0 on ties.
/// `c` must be nonempty and cyclically reduced.
std::optional<long> coset_power_membership(const StallingsGraph& h, const Word& p, const Word& c,
                                           const Word& q);

/// Right coset H·g as a position in the Schreier graph of H: a core state
/// plus the reduced tail hanging off the core (empty when inside the core).
struct CosetPosition {
  int state = 0;
  Word tail;
  friend bool operator==(const CosetPosition&, const CosetPosition&) = default;
};

CosetPosition coset_of(const StallingsGraph& h, const Word& g);
/// Coset H·g·x for the coset H·g at `pos`.
CosetPosition coset_step(const StallingsGraph& h, const CosetPosition& pos, Letter x);

/// Positive-letter transitions as labelled DOT edges.
std::string core_graph_dot(const StallingsGraph& h, const Alphabet& alphabet);

}  // namespace fgdyn
