#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "fgdyn/automorphism.hpp"
#include "fgdyn/word.hpp"

namespace fgdyn {

/// Budgets for approximating limits by finite prefixes.
struct IterationConfig {
  int max_iterations = 300;
  std::size_t target_prefix = 200;
  /// Consecutive steps over which the common prefix must not shrink.
  int stability_window = 5;
  std::size_t max_word_length = 1'000'000;
  int min_repeats = 3;
  int period_bound = 6;

  /// Throws std::invalid_argument unless every field is positive.
  void validate() const;
};

/// A rational boundary point head·period^inf in canonical form: the period is
/// primitive and cyclically reduced, the head does not cancel against it, and
/// the head is as short as possible (its last letter differs from the last
/// letter of the period). Two rational points are equal iff their canonical
/// forms are equal.
class RationalPoint {
 public:
  /// Canonical form of head·period^inf. Throws EmptyWordError for an empty period.
  static RationalPoint make(const Word& head, const Word& period);
  /// u^inf for u != 1.
  static RationalPoint from_element(const Word& u);

  const Word& head() const { return head_; }
  const Word& period() const { return period_; }

  /// The primitive element [head period head^-1]; its stabilizer is exactly
  /// this point's stabilizer, and the point is fixed by an automorphism iff
  /// this element is.
  Word fixing_element() const;

  /// First n letters of the infinite word.
  Word prefix(std::size_t n) const;

  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;

 private:
  RationalPoint(Word h, Word c) : head_(std::move(h)), period_(std::move(c)) {}
  Word head_;
  Word period_;
};

/// Finite-prefix approximation of a possibly irrational limit point.
struct PrefixApprox {
  Word prefix;
  std::size_t certified_length = 0;
  friend bool operator==(const PrefixApprox&, const PrefixApprox&) = default;
};

class LimitPoint {
 public:
  LimitPoint(RationalPoint r) : value_(std::move(r)) {}  // NOLINT(implicit)
  LimitPoint(PrefixApprox a);                            // NOLINT(implicit)

  bool is_rational() const { return std::holds_alternative<RationalPoint>(value_); }
  const RationalPoint& rational() const { return std::get<RationalPoint>(value_); }
  const PrefixApprox& approx() const { return std::get<PrefixApprox>(value_); }

  /// Letters known to be correct: unbounded for rational points.
  std::size_t certified_length() const;
  /// Up to n letters (a PrefixApprox may supply fewer).
  Word prefix(std::size_t n) const;

  friend bool operator==(const LimitPoint&, const LimitPoint&) = default;

 private:
  std::variant<RationalPoint, PrefixApprox> value_;
};

struct FixedElement {
  Word element;
};
struct Boundary {
  LimitPoint point;
  int iterations_used = 0;
};
struct NotConverged {
  Word best_prefix;
  int iterations_used = 0;
  std::string diagnostics;
};

struct LimitResult {
  std::variant<FixedElement, Boundary, NotConverged> value;

  bool is_fixed() const { return std::holds_alternative<FixedElement>(value); }
  bool is_boundary() const { return std::holds_alternative<Boundary>(value); }
  bool converged() const { return !std::holds_alternative<NotConverged>(value); }
  const FixedElement& fixed() const { return std::get<FixedElement>(value); }
  const Boundary& boundary() const { return std::get<Boundary>(value); }
  const NotConverged& not_converged() const { return std::get<NotConverged>(value); }
  /// Rational boundary limit, if that is what was found.
  std::optional<RationalPoint> rational() const;
};

enum class Verdict { Parabolic, NotParabolic, Inconclusive };
/// Exact: both limits are rational and compared in canonical form.
enum class Certification { Exact, PrefixCertified, None };

struct ParabolicReport {
  Word seed;
  LimitResult forward;
  LimitResult backward;
  Verdict verdict = Verdict::Inconclusive;
  std::optional<RationalPoint> point;
  Certification certification = Certification::None;
  std::string reason;
};

/// [phi^p(g)], exactly. Throws GrowthOverflow (carrying the iteration
/// reached) when an iterate exceeds max_word_length.
Word iterate(const AutoPair& phi, const Word& g, long p, std::size_t max_word_length = 1'000'000);

/// Eventually periodic decomposition of `prefix` with the shortest period,
/// then the shortest head, subject to |head| + |period| <= |prefix| / min_repeats
/// and at least min_repeats full periods. `accept` can veto candidates, in
/// which case longer periods are tried.
std::optional<RationalPoint> recognize_rational(
    const Word& prefix, const IterationConfig& cfg,
    const std::function<bool(const RationalPoint&)>& accept = {});

/// omega-limit of an element by prefix stabilization of its forward orbit.
LimitResult omega_limit(const AutoPair& phi, const Word& g, const IterationConfig& cfg = {});

/// omega-limit of head·period^inf, through the element [head period head^-1].
LimitResult omega_limit_rational(const AutoPair& phi, const RationalPoint& x,
                                 const IterationConfig& cfg = {});

ParabolicReport detect_parabolic(const AutoPair& phi, const Word& seed, const IterationConfig& cfg = {});

struct GrowthClass {
  enum class Kind { Bounded, Polynomial, Exponential };
  Kind kind = Kind::Bounded;
  /// Log-log slope, rounded to two decimals.
  double degree = 0;
  /// Log-linear slope (natural log per iteration).
  double rate = 0;
  double polynomial_residual = 0;
  double exponential_residual = 0;
  /// |phi^p(g)| for p = 1, 2, ... (stops early on growth overflow).
  std::vector<std::size_t> lengths;
};

/// Least-squares fits on the second half of the samples. Needs p_max >= 8.
GrowthClass growth_classify(const AutoPair& phi, const Word& g, int p_max,
                            std::size_t max_word_length = 1'000'000);

struct SplittingCheck {
  bool holds = true;
  /// (p, i): cancellation between the images of bricks i and i+1 (1-based) under phi^p.
  std::optional<std::pair<int, int>> witness;
};

/// Bounded certificate: no cancellation between the images of adjacent
/// bricks under phi^p for every 0 <= p <= p_max.
SplittingCheck verify_splitting(const AutoPair& phi, const std::vector<Word>& bricks, int p_max,
                                std::size_t max_word_length = 1'000'000);

/// Heuristic rotationlessness probe: the smallest orbit period q in (1, bound]
/// of an omega-limit of some phi^q at `seed`, if any.
std::optional<int> detect_boundary_period(const AutoPair& phi, const Word& seed, int bound,
                                          const IterationConfig& cfg = {});

}  // namespace fgdyn
