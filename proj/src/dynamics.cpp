#include "fgdyn/dynamics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "fgdyn/errors.hpp"

namespace fgdyn {

void IterationConfig::validate() const {
  if (max_iterations <= 0 || target_prefix == 0 || stability_window <= 0 || max_word_length == 0 ||
      min_repeats <= 0 || period_bound <= 0)
    throw std::invalid_argument("iteration config fields must all be positive");
}

// ------------------------------------------------------------ RationalPoint

RationalPoint RationalPoint::make(const Word& head, const Word& period) {
  auto [w, core] = cyclic_reduce(period);
  Word root = primitive_root(core).root;  // core is cyclically reduced: no conjugator

  const Word joined = concat(head, w);
  std::vector<Letter> h(joined.begin(), joined.end());
  std::vector<Letter> r(root.begin(), root.end());
  auto rotate_left = [&] {
    Letter x = r.front();
    r.erase(r.begin());
    r.push_back(x);
  };
  auto rotate_right = [&] {
    Letter x = r.back();
    r.pop_back();
    r.insert(r.begin(), x);
  };
  // Cancellation between the head and period^inf absorbs head letters.
  while (!h.empty() && h.back() == r.front().inverse()) {
    h.pop_back();
    rotate_left();
  }
  // Shortest head: shift trailing head letters into the period.
  while (!h.empty() && h.back() == r.back()) {
    h.pop_back();
    rotate_right();
  }
  return RationalPoint(Word::reduce(h), Word::reduce(r));
}

RationalPoint RationalPoint::from_element(const Word& u) { return make(Word{}, u); }

Word RationalPoint::fixing_element() const { return conjugate_word(head_, period_); }

Word RationalPoint::prefix(std::size_t n) const {
  std::vector<Letter> out;
  out.reserve(n);
  for (std::size_t i = 0; i < head_.size() && out.size() < n; ++i) out.push_back(head_[i]);
  for (std::size_t i = 0; out.size() < n; ++i) out.push_back(period_[i % period_.size()]);
  return Word::reduce(out);
}

// --------------------------------------------------------------- LimitPoint

LimitPoint::LimitPoint(PrefixApprox a) : value_(std::move(a)) {
  if (approx().prefix.size() < approx().certified_length)
    throw std::invalid_argument("prefix shorter than its certified length");
}

std::size_t LimitPoint::certified_length() const {
  return is_rational() ? std::numeric_limits<std::size_t>::max() : approx().certified_length;
}

Word LimitPoint::prefix(std::size_t n) const {
  return is_rational() ? rational().prefix(n) : approx().prefix.prefix(n);
}

std::optional<RationalPoint> LimitResult::rational() const {
  if (!is_boundary() || !boundary().point.is_rational()) return std::nullopt;
  return boundary().point.rational();
}

// ---------------------------------------------------------------- iteration

Word iterate(const AutoPair& phi, const Word& g, long p, std::size_t max_word_length) {
  const Endomorphism& e = p >= 0 ? phi.forward() : phi.backward();
  const long n = p >= 0 ? p : -p;
  Word cur = g;
  for (long i = 1; i <= n; ++i) {
    try {
      cur = e.apply_bounded(cur, max_word_length);
    } catch (const GrowthOverflow& ex) {
      throw GrowthOverflow("iterate: word-length budget " + std::to_string(max_word_length) +
                               " exceeded at iteration " + std::to_string(i),
                           i, ex.length());
    }
  }
  return cur;
}

std::optional<RationalPoint> recognize_rational(const Word& prefix, const IterationConfig& cfg,
                                                const std::function<bool(const RationalPoint&)>& accept) {
  if (prefix.size() < cfg.target_prefix)
    throw std::invalid_argument("recognize_rational: prefix shorter than target_prefix");
  const std::size_t len = prefix.size();
  const std::size_t reps = static_cast<std::size_t>(cfg.min_repeats);
  const std::size_t budget = len / reps;  // bound on |head| + |period|
  for (std::size_t clen = 1; clen <= budget; ++clen) {
    // Shortest head such that prefix[i] == prefix[i + clen] for all i >= head.
    std::size_t head = len - clen;
    const std::size_t floor = budget - clen;
    while (head > 0 && prefix[head - 1] == prefix[head - 1 + clen]) {
      --head;
    }
    if (head > floor) continue;
    if ((len - head) / clen < reps) continue;
    auto candidate = RationalPoint::make(prefix.prefix(head), prefix.subword(head, clen));
    if (!accept || accept(candidate)) return candidate;
  }
  return std::nullopt;
}

LimitResult omega_limit(const AutoPair& phi, const Word& g, const IterationConfig& cfg) {
  cfg.validate();
  if (phi.rank() < 2) throw AlphabetError("boundary dynamics needs rank >= 2");
  const Endomorphism& e = phi.forward();
  Word cur;
  try {
    cur = e.apply_bounded(g, cfg.max_word_length);
  } catch (const GrowthOverflow&) {
    return {NotConverged{Word{}, 1, "word-length budget exceeded at iteration 1"}};
  }
  if (cur == g) return {FixedElement{g}};

  std::size_t plen = common_prefix_length(g, cur);
  int streak = 0;
  for (int it = 2; it <= cfg.max_iterations; ++it) {
    Word next;
    try {
      next = e.apply_bounded(cur, cfg.max_word_length);
    } catch (const GrowthOverflow&) {
      return {NotConverged{cur.prefix(plen), it,
                           "word-length budget " + std::to_string(cfg.max_word_length) +
                               " exceeded at iteration " + std::to_string(it)}};
    }
    const std::size_t next_plen = common_prefix_length(cur, next);
    streak = next_plen >= plen ? streak + 1 : 0;
    plen = next_plen;
    cur = std::move(next);

    if (plen >= cfg.target_prefix && streak >= cfg.stability_window) {
      Word certified = cur.prefix(plen);
      // A rational limit u^inf is fixed iff u is (u primitive), so a
      // candidate is confirmed exactly rather than by prefix comparison.
      auto rational = recognize_rational(certified, cfg, [&](const RationalPoint& x) {
        Word u = x.fixing_element();
        return e.apply(u) == u;
      });
      if (rational) return {Boundary{LimitPoint(*rational), it}};
      return {Boundary{LimitPoint(PrefixApprox{certified, plen}), it}};
    }
  }
  return {NotConverged{cur.prefix(plen), cfg.max_iterations,
                       "common prefix of consecutive iterates did not stabilize at " +
                           std::to_string(cfg.target_prefix) + " letters within " +
                           std::to_string(cfg.max_iterations) + " iterations"}};
}

LimitResult omega_limit_rational(const AutoPair& phi, const RationalPoint& x, const IterationConfig& cfg) {
  const Word u = x.fixing_element();
  if (phi.forward().apply(u) == u) return {Boundary{LimitPoint(x), 0}};
  return omega_limit(phi, u, cfg);
}

ParabolicReport detect_parabolic(const AutoPair& phi, const Word& seed, const IterationConfig& cfg) {
  if (seed.empty()) throw EmptyWordError("detect_parabolic needs a non-identity seed");
  ParabolicReport report{seed,          omega_limit(phi, seed, cfg), omega_limit(phi.inverse(), seed, cfg),
                         Verdict::Inconclusive, std::nullopt, Certification::None, {}};

  if (report.forward.is_fixed()) {
    report.verdict = Verdict::NotParabolic;
    report.reason = "seed is fixed";
    return report;
  }
  if (!report.forward.is_boundary() || !report.backward.is_boundary()) {
    report.verdict = Verdict::Inconclusive;
    report.reason = "a limit did not converge";
    return report;
  }
  const LimitPoint& fwd = report.forward.boundary().point;
  const LimitPoint& bwd = report.backward.boundary().point;
  if (fwd.is_rational() && bwd.is_rational()) {
    report.certification = Certification::Exact;
    if (fwd.rational() == bwd.rational()) {
      report.verdict = Verdict::Parabolic;
      report.point = fwd.rational();
      report.reason = "forward and backward limits coincide";
    } else {
      report.verdict = Verdict::NotParabolic;
      report.reason = "forward limit differs from backward limit";
    }
    return report;
  }
  // At least one side is only known through a prefix.
  const std::size_t n = std::min(fwd.certified_length(), bwd.certified_length());
  const std::size_t agree = common_prefix_length(fwd.prefix(n), bwd.prefix(n));
  report.certification = Certification::PrefixCertified;
  if (agree >= cfg.target_prefix && agree == n) {
    report.verdict = Verdict::Parabolic;
    if (fwd.is_rational()) report.point = fwd.rational();
    if (bwd.is_rational()) report.point = bwd.rational();
    report.reason = "forward and backward limits agree on " + std::to_string(agree) + " certified letters";
  } else {
    report.verdict = Verdict::NotParabolic;
    report.reason = "forward and backward limits differ at letter " + std::to_string(agree + 1);
  }
  return report;
}

// ------------------------------------------------------------------ growth

namespace {

struct LineFit {
  double slope = 0;
  double residual = 0;
};

LineFit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double denom = n * sxx - sx * sx;
  LineFit fit;
  fit.slope = denom == 0 ? 0 : (n * sxy - sx * sy) / denom;
  const double intercept = (sy - fit.slope * sx) / n;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double e = y[i] - (intercept + fit.slope * x[i]);
    fit.residual += e * e;
  }
  return fit;
}

}  // namespace

GrowthClass growth_classify(const AutoPair& phi, const Word& g, int p_max, std::size_t max_word_length) {
  if (p_max < 8) throw std::invalid_argument("growth_classify needs p_max >= 8");
  GrowthClass out;
  Word cur = g;
  for (int p = 1; p <= p_max; ++p) {
    try {
      cur = phi.forward().apply_bounded(cur, max_word_length);
    } catch (const GrowthOverflow&) {
      break;  // classify on the samples we have
    }
    out.lengths.push_back(cur.size());
  }
  const std::size_t n = out.lengths.size();
  if (n < 4) throw std::runtime_error("growth_classify: fewer than 4 samples before overflow");

  std::vector<double> logp, p, logl;
  bool constant = true;
  for (std::size_t i = n / 2; i < n; ++i) {
    const double len = static_cast<double>(std::max<std::size_t>(out.lengths[i], 1));
    logp.push_back(std::log(static_cast<double>(i + 1)));
    p.push_back(static_cast<double>(i + 1));
    logl.push_back(std::log(len));
    constant = constant && out.lengths[i] == out.lengths[n / 2];
  }
  if (constant) return out;

  const LineFit poly = least_squares(logp, logl);
  const LineFit expo = least_squares(p, logl);
  out.degree = std::round(poly.slope * 100.0) / 100.0;
  out.rate = expo.slope;
  out.polynomial_residual = poly.residual;
  out.exponential_residual = expo.residual;
  out.kind = expo.residual < poly.residual ? GrowthClass::Kind::Exponential : GrowthClass::Kind::Polynomial;
  return out;
}

SplittingCheck verify_splitting(const AutoPair& phi, const std::vector<Word>& bricks, int p_max,
                                std::size_t max_word_length) {
  if (bricks.size() < 2) throw std::invalid_argument("a splitting needs at least two bricks");
  for (const Word& b : bricks)
    if (b.empty()) throw std::invalid_argument("splitting bricks must be non-identity");

  std::vector<Word> images = bricks;
  for (int p = 0; p <= p_max; ++p) {
    if (p > 0)
      for (Word& w : images) w = phi.forward().apply_bounded(w, max_word_length);
    for (std::size_t i = 0; i + 1 < images.size(); ++i)
      if (images[i].back() == images[i + 1].front().inverse())
        return {false, std::make_pair(p, static_cast<int>(i + 1))};
  }
  return {};
}

namespace {

// Smallest j in [1, bound] with phi^j fixing the limit, or nullopt.
std::optional<int> orbit_period(const AutoPair& phi, const LimitResult& limit, int bound) {
  const Endomorphism& e = phi.forward();
  if (limit.is_fixed() || limit.rational()) {
    const Word start = limit.is_fixed() ? limit.fixed().element : limit.rational()->fixing_element();
    Word cur = start;
    for (int j = 1; j <= bound; ++j) {
      cur = e.apply(cur);
      if (cur == start) return j;
    }
    return std::nullopt;
  }
  // Prefix approximation: compare the image of the certified prefix with
  // itself on half its length.
  const PrefixApprox& a = limit.boundary().point.approx();
  const Word start = a.prefix.prefix(a.certified_length);
  Word cur = start;
  for (int j = 1; j <= bound; ++j) {
    cur = e.apply(cur);
    if (common_prefix_length(cur, start) >= start.size() / 2) return j;
  }
  return std::nullopt;
}

}  // namespace

std::optional<int> detect_boundary_period(const AutoPair& phi, const Word& seed, int bound,
                                          const IterationConfig& cfg) {
  for (int q = 1; q <= bound; ++q) {
    const AutoPair phi_q = power(phi, q);
    const LimitResult limit = omega_limit(phi_q, seed, cfg);
    if (!limit.converged()) continue;
    auto period = orbit_period(phi, limit, bound);
    if (period && *period > 1) return period;
    // The whole orbit converges to a fixed point, so every power does too.
    if (q == 1) return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace fgdyn
