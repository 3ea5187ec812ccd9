#include "fgdyn/families.hpp"

#include <charconv>
#include <stdexcept>

#include "fgdyn/errors.hpp"

namespace fgdyn {

namespace {

AutoPair from_text(const Alphabet& alpha, const std::vector<std::string>& fwd, const std::vector<std::string>& bwd) {
  std::vector<Word> f;
  std::vector<Word> b;
  for (const auto& s : fwd) f.push_back(parse_word(s, alpha));
  for (const auto& s : bwd) b.push_back(parse_word(s, alpha));
  return verify_pair(Endomorphism(alpha, std::move(f)), Endomorphism(alpha, std::move(b)));
}

std::string pow_a(long e) { return e == 0 ? "" : "a^" + std::to_string(e); }

Word gen(int g) { return Word::letter(Letter{g}); }

LimitPoint rational(const Word& head, const Word& period) { return RationalPoint::make(head, period); }

long parse_long(const std::map<std::string, std::string>& params, const std::string& key,
                std::optional<long> fallback = std::nullopt) {
  auto it = params.find(key);
  if (it == params.end()) {
    if (fallback) return *fallback;
    throw ParseError("missing parameter '" + key + "'");
  }
  long value = 0;
  const auto& s = it->second;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw ParseError("parameter '" + key + "' is not an integer: '" + s + "'");
  return value;
}

}  // namespace

AutoPair make_phi_k(long k) {
  if (k < 0) throw std::invalid_argument("phi_k needs k >= 0");
  const auto alpha = Alphabet::standard(4);
  return from_text(alpha, {"a", "b a", "c " + pow_a(k + 1), "d c"},
                   {"a", "b a^-1", "c " + pow_a(-k - 1), "d " + pow_a(k + 1) + " c^-1"});
}

AutoPair make_alpha_k(long k) {
  if (k < 0) throw std::invalid_argument("alpha_k needs k >= 0");
  const auto alpha = Alphabet::standard(5);
  return from_text(alpha, {"a", "b a", "c " + pow_a(k + 1), "d c", "e"},
                   {"a", "b a^-1", "c " + pow_a(-k - 1), "d " + pow_a(k + 1) + " c^-1", "e"});
}

AutoPair make_beta(int rank, const AutoPair& theta) {
  if (rank < 6) throw std::invalid_argument("beta needs rank >= 6, got " + std::to_string(rank));
  if (theta.rank() != 2) throw std::invalid_argument("beta: theta must act on F_2");
  const auto alpha = Alphabet::standard(rank);
  const AutoPair phi = make_phi_k(1);
  auto shift = [](const Word& w) {
    std::vector<Letter> out;
    for (Letter x : w) out.push_back(Letter{x.code + (x.code > 0 ? 4 : -4)});
    return Word::reduce(out);
  };
  std::vector<Word> f;
  std::vector<Word> b;
  for (int g = 1; g <= rank; ++g) {
    if (g <= 4) {
      f.push_back(phi.forward().image(g));
      b.push_back(phi.backward().image(g));
    } else if (g <= 6) {
      f.push_back(shift(theta.forward().image(g - 4)));
      b.push_back(shift(theta.backward().image(g - 4)));
    } else {
      f.push_back(gen(g));
      b.push_back(gen(g));
    }
  }
  return verify_pair(Endomorphism(alpha, std::move(f)), Endomorphism(alpha, std::move(b)));
}

AutoPair make_twist(long n, long k) {
  if (n == 0) throw std::invalid_argument("twist needs n != 0");
  const auto alpha = Alphabet::standard(2);
  return from_text(alpha, {"a", pow_a(k) + " b " + pow_a(n - k)}, {"a", pow_a(-k) + " b " + pow_a(k - n)});
}

AutoPair make_sigma() {
  const auto alpha = Alphabet::standard(2);
  return from_text(alpha, {"a^-1", "b^-1"}, {"a^-1", "b^-1"});
}

AutoPair stock_theta(int index) {
  const auto alpha = Alphabet::standard(2);
  const AutoPair right = from_text(alpha, {"a b", "b"}, {"a b^-1", "b"});
  const AutoPair left = from_text(alpha, {"a", "b a"}, {"a", "b a^-1"});
  switch (index) {
    case 1:
      return compose(right, left);
    case 2:
      return compose(right, power(left, 2));
    default:
      throw std::invalid_argument("stock theta index must be 1 or 2");
  }
}

IntMatrix phi_k_matrix_power(long k, long p) {
  IntMatrix m = IntMatrix::identity(4);
  m.at(1, 2) = p;
  m.at(1, 3) = checked::mul(k + 1, p);
  m.at(1, 4) = checked::mul(k + 1, checked::mul(p, p - 1)) / 2;
  m.at(3, 4) = p;
  return m;
}

std::optional<IntMatrix> sample_hyperbolic_matrix(long squarefree, long max_trace) {
  for (long t = 3; t <= max_trace; ++t) {
    if (squarefree_part(checked::sub(checked::mul(t, t), 4)) == squarefree)
      return IntMatrix{{1, t - 2}, {1, t - 1}};
  }
  return std::nullopt;
}

std::string to_string(TwistCase c) {
  switch (c) {
    case TwistCase::TwoComponent:
      return "two-component";
    case TwistCase::NorthSouth:
      return "north-south";
    case TwistCase::SemiNorthSouth:
      return "semi-north-south";
  }
  return "?";
}

TwistCase classify_twist(long n, long k) {
  if (n == 0) throw std::invalid_argument("twist needs n != 0");
  const long s = checked::mul(k, n - k);
  if (s == 0) return TwistCase::TwoComponent;
  return s < 0 ? TwistCase::NorthSouth : TwistCase::SemiNorthSouth;
}

std::optional<std::pair<Word, long>> twist_reduce(const Word& u, long n, std::size_t search_bound) {
  if (n == 0) throw std::invalid_argument("twist needs n != 0");
  if (u.max_generator() > 2) throw AlphabetError("twist_reduce works over F_2");
  const AutoPair delta_n = make_twist(n, 0);
  for (const Word& w : all_reduced_words(2, search_bound)) {
    const Word r = concat({invert(w), u, delta_n.forward().apply(w)});
    bool power_of_a = true;
    for (Letter x : r) power_of_a = power_of_a && x.generator() == 1;
    if (power_of_a) return std::pair{w, r.empty() ? 0L : static_cast<long>(r.size()) * r.front().sign()};
  }
  return std::nullopt;
}

Word x_k_prefix(long k, bool attracting, std::size_t n) {
  // X_k^+ = d c (c a^(j(k+1)))_j>=1,  X_k^- = d (a^(j(k+1)) c^-1)_j>=1
  std::vector<Letter> out{Letter{4}};
  if (attracting) out.push_back(Letter{3});
  for (long j = 1; out.size() < n; ++j) {
    if (attracting) out.push_back(Letter{3});
    for (long i = 0; i < j * (k + 1); ++i) out.push_back(Letter{1});
    if (!attracting) out.push_back(Letter{-3});
  }
  out.resize(n);
  return Word::reduce(out);
}

Family make_family(std::string_view spec) {
  const auto colon = spec.find(':');
  std::string name(spec.substr(0, colon));
  std::map<std::string, std::string> params;
  if (colon != std::string_view::npos) {
    std::string_view rest = spec.substr(colon + 1);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      std::string_view item = rest.substr(0, comma);
      const auto eq = item.find('=');
      if (eq == std::string_view::npos || eq == 0)
        throw ParseError("family parameter must be key=value, got '" + std::string(item) + "'");
      params[std::string(item.substr(0, eq))] = std::string(item.substr(eq + 1));
      rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    }
  }
  auto word = [](const std::string& s, int rank) { return parse_word(s, Alphabet::standard(rank)); };
  const Word a = gen(1), b = gen(2), c = gen(3);
  const Word a_inv = invert(a);

  if (name == "phi_k" || name == "alpha_k") {
    const long k = parse_long(params, "k", 1);
    const bool alpha = name == "alpha_k";
    const int rank = alpha ? 5 : 4;
    std::vector<Word> fix{a, conjugate_word(b, a), conjugate_word(c, a)};
    if (alpha) fix.push_back(gen(5));
    std::vector<Word> seeds;
    for (const char* s : {"b", "b^-1", "c", "c^-1", "d", "d^-1", "b c^-1", "b d^-1"}) seeds.push_back(word(s, rank));
    return Family{name, params, alpha ? make_alpha_k(k) : make_phi_k(k), fix, word("b d^-1", rank),
                  RationalPoint::make(b, a_inv), seeds,
                  "rotationless: all limits found are fixed (checked by detect_boundary_period)"};
  }
  if (name == "beta") {
    const int rank = static_cast<int>(parse_long(params, "N", 6));
    const int index = static_cast<int>(parse_long(params, "theta", 1));
    std::vector<Word> fix{a, conjugate_word(b, a), conjugate_word(c, a)};
    for (int g = 7; g <= rank; ++g) fix.push_back(gen(g));
    return Family{name, params, make_beta(rank, stock_theta(index)), fix, word("b d^-1", rank),
                  RationalPoint::make(b, a_inv), {}, "asserted by the user; not checked"};
  }
  if (name == "delta_n" || name == "twist") {
    const long n = parse_long(params, "n", 1);
    const long k = name == "twist" ? parse_long(params, "k", 0) : 0;
    std::vector<Word> fix{a};
    if (k == 0) fix.push_back(conjugate_word(b, a));
    if (k == n) fix.push_back(conjugate_word(invert(b), a));
    return Family{name, params, make_twist(n, k), fix, std::nullopt, std::nullopt, default_seeds(2),
                  "rotationless: a^(+-inf) and the b-translates are fixed"};
  }
  if (name == "sigma") {
    return Family{name, params, make_sigma(), {}, std::nullopt, std::nullopt, default_seeds(2),
                  "not rotationless: sigma swaps a^inf and a^-inf"};
  }
  if (name == "inner") {
    const int rank = static_cast<int>(parse_long(params, "N", 2));
    const auto it = params.find("u");
    const Word u = word(it == params.end() ? "a" : it->second, rank);
    if (u.empty()) throw std::invalid_argument("inner needs u != 1");
    return Family{name, params, inner(Alphabet::standard(rank), u), {primitive_root(u).root}, std::nullopt,
                  std::nullopt, default_seeds(rank), "rotationless: North-South with fixed poles"};
  }
  if (name == "theta") {
    const int index = static_cast<int>(parse_long(params, "i", 1));
    return Family{name, params, stock_theta(index), {}, std::nullopt, std::nullopt, default_seeds(2),
                  "asserted by the user; not checked"};
  }
  if (name == "identity") {
    const int rank = static_cast<int>(parse_long(params, "N", 2));
    std::vector<Word> fix;
    for (int g = 1; g <= rank; ++g) fix.push_back(gen(g));
    return Family{name, params, AutoPair::identity(Alphabet::standard(rank)), fix, std::nullopt, std::nullopt,
                  {}, "identity"};
  }
  throw std::invalid_argument("unknown family '" + name + "'");
}

GraphTemplate expected_graph(const Family& family) {
  const Word a = gen(1), b = gen(2), c = gen(3), d = gen(4);
  const Word a_inv = invert(a), b_inv = invert(b);
  const Word empty;
  GraphTemplate t;

  if (family.name == "phi_k") {
    const long k = parse_long(family.params, "k", 1);
    t.title = "phi_k, k=" + std::to_string(k);
    t.vertices = {rational(b, a_inv), rational(b, a),   PrefixApprox{x_k_prefix(k, true, 60), 60},
                  PrefixApprox{x_k_prefix(k, false, 60), 60}, rational(empty, a), rational(empty, a_inv),
                  rational(c, a_inv), rational(c, a)};
    t.edges = {{0, 0, {concat(b, invert(d))}}, {0, 1, {b}},        {1, 0, {concat(b, invert(c))}},
               {3, 2, {d}},                    {4, 5, {b_inv}},    {6, 7, {c}},
               {6, 5, {invert(d)}}};
    return t;
  }
  if (family.name == "delta_n" || family.name == "twist") {
    const long n = parse_long(family.params, "n", 1);
    const long k = family.name == "twist" ? parse_long(family.params, "k", 0) : 0;
    // (i_{a^k} o delta^n)^-1 = i_{a^-k} o delta^-n: negative n reverses every edge.
    const long m = n > 0 ? n : -n;
    const long j = n > 0 ? k : -k;
    t.title = "twist n=" + std::to_string(n) + ", k=" + std::to_string(k) + " (" + to_string(classify_twist(n, k)) + ")";
    const LimitPoint plus = rational(empty, a), minus = rational(empty, a_inv);
    if (j == 0) {
      t.vertices = {rational(b, a_inv), rational(b, a), plus, minus};
      t.edges = {{0, 1, {b}}, {2, 3, {b_inv}}};
    } else if (j == m) {
      t.vertices = {rational(b_inv, a), rational(b_inv, a_inv), minus, plus};
      t.edges = {{0, 1, {b_inv}}, {2, 3, {b}}};
    } else if (j > m) {
      t.vertices = {minus, plus};
      t.edges = {{0, 1, {b, b_inv}}};
    } else if (j < 0) {
      t.vertices = {plus, minus};
      t.edges = {{0, 1, {b, b_inv}}};
    } else {
      t.vertices = {minus, plus};
      t.edges = {{0, 1, {b}}, {1, 0, {b_inv}}};
    }
    if (n < 0)
      for (auto& e : t.edges) std::swap(e.source, e.target);
    return t;
  }
  if (family.name == "inner") {
    const int rank = static_cast<int>(parse_long(family.params, "N", 2));
    const auto it = family.params.find("u");
    const Word u = parse_word(it == family.params.end() ? "a" : it->second, Alphabet::standard(rank));
    t.title = "inner";
    t.vertices = {RationalPoint::from_element(invert(u)), RationalPoint::from_element(u)};
    t.edges = {{0, 1, {}}};
    return t;
  }
  throw std::invalid_argument("no expected graph for family '" + family.name + "'");
}

}  // namespace fgdyn
