#include "fgdyn/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

#include "fgdyn/errors.hpp"

namespace fgdyn {

// ---------------------------------------------------------------- Alphabet

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw AlphabetError("alphabet must have at least one generator");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw AlphabetError("empty generator name");
    for (char ch : n) {
      if (ch == '^' || ch == ';' || ch == ':' || std::isspace(static_cast<unsigned char>(ch)) ||
          !std::isprint(static_cast<unsigned char>(ch)))
        throw AlphabetError("invalid character in generator name '" + n + "'");
    }
    if (!seen.insert(n).second) throw AlphabetError("duplicate generator name '" + n + "'");
  }
}

Alphabet Alphabet::standard(int rank) {
  if (rank < 1) throw AlphabetError("rank must be positive");
  std::vector<std::string> names;
  for (int g = 0; g < rank; ++g) {
    if (g < 26)
      names.emplace_back(1, static_cast<char>('a' + g));
    else
      names.push_back("x" + std::to_string(g + 1));
  }
  return Alphabet(std::move(names));
}

std::optional<int> Alphabet::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i) + 1;
  return std::nullopt;
}

void Alphabet::check(Letter x) const {
  if (!contains(x))
    throw AlphabetError("letter index " + std::to_string(x.code) + " outside alphabet of rank " +
                        std::to_string(rank()));
}

std::vector<Letter> Alphabet::letters() const {
  std::vector<Letter> out;
  for (int g = 1; g <= rank(); ++g) {
    out.push_back(Letter{g});
    out.push_back(Letter{-g});
  }
  return out;
}

// -------------------------------------------------------------------- Word

bool WordBuilder::push(Letter x) {
  if (!stack_.empty() && stack_.back() == x.inverse()) {
    stack_.pop_back();
    return true;
  }
  stack_.push_back(x);
  return false;
}

void WordBuilder::append(const Word& w) {
  // Cancellation can only happen at the junction; after the first
  // non-cancelling letter the rest of `w` is appended verbatim.
  std::size_t i = 0;
  while (i < w.size() && !stack_.empty() && stack_.back() == w[i].inverse()) {
    stack_.pop_back();
    ++i;
  }
  stack_.insert(stack_.end(), w.begin() + static_cast<std::ptrdiff_t>(i), w.end());
}

void WordBuilder::append_inverse(const Word& w) {
  for (std::size_t i = w.size(); i-- > 0;) push(w[i].inverse());
}

Word Word::reduce(std::span<const Letter> raw) {
  WordBuilder b;
  b.reserve(raw.size());
  for (Letter x : raw) {
    if (x.code == 0) throw AlphabetError("letter code 0 is not a letter");
    b.push(x);
  }
  return std::move(b).build();
}

Word Word::reduce(std::span<const Letter> raw, const Alphabet& alphabet) {
  for (Letter x : raw) alphabet.check(x);
  return reduce(raw);
}

Word Word::of(std::initializer_list<int> codes) {
  std::vector<Letter> raw;
  for (int c : codes) raw.push_back(Letter{c});
  return reduce(raw);
}

Word Word::prefix(std::size_t n) const { return subword(0, std::min(n, size())); }

Word Word::subword(std::size_t pos, std::size_t len) const {
  auto first = letters_.begin() + static_cast<std::ptrdiff_t>(pos);
  return Word(std::vector<Letter>(first, first + static_cast<std::ptrdiff_t>(len)));
}

int Word::max_generator() const {
  int m = 0;
  for (Letter x : letters_) m = std::max(m, x.generator());
  return m;
}

std::strong_ordering operator<=>(const Word& u, const Word& v) {
  if (auto c = u.size() <=> v.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(u.begin(), u.end(), v.begin(), v.end());
}

Word concat(const Word& u, const Word& v) {
  WordBuilder b(u);
  b.append(v);
  return std::move(b).build();
}

Word concat(std::initializer_list<Word> parts) {
  WordBuilder b;
  for (const Word& w : parts) b.append(w);
  return std::move(b).build();
}

Word invert(const Word& u) {
  WordBuilder b;
  b.reserve(u.size());
  b.append_inverse(u);
  return std::move(b).build();
}

Word power(const Word& u, long m) {
  if (m == 0 || u.empty()) return {};
  Word base = m > 0 ? u : invert(u);
  long n = m > 0 ? m : -m;
  // Only the cyclic core is repeated; the conjugator cancels between copies.
  auto [w, c] = cyclic_reduce(base);
  WordBuilder b(w);
  b.reserve(w.size() * 2 + c.size() * static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) b.append(c);
  b.append_inverse(w);
  return std::move(b).build();
}

Word conjugate_word(const Word& u, const Word& g) {
  WordBuilder b(u);
  b.append(g);
  b.append_inverse(u);
  return std::move(b).build();
}

bool is_cyclically_reduced(const Word& u) { return u.size() <= 1 || u.front() != u.back().inverse(); }

CyclicDecomposition cyclic_reduce(const Word& u) {
  if (u.empty()) throw EmptyWordError("the identity has no cyclic core");
  std::size_t i = 0;
  std::size_t j = u.size();
  while (j - i >= 2 && u[i] == u[j - 1].inverse()) {
    ++i;
    --j;
  }
  return {u.prefix(i), u.subword(i, j - i)};
}

PrimitiveRoot primitive_root(const Word& u) {
  auto [w, c] = cyclic_reduce(u);
  const std::size_t n = c.size();
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) periodic = c[i] == c[i - d];
    if (periodic) {
      return {conjugate_word(w, c.prefix(d)), static_cast<int>(n / d)};
    }
  }
  return {u, 1};  // unreachable: d = n always succeeds
}

std::size_t common_prefix_length(std::span<const Letter> u, std::span<const Letter> v) {
  auto [a, b] = std::mismatch(u.begin(), u.end(), v.begin(), v.end());
  return static_cast<std::size_t>(a - u.begin());
}

std::size_t common_prefix_length(const Word& u, const Word& v) {
  return common_prefix_length(u.letters(), v.letters());
}

Word rotate(const Word& c, std::size_t k) {
  if (c.empty()) return c;
  k %= c.size();
  std::vector<Letter> raw(c.begin() + static_cast<std::ptrdiff_t>(k), c.end());
  raw.insert(raw.end(), c.begin(), c.begin() + static_cast<std::ptrdiff_t>(k));
  return Word::reduce(raw);
}

// ------------------------------------------------------------- text format

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  std::vector<Letter> raw;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size()) break;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    std::string_view token = text.substr(i, j - i);
    i = j;

    std::string_view name = token;
    long exponent = 1;
    if (auto caret = token.find('^'); caret != std::string_view::npos) {
      name = token.substr(0, caret);
      std::string_view exp = token.substr(caret + 1);
      if (!exp.empty() && exp.front() == '+') exp.remove_prefix(1);
      auto [ptr, ec] = std::from_chars(exp.data(), exp.data() + exp.size(), exponent);
      if (exp.empty() || ec != std::errc{} || ptr != exp.data() + exp.size())
        throw ParseError("malformed exponent in token '" + std::string(token) + "'");
    }
    auto g = alphabet.find(name);
    if (!g) throw ParseError("unknown symbol '" + std::string(name) + "'");
    Letter x{exponent < 0 ? -*g : *g};
    for (long k = 0; k < (exponent < 0 ? -exponent : exponent); ++k) raw.push_back(x);
  }
  return Word::reduce(raw, alphabet);
}

std::string format_word(const Word& w, const Alphabet& alphabet) {
  std::string out;
  for (Letter x : w) {
    alphabet.check(x);
    if (!out.empty()) out += ' ';
    out += alphabet.name(x.generator());
    if (x.sign() < 0) out += "^-1";
  }
  return out;
}

std::string format_word_compact(const Word& w, const Alphabet& alphabet) {
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    alphabet.check(w[i]);
    if (!out.empty()) out += ' ';
    out += alphabet.name(w[i].generator());
    long run = static_cast<long>(j - i) * w[i].sign();
    if (run != 1) out += "^" + std::to_string(run);
    i = j;
  }
  return out;
}

std::vector<Word> all_reduced_words(int rank, std::size_t max_length) {
  std::vector<Word> out{Word{}};
  std::vector<Word> layer{Word{}};
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::vector<Word> next;
    for (const Word& w : layer) {
      for (int g = 1; g <= rank; ++g) {
        for (int s : {1, -1}) {
          Letter x{s * g};
          if (!w.empty() && w.back() == x.inverse()) continue;
          WordBuilder b(w);
          b.push(x);
          next.push_back(std::move(b).build());
        }
      }
    }
    std::sort(next.begin(), next.end());
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

}  // namespace fgdyn

std::size_t std::hash<fgdyn::Word>::operator()(const fgdyn::Word& w) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto x : w) {
    h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(x.code));
    h *= 1099511628211ull;
  }
  return h;
}
