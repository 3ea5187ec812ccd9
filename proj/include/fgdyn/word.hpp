#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fgdyn {

/// A basis element or its inverse. `code` is +g for a_g and -g for a_g^{-1},
/// with g counted from 1.
struct Letter {
  std::int32_t code = 0;

  constexpr int generator() const { return code < 0 ? -code : code; }
  constexpr int sign() const { return code < 0 ? -1 : 1; }
  constexpr Letter inverse() const { return Letter{-code}; }
  /// Position in the order a, a^-1, b, b^-1, ...
  constexpr int order_key() const { return 2 * (generator() - 1) + (code < 0 ? 1 : 0); }

  friend constexpr bool operator==(Letter, Letter) = default;
  friend constexpr std::strong_ordering operator<=>(Letter x, Letter y) {
    return x.order_key() <=> y.order_key();
  }
};

/// Ordered generator names. Rank 1 is representable but rejected by every
/// dynamics entry point.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> names);

  /// a, b, c, ... (then x7, x8, ... past 26).
  static Alphabet standard(int rank);

  int rank() const { return static_cast<int>(names_.size()); }
  const std::string& name(int generator) const { return names_.at(generator - 1); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> find(std::string_view name) const;

  bool contains(Letter x) const { return x.code != 0 && x.generator() <= rank(); }
  /// Throws AlphabetError if `x` is not a letter of this alphabet.
  void check(Letter x) const;

  /// All 2N letters in canonical order.
  std::vector<Letter> letters() const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> names_;
};

class WordBuilder;

/// A freely reduced word. The reduced invariant is established at
/// construction and cannot be broken afterwards.
class Word {
 public:
  Word() = default;

  /// Free reduction of an arbitrary letter sequence.
  static Word reduce(std::span<const Letter> raw);
  /// As above, additionally rejecting letters outside `alphabet`.
  static Word reduce(std::span<const Letter> raw, const Alphabet& alphabet);
  /// Convenience: signed generator codes, e.g. {2, -1} is b a^-1.
  static Word of(std::initializer_list<int> codes);
  static Word letter(Letter x) { return Word(std::vector<Letter>{x}); }

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }
  std::span<const Letter> letters() const { return letters_; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  /// Subwords of a reduced word are reduced, so these never re-reduce.
  Word prefix(std::size_t n) const;
  Word subword(std::size_t pos, std::size_t len) const;
  Word suffix_from(std::size_t pos) const { return subword(pos, size() - pos); }

  /// Largest generator index occurring, 0 for the identity.
  int max_generator() const;

  friend bool operator==(const Word&, const Word&) = default;
  /// Shortlex order (length first, then letter order).
  friend std::strong_ordering operator<=>(const Word& u, const Word& v);

 private:
  explicit Word(std::vector<Letter> reduced) : letters_(std::move(reduced)) {}
  friend class WordBuilder;

  std::vector<Letter> letters_;
};

/// Stack-based free reduction: push letters in order, cancelling against the
/// top. Amortized O(1) per letter.
class WordBuilder {
 public:
  WordBuilder() = default;
  explicit WordBuilder(Word start) : stack_(std::move(start.letters_)) {}

  void reserve(std::size_t n) { stack_.reserve(n); }
  /// Returns true if `x` cancelled the previous letter.
  bool push(Letter x);
  void append(const Word& w);
  void append_inverse(const Word& w);
  std::size_t size() const { return stack_.size(); }
  Word build() && { return Word(std::move(stack_)); }

 private:
  std::vector<Letter> stack_;
};

Word concat(const Word& u, const Word& v);
Word concat(std::initializer_list<Word> parts);
Word invert(const Word& u);
/// [u^m] for any integer m.
Word power(const Word& u, long m);
/// [u g u^-1]
Word conjugate_word(const Word& u, const Word& g);

bool is_cyclically_reduced(const Word& u);

/// u = [conjugator core conjugator^-1] with core cyclically reduced.
struct CyclicDecomposition {
  Word conjugator;
  Word core;
};
CyclicDecomposition cyclic_reduce(const Word& u);

struct PrimitiveRoot {
  Word root;
  int power = 1;
};
/// u = [root^power] with power maximal.
PrimitiveRoot primitive_root(const Word& u);

/// Length of the longest common prefix (the Gromov product based at 1).
std::size_t common_prefix_length(const Word& u, const Word& v);
std::size_t common_prefix_length(std::span<const Letter> u, std::span<const Letter> v);

/// Rotation of a cyclically reduced word: letters [k..) followed by [0..k).
Word rotate(const Word& c, std::size_t k);

/// Whitespace-separated tokens `name` or `name^int`; "" is the identity.
Word parse_word(std::string_view text, const Alphabet& alphabet);
/// One token per letter: "a a b^-1". Round-trips through parse_word.
std::string format_word(const Word& w, const Alphabet& alphabet);
/// Runs of equal letters collapsed: "a^2 b^-1".
std::string format_word_compact(const Word& w, const Alphabet& alphabet);

/// Every reduced word over the first `rank` generators of length <= max_length,
/// in shortlex order, identity first.
std::vector<Word> all_reduced_words(int rank, std::size_t max_length);

}  // namespace fgdyn

template <>
struct std::hash<fgdyn::Word> {
  std::size_t operator()(const fgdyn::Word& w) const noexcept;
};
