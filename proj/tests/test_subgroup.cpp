#include <doctest.h>

#include <algorithm>

#include "fgdyn/subgroup.hpp"
#include "oracles.hpp"

using namespace fgdyn;
using oracle::word;

namespace {

const std::vector<Word> fix_phi = {word("a"), word("baB"), word("caC")};

// Smallest |k| (positive on ties) in [-bound, bound] with [p c^k q] in the
// set, or nullopt.
std::optional<long> scan_powers(const std::set<oracle::Raw>& members, const Word& p, const Word& c, const Word& q,
                                long bound) {
  for (long m = 0; m <= bound; ++m) {
    for (long k : {m, -m}) {
      const Word ck = power(c, k);
      if (members.count(oracle::raw(concat({p, ck, q})))) return k;
    }
  }
  return std::nullopt;
}

}  // namespace

TEST_SUITE("subgroup") {
  TEST_CASE("folding by hand") {
    // Wedge of loops a and b·a·b^-1 folds to: base --a--> base, base --b--> s, s --a--> s.
    const auto h = build_core_graph({word("a"), word("baB")});
    CHECK(h.state_count() == 2);
    CHECK(h.step(0, Letter{1}) == 0);
    CHECK(h.step(0, Letter{2}) == 1);
    CHECK(h.step(1, Letter{1}) == 1);
    CHECK(h.step(1, Letter{-2}) == 0);
    CHECK_FALSE(h.step(1, Letter{2}).has_value());
    CHECK(h.rank() == 2);

    const auto trivial = build_core_graph({});
    CHECK(trivial.state_count() == 1);
    CHECK(trivial.transitions(0).empty());
    CHECK(build_core_graph({Word{}}) == trivial);

    const auto fix = build_core_graph(fix_phi);
    CHECK(fix.state_count() == 3);
    CHECK(fix.rank() == 3);

    // <a^2, a^3> = <a>
    CHECK(build_core_graph({word("aa"), word("aaa")}) == build_core_graph({word("a")}));
  }

  TEST_CASE("core trimming and inverse symmetry") {
    // b a b^-1 alone: the hanging b edge is part of the core only through the base.
    const auto h = build_core_graph({word("baB")});
    CHECK(h.state_count() == 2);
    for (int s = 0; s < h.state_count(); ++s)
      for (const auto& [x, t] : h.transitions(s)) CHECK(h.step(t, x.inverse()) == s);
  }

  TEST_CASE("contains") {
    const auto fix = build_core_graph(fix_phi);
    CHECK(contains(fix, word("baaaBA")));
    CHECK(contains(fix, Word{}));
    CHECK_FALSE(contains(fix, word("d")));
    CHECK_FALSE(contains(fix, word("b")));
    CHECK(contains(fix, word("bAB")));
  }

  TEST_CASE("enumerate_elements") {
    const auto a = build_core_graph({word("a")});
    const auto els = enumerate_elements(a, 2);
    CHECK(els.size() == 5);
    for (const char* s : {"", "a", "A", "aa", "AA"}) CHECK(std::count(els.begin(), els.end(), word(s)) == 1);
    CHECK(enumerate_elements(build_core_graph({}), 5) == std::vector<Word>{Word{}});
    const auto delta_fix = enumerate_elements(build_core_graph({word("a"), word("baB")}), 3);
    CHECK(std::count(delta_fix.begin(), delta_fix.end(), word("baB")) == 1);

    // Against the product oracle: {a, bab^-1, cac^-1} is Nielsen reduced, so
    // partial products never get shorter than 1 letter per factor.
    const auto fix = build_core_graph(fix_phi);
    const auto members = oracle::products({oracle::letters("a"), oracle::letters("baB"), oracle::letters("caC")}, 9);
    std::set<oracle::Raw> expected;
    for (const auto& r : members)
      if (r.size() <= 6) expected.insert(r);
    std::set<oracle::Raw> got;
    for (const auto& w : enumerate_elements(fix, 6)) got.insert(oracle::raw(w));
    CHECK(got == expected);
  }

  TEST_CASE("coset_power_membership") {
    const auto a = build_core_graph({word("a")});
    CHECK(coset_power_membership(a, Word{}, word("a"), word("AAA")) == 0L);
    CHECK(coset_power_membership(a, word("b"), word("a"), word("B")) == 0L);
    CHECK_FALSE(coset_power_membership(a, word("b"), word("a"), Word{}).has_value());
    const auto fix = build_core_graph(fix_phi);
    CHECK(coset_power_membership(fix, word("b"), word("A"), word("B")) == 0L);

    CHECK(coset_power_membership(build_core_graph({word("aaab")}), Word{}, word("a"), word("b")) == 3L);
    // b a^(k+1) b^-1 in <b a^2 b^-1> for k = -1 and k = 1: positive wins the tie.
    CHECK(coset_power_membership(build_core_graph({word("baaB")}), word("b"), word("a"), word("aB")) == 1L);
    CHECK_THROWS(coset_power_membership(a, Word{}, Word{}, Word{}));
    CHECK_THROWS(coset_power_membership(a, Word{}, word("abA"), Word{}));
  }

  TEST_CASE("coset_power_membership against a power scan") {
    std::mt19937_64 rng(5);
    int found = 0;
    for (int trial = 0; trial < 150; ++trial) {
      std::vector<oracle::Raw> gens;
      for (int g = 0; g < 2; ++g) gens.push_back(oracle::random_reduced(rng, 2, 1 + (trial + g) % 3));
      const auto h = build_core_graph({oracle::word(gens[0]), oracle::word(gens[1])});
      const auto members = oracle::bounded_products(gens, 7);
      const Word p = oracle::word(oracle::random_reduced(rng, 2, trial % 3));
      Word c = oracle::word(oracle::random_reduced(rng, 2, 1 + trial % 2));
      if (!is_cyclically_reduced(c)) continue;
      const Word q = oracle::word(oracle::random_reduced(rng, 2, trial % 3));
      const auto k = coset_power_membership(h, p, c, q);
      if (k) {
        ++found;
        const Word ck = power(c, *k);
        CHECK(contains(h, concat({p, ck, q})));
      }
      // Anything the bounded oracle finds, the exact query must find too,
      // with |k| no larger.
      if (auto scan = scan_powers(members, p, c, q, 6)) {
        REQUIRE(k.has_value());
        CHECK(std::abs(*k) <= std::abs(*scan));
      }
    }
    CHECK(found > 10);
  }

  TEST_CASE("order independence and closure") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<Word> gens;
      for (int g = 0; g < 3; ++g) gens.push_back(oracle::word(oracle::random_reduced(rng, 3, 1 + (trial + g) % 4)));
      const auto h = build_core_graph(gens);
      auto perm = gens;
      std::sort(perm.begin(), perm.end());
      do {
        CHECK(build_core_graph(perm) == h);
      } while (std::next_permutation(perm.begin(), perm.end()));

      // Products of at most 3 generators are members.
      std::vector<oracle::Raw> raw_gens;
      for (const auto& g : gens) raw_gens.push_back(oracle::raw(g));
      const auto products = oracle::bounded_products(raw_gens, 3);
      for (const auto& r : products) CHECK(contains(h, oracle::word(r)));

      const auto els = enumerate_elements(h, 5);
      for (std::size_t i = 0; i < els.size() && i < 12; ++i) {
        CHECK(contains(h, invert(els[i])));
        for (std::size_t j = 0; j < els.size() && j < 12; ++j) CHECK(contains(h, concat(els[i], els[j])));
      }
    }
  }

  TEST_CASE("core graph DOT") {
    const auto dot = core_graph_dot(build_core_graph({word("a"), word("baB")}), Alphabet::standard(2));
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot == core_graph_dot(build_core_graph({word("baB"), word("a")}), Alphabet::standard(2)));
  }
}
