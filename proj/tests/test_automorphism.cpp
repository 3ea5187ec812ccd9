#include <doctest.h>

#include <cmath>

#include "fgdyn/automorphism.hpp"
#include "fgdyn/errors.hpp"
#include "fgdyn/families.hpp"
#include "fgdyn/matrix.hpp"
#include "oracles.hpp"

using namespace fgdyn;
using oracle::word;

namespace {

const Alphabet F2 = Alphabet::standard(2);
const Alphabet F4 = Alphabet::standard(4);

AutoPair pair_of(const Alphabet& alpha, std::vector<std::string> fwd, std::vector<std::string> bwd) {
  std::vector<Word> f, b;
  for (const auto& s : fwd) f.push_back(word(s));
  for (const auto& s : bwd) b.push_back(word(s));
  return verify_pair(Endomorphism(alpha, f), Endomorphism(alpha, b));
}

// Inverse-pair check by brute force: both compositions fix random words.
void check_inverse_law(const AutoPair& phi, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto f = oracle::images(phi.forward());
  const auto b = oracle::images(phi.backward());
  for (int i = 0; i < 50; ++i) {
    const auto g = oracle::random_reduced(rng, phi.rank(), i % 10);
    CHECK(oracle::apply(b, oracle::apply(f, g)) == g);
    CHECK(oracle::apply(f, oracle::apply(b, g)) == g);
  }
}

}  // namespace

TEST_SUITE("automorphism") {
  TEST_CASE("apply") {
    const AutoPair phi = make_phi_k(1);
    CHECK(phi.forward().apply(word("bD")) == word("baCD"));
    CHECK(phi.forward().apply(word("baCD")) == word("bCCD"));
    CHECK(phi.backward().apply(word("bD")) == word("bAcAAD"));
    CHECK_THROWS_AS(phi.forward().apply(word("e")), AlphabetError);
  }

  TEST_CASE("homomorphism law against substitution oracle") {
    const AutoPair phi = make_phi_k(3);
    const auto images = oracle::images(phi.forward());
    std::mt19937_64 rng(3);
    for (int i = 0; i < 300; ++i) {
      const Word u = oracle::word(oracle::random_reduced(rng, 4, i % 9));
      const Word v = oracle::word(oracle::random_reduced(rng, 4, i % 7));
      CHECK(phi.forward().apply(concat(u, v)) == concat(phi.forward().apply(u), phi.forward().apply(v)));
      CHECK(oracle::raw(phi.forward().apply(u)) == oracle::apply(images, oracle::raw(u)));
      CHECK(phi.backward().apply(phi.forward().apply(u)) == u);
    }
  }

  TEST_CASE("verify_pair") {
    CHECK_NOTHROW(pair_of(F4, {"a", "ba", "caa", "dc"}, {"a", "bA", "cAA", "daaC"}));
    CHECK(AutoPair::identity(F2) == pair_of(F2, {"a", "b"}, {"a", "b"}));
    try {
      pair_of(F2, {"a", "ba"}, {"a", "ba"});
      FAIL("expected NotInverseError");
    } catch (const NotInverseError& e) {
      CHECK(e.generator() == 2);
    }
    CHECK_THROWS_AS(Endomorphism(F2, {word("a")}), AlphabetError);
    CHECK_THROWS_AS(Endomorphism(F2, {word("a"), word("c")}), AlphabetError);
  }

  TEST_CASE("compose") {
    const AutoPair phi = make_phi_k(1);
    const auto id = compose(phi.forward(), phi.backward());
    CHECK(id == Endomorphism::identity(F4));
    CHECK(compose(Endomorphism::identity(F4), phi.forward()) == phi.forward());
    for (long n : {1L, 2L, 3L})
      for (long k = -2; k <= n + 2; ++k) {
        const AutoPair s = make_sigma();
        CHECK(compose(s, compose(make_twist(n, k), s)) == make_twist(n, n - k));
      }
  }

  TEST_CASE("inner") {
    CHECK(inner(F2, word("a")).forward().apply(word("b")) == word("abA"));
    CHECK(inner(F2, Word{}) == AutoPair::identity(F2));
    for (long k = -3; k <= 3; ++k)
      for (long n : {-2L, 1L, 3L}) {
        const AutoPair t = compose(inner(F2, power(word("a"), k)), make_twist(n, 0));
        const Word ak = power(word("a"), k), ank = power(word("a"), n - k);
        CHECK(t.forward().image(2) == concat({ak, word("b"), ank}));
        CHECK(t == make_twist(n, k));
      }
    std::mt19937_64 rng(8);
    const Word u = word("aaB");
    const AutoPair iu = inner(Alphabet::standard(3), u);
    for (int i = 0; i < 100; ++i) {
      const auto g = oracle::random_reduced(rng, 3, i % 8);
      CHECK(oracle::raw(iu.forward().apply(oracle::word(g))) ==
            oracle::cat(oracle::cat(oracle::raw(u), g), oracle::inverse(oracle::raw(u))));
    }
  }

  TEST_CASE("conjugate") {
    const AutoPair phi = make_phi_k(2);
    CHECK(conjugate(phi, AutoPair::identity(F4)) == phi);
    const AutoPair sigma = make_sigma();
    for (long n = -3; n <= 3; ++n) {
      if (n == 0) continue;
      for (long k = -3; k <= n + 3; ++k) CHECK(conjugate(make_twist(n, k), sigma) == make_twist(n, n - k));
    }
    const AutoPair psi = make_phi_k(1);
    const Word u = word("bD");
    CHECK(conjugate(inner(F4, u), psi) == inner(F4, psi.forward().apply(u)));
  }

  TEST_CASE("power") {
    const AutoPair phi = make_phi_k(1);
    CHECK(power(phi, 2).forward().image(4) == word("dccaa"));
    CHECK(power(phi, -1) == phi.inverse());
    CHECK(power(phi, 0) == AutoPair::identity(F4));
    const AutoPair delta = make_twist(1, 0);
    for (long n = 1; n <= 10; ++n) CHECK(power(delta, n).forward().image(2) == concat(word("b"), power(word("a"), n)));
    const auto f = oracle::images(phi.forward());
    const auto b = oracle::images(phi.backward());
    std::mt19937_64 rng(4);
    for (long p = -4; p <= 4; ++p) {
      const auto g = oracle::random_reduced(rng, 4, 6);
      CHECK(oracle::raw(power(phi, p).forward().apply(oracle::word(g))) == oracle::iterate(f, b, g, p));
    }
  }

  TEST_CASE("families are inverse pairs") {
    for (long k = 0; k <= 10; ++k) {
      check_inverse_law(make_phi_k(k), 100 + k);
      check_inverse_law(make_alpha_k(k), 200 + k);
    }
    for (long n = -3; n <= 3; ++n)
      for (long k = -5; k <= 5; ++k)
        if (n != 0) check_inverse_law(make_twist(n, k), 300);
    check_inverse_law(make_sigma(), 1);
    check_inverse_law(stock_theta(1), 2);
    check_inverse_law(stock_theta(2), 3);
    check_inverse_law(make_beta(7, stock_theta(2)), 4);
  }

  TEST_CASE("abelianize") {
    for (long k = 0; k <= 4; ++k) {
      const IntMatrix m = abelianize(make_phi_k(k).forward());
      IntMatrix expected = IntMatrix::identity(4);
      expected.at(1, 2) = 1;
      expected.at(1, 3) = k + 1;
      expected.at(3, 4) = 1;
      CHECK(m == expected);
      CHECK(determinant(m) == 1);
    }
    CHECK(abelianize(Endomorphism::identity(F4)) == IntMatrix::identity(4));
    // phi_1^2(d) = d c c a^2
    CHECK(matrix_power(abelianize(make_phi_k(1).forward()), 2).at(1, 4) == 2);

    // Functoriality, including powers.
    const AutoPair phi = make_phi_k(2);
    const AutoPair psi = conjugate(make_phi_k(1), make_phi_k(3).inverse());
    CHECK(abelianize(compose(phi.forward(), psi.forward())) ==
          matrix_mul(abelianize(phi.forward()), abelianize(psi.forward())));
    for (unsigned long p = 0; p <= 8; ++p)
      CHECK(abelianize(power(phi, static_cast<long>(p)).forward()) == matrix_power(abelianize(phi.forward()), p));
    CHECK(abelianize(stock_theta(1).forward()) == IntMatrix{{1, 1}, {1, 2}});
    CHECK(abelianize(stock_theta(2).forward()) == IntMatrix{{1, 2}, {1, 3}});
  }

  TEST_CASE("matrix arithmetic") {
    CHECK(matrix_power(IntMatrix{{2, 1}, {1, 1}}, 0) == IntMatrix::identity(2));
    CHECK(matrix_power(IntMatrix{{1, 1}, {1, 0}}, 10) == IntMatrix{{89, 55}, {55, 34}});
    CHECK(determinant(IntMatrix{{2, 1}, {1, 1}}) == 1);
    CHECK(determinant(IntMatrix{{0, 1, 2}, {1, 0, 3}, {4, -3, 8}}) == -2);
    CHECK(determinant(IntMatrix{{1, 2}, {2, 4}}) == 0);
    CHECK_THROWS_AS(matrix_power(IntMatrix{{3, 0}, {0, 3}}, 60), OverflowError);
    CHECK_THROWS_AS(matrix_mul(IntMatrix::identity(2), IntMatrix::identity(3)), std::invalid_argument);
  }

  TEST_CASE("dilatation_info") {
    auto d = dilatation_info(IntMatrix{{2, 1}, {1, 1}});
    CHECK(d.trace == 3);
    CHECK(d.discriminant == 5);
    CHECK(d.squarefree_part == 5);
    CHECK(d.dilatation() == doctest::Approx((3 + std::sqrt(5.0)) / 2));
    d = dilatation_info(IntMatrix{{3, 1}, {2, 1}});
    CHECK(d.trace == 4);
    CHECK(d.discriminant == 12);
    CHECK(d.squarefree_part == 3);
    CHECK_THROWS_AS(dilatation_info(IntMatrix{{1, 1}, {0, 1}}), NotHyperbolicError);
    CHECK_THROWS_AS(dilatation_info(IntMatrix{{2, 1}, {1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(dilatation_info(IntMatrix::identity(3)), std::invalid_argument);
    CHECK(squarefree_part(72) == 2);
    CHECK(squarefree_part(1) == 1);
  }
}
