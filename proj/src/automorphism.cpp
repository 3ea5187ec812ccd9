#include "fgdyn/automorphism.hpp"

#include "fgdyn/errors.hpp"

namespace fgdyn {

Endomorphism::Endomorphism(Alphabet alphabet, std::vector<Word> images)
    : alphabet_(std::move(alphabet)), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != alphabet_.rank())
    throw AlphabetError("endomorphism needs one image per generator (" +
                        std::to_string(alphabet_.rank()) + "), got " + std::to_string(images_.size()));
  for (const Word& w : images_)
    for (Letter x : w) alphabet_.check(x);
}

Endomorphism Endomorphism::identity(const Alphabet& alphabet) {
  std::vector<Word> images;
  for (int g = 1; g <= alphabet.rank(); ++g) images.push_back(Word::letter(Letter{g}));
  return Endomorphism(alphabet, std::move(images));
}

Word Endomorphism::apply(const Word& g) const {
  WordBuilder b;
  for (Letter x : g) {
    alphabet_.check(x);
    const Word& img = images_[x.generator() - 1];
    if (x.sign() > 0)
      b.append(img);
    else
      b.append_inverse(img);
  }
  return std::move(b).build();
}

Word Endomorphism::apply_bounded(const Word& g, std::size_t max_length) const {
  // The length of [e(g)] is only known after reducing, but a prefix that is
  // already reduced can shrink by at most the number of letters still to come.
  std::size_t remaining = 0;
  for (Letter x : g) {
    alphabet_.check(x);
    remaining += images_[x.generator() - 1].size();
  }
  WordBuilder b;
  for (Letter x : g) {
    const Word& img = images_[x.generator() - 1];
    if (x.sign() > 0)
      b.append(img);
    else
      b.append_inverse(img);
    remaining -= img.size();
    if (b.size() > max_length + remaining)
      throw GrowthOverflow("image exceeds word-length budget of " + std::to_string(max_length), 0,
                           b.size());
  }
  return std::move(b).build();
}

Word apply(const Endomorphism& e, const Word& g) { return e.apply(g); }

Endomorphism compose(const Endomorphism& outer, const Endomorphism& inner) {
  if (!(outer.alphabet() == inner.alphabet())) throw AlphabetError("compose: alphabet mismatch");
  std::vector<Word> images;
  images.reserve(inner.images().size());
  for (const Word& w : inner.images()) images.push_back(outer.apply(w));
  return Endomorphism(outer.alphabet(), std::move(images));
}

AutoPair AutoPair::identity(const Alphabet& alphabet) {
  auto id = Endomorphism::identity(alphabet);
  return AutoPair(id, id);
}

AutoPair verify_pair(const Endomorphism& forward, const Endomorphism& backward) {
  if (!(forward.alphabet() == backward.alphabet())) throw AlphabetError("verify_pair: alphabet mismatch");
  const Alphabet& alpha = forward.alphabet();
  for (int g = 1; g <= alpha.rank(); ++g) {
    const Word x = Word::letter(Letter{g});
    if (backward.apply(forward.apply(x)) != x || forward.apply(backward.apply(x)) != x)
      throw NotInverseError("maps are not mutually inverse at generator " + alpha.name(g), g);
  }
  return AutoPair(forward, backward);
}

AutoPair compose(const AutoPair& outer, const AutoPair& inner) {
  return AutoPair(compose(outer.forward(), inner.forward()), compose(inner.backward(), outer.backward()));
}

AutoPair inner(const Alphabet& alphabet, const Word& u) {
  for (Letter x : u) alphabet.check(x);
  std::vector<Word> fwd;
  std::vector<Word> bwd;
  const Word u_inv = invert(u);
  for (int g = 1; g <= alphabet.rank(); ++g) {
    const Word x = Word::letter(Letter{g});
    fwd.push_back(conjugate_word(u, x));
    bwd.push_back(conjugate_word(u_inv, x));
  }
  return verify_pair(Endomorphism(alphabet, std::move(fwd)), Endomorphism(alphabet, std::move(bwd)));
}

AutoPair conjugate(const AutoPair& phi, const AutoPair& psi) {
  return compose(psi, compose(phi, psi.inverse()));
}

AutoPair power(const AutoPair& phi, long p) {
  AutoPair base = p >= 0 ? phi : phi.inverse();
  unsigned long n = p >= 0 ? static_cast<unsigned long>(p) : static_cast<unsigned long>(-p);
  AutoPair result = AutoPair::identity(phi.alphabet());
  while (n > 0) {
    if (n & 1) result = compose(result, base);
    n >>= 1;
    if (n > 0) base = compose(base, base);
  }
  return result;
}

IntMatrix abelianize(const Endomorphism& e) {
  IntMatrix m(e.rank());
  for (int j = 1; j <= e.rank(); ++j)
    for (Letter x : e.image(j)) m.at(x.generator(), j) = checked::add(m.at(x.generator(), j), x.sign());
  return m;
}

}  // namespace fgdyn
