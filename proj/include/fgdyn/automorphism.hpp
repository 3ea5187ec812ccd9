#pragma once

#include <vector>

#include "fgdyn/matrix.hpp"
#include "fgdyn/word.hpp"

namespace fgdyn {

/// An endomorphism of F_N given by the images of the generators.
class Endomorphism {
 public:
  /// Images are checked against the alphabet; one image per generator.
  Endomorphism(Alphabet alphabet, std::vector<Word> images);

  static Endomorphism identity(const Alphabet& alphabet);

  const Alphabet& alphabet() const { return alphabet_; }
  int rank() const { return alphabet_.rank(); }
  const Word& image(int generator) const { return images_.at(generator - 1); }
  const std::vector<Word>& images() const { return images_; }

  /// [e(g)]
  Word apply(const Word& g) const;
  /// Same, but throws GrowthOverflow as soon as the image would exceed
  /// `max_length` letters before reduction could shrink it below.
  Word apply_bounded(const Word& g, std::size_t max_length) const;

  friend bool operator==(const Endomorphism&, const Endomorphism&) = default;

 private:
  Alphabet alphabet_;
  std::vector<Word> images_;
};

Word apply(const Endomorphism& e, const Word& g);
/// g -> outer(inner(g)).
Endomorphism compose(const Endomorphism& outer, const Endomorphism& inner);

/// An automorphism together with a verified inverse. Construction goes
/// through verify_pair, so both compositions are known to be the identity.
class AutoPair {
 public:
  const Endomorphism& forward() const { return forward_; }
  const Endomorphism& backward() const { return backward_; }
  const Alphabet& alphabet() const { return forward_.alphabet(); }
  int rank() const { return forward_.rank(); }

  /// The pair with forward and backward exchanged.
  AutoPair inverse() const { return AutoPair(backward_, forward_); }

  static AutoPair identity(const Alphabet& alphabet);

  friend bool operator==(const AutoPair&, const AutoPair&) = default;

 private:
  AutoPair(Endomorphism f, Endomorphism b) : forward_(std::move(f)), backward_(std::move(b)) {}
  friend AutoPair verify_pair(const Endomorphism&, const Endomorphism&);
  friend AutoPair compose(const AutoPair&, const AutoPair&);

  Endomorphism forward_;
  Endomorphism backward_;
};

/// Throws NotInverseError naming the first generator that either
/// composition fails to fix.
AutoPair verify_pair(const Endomorphism& forward, const Endomorphism& backward);

/// outer after inner, inverse (inner^-1 after outer^-1).
AutoPair compose(const AutoPair& outer, const AutoPair& inner);

/// Inner automorphism g -> [u g u^-1].
AutoPair inner(const Alphabet& alphabet, const Word& u);

/// psi phi psi^-1
AutoPair conjugate(const AutoPair& phi, const AutoPair& psi);

/// phi^p for any integer p; p < 0 uses the backward map.
AutoPair power(const AutoPair& phi, long p);

/// Column j holds the exponent sums of the image of generator j.
IntMatrix abelianize(const Endomorphism& e);

}  // namespace fgdyn
