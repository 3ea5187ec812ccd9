#pragma once

#include <stdexcept>
#include <string>

namespace fgdyn {

/// Letter outside the alphabet, or two operands over different alphabets.
class AlphabetError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed word text, automorphism file or family descriptor.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operation needs a non-identity word.
class EmptyWordError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Claimed inverse pair does not compose to the identity.
class NotInverseError : public std::invalid_argument {
 public:
  NotInverseError(const std::string& what, int generator)
      : std::invalid_argument(what), generator_(generator) {}
  int generator() const noexcept { return generator_; }

 private:
  int generator_;
};

/// Checked integer arithmetic overflowed.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Iterated image exceeded the configured word-length budget.
class GrowthOverflow : public std::runtime_error {
 public:
  GrowthOverflow(const std::string& what, long iteration, std::size_t length)
      : std::runtime_error(what), iteration_(iteration), length_(length) {}
  long iteration() const noexcept { return iteration_; }
  std::size_t length() const noexcept { return length_; }

 private:
  long iteration_;
  std::size_t length_;
};

class NotHyperbolicError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace fgdyn
