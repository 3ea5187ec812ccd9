#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fgdyn/automorphism.hpp"

namespace fgdyn {

/// Plain-text automorphism definition:
///
///   alphabet: a b c d
///   map b -> b a
///   inv b -> b a^-1
///   fix: a; b a b^-1
///   seeds: b; b d^-1
///
/// Every generator needs a `map` and an `inv` line; `1` denotes the empty
/// word. Blank lines and `#` comments are ignored.
struct AutoFile {
  AutoPair pair;
  std::vector<Word> fixed;
  std::vector<Word> seeds;
};

/// Throws ParseError (with line number), NotInverseError, or
/// std::invalid_argument when a listed fixed generator is not fixed.
AutoFile parse_autofile(std::string_view text);

std::string write_autofile(const AutoFile& file);

/// A path to an AutoFile, or else a family descriptor such as "phi_k:k=3".
AutoFile load_automorphism(const std::string& source);

}  // namespace fgdyn
