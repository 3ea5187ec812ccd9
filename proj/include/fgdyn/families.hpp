#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fgdyn/automorphism.hpp"
#include "fgdyn/graph.hpp"
#include "fgdyn/matrix.hpp"

namespace fgdyn {

/// phi_k over F_4 = <a,b,c,d>: a, ba, ca^(k+1), dc. Requires k >= 0.
AutoPair make_phi_k(long k);
/// phi_k extended to F_5 by e -> e.
AutoPair make_alpha_k(long k);
/// phi_1 * theta * id over F_N; theta acts on generators 5 and 6. Requires N >= 6.
AutoPair make_beta(int rank, const AutoPair& theta);
/// i_{a^k} o delta^n over F_2: a -> a, b -> a^k b a^(n-k). Requires n != 0.
AutoPair make_twist(long n, long k);
/// a -> a^-1, b -> b^-1.
AutoPair make_sigma();

/// Two stock hyperbolic automorphisms of F_2 (index 1 or 2), built from the
/// Nielsen moves a -> ab and b -> ba. Abelianizations [[1,1],[1,2]] and
/// [[1,2],[1,3]] (discriminants 5 and 12).
AutoPair stock_theta(int index);

/// Closed form of Ab(phi_k)^p.
IntMatrix phi_k_matrix_power(long k, long p);

/// Some M in SL_2(Z) with trace > 2 whose discriminant has squarefree part
/// `squarefree`, searching traces up to max_trace.
std::optional<IntMatrix> sample_hyperbolic_matrix(long squarefree, long max_trace = 10'000);

enum class TwistCase { TwoComponent, NorthSouth, SemiNorthSouth };
std::string to_string(TwistCase c);

/// Decided by the sign of k(n-k). Requires n != 0.
TwistCase classify_twist(long n, long k);

/// Bounded search for w (|w| <= search_bound) and k with [w^-1 u delta^n(w)] = a^k.
/// nullopt means no witness within the bound, not that none exists.
std::optional<std::pair<Word, long>> twist_reduce(const Word& u, long n, std::size_t search_bound);

/// A catalog entry with its parameters and known invariants.
struct Family {
  std::string name;
  std::map<std::string, std::string> params;
  AutoPair pair;
  std::vector<Word> fixed_generators;
  std::optional<Word> parabolic_seed;
  std::optional<RationalPoint> parabolic_limit;
  /// Seeds that reproduce the family's drawn graph.
  std::vector<Word> seeds;
  std::string rotationless_note;
};

/// Parses "name" or "name:key=value,key=value". Names: phi_k (k), alpha_k (k),
/// beta (N, theta = 1|2), delta_n (n), twist (n, k), sigma, inner (u, N),
/// theta (i), identity (N). Throws ParseError / std::invalid_argument.
Family make_family(std::string_view spec);

/// The drawn graph of a cataloged family. Throws std::invalid_argument for
/// families without one.
GraphTemplate expected_graph(const Family& family);

/// The prefix 'd c c a^(k+1) c a^(2k+2) ...' of X_k^+ (or its repelling
/// counterpart 'd a^(k+1) c^-1 a^(2k+2) c^-1 ...'), n letters long.
Word x_k_prefix(long k, bool attracting, std::size_t n);

}  // namespace fgdyn
