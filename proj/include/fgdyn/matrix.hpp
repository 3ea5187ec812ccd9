#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fgdyn {

/// Square integer matrix with overflow-checked arithmetic. Every operation
/// that would leave the int64 range throws OverflowError.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int dimension);
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static IntMatrix identity(int dimension);

  int dimension() const { return n_; }
  /// 1-based row and column, matching the usual matrix notation.
  std::int64_t at(int row, int col) const { return data_.at(index(row, col)); }
  std::int64_t& at(int row, int col) { return data_.at(index(row, col)); }

  std::int64_t trace() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t index(int row, int col) const;

  int n_ = 0;
  std::vector<std::int64_t> data_;
};

IntMatrix matrix_mul(const IntMatrix& x, const IntMatrix& y);
/// Square-and-multiply; p = 0 gives the identity.
IntMatrix matrix_power(const IntMatrix& m, unsigned long p);
/// Exact determinant (fraction-free Bareiss elimination).
std::int64_t determinant(const IntMatrix& m);

std::string to_string(const IntMatrix& m);

/// Invariants of a hyperbolic SL_2(Z) matrix. The dilatation
/// (trace + sqrt(discriminant)) / 2 lies in Q(sqrt(squarefree_part)).
struct DilatationInfo {
  std::int64_t trace = 0;
  std::int64_t discriminant = 0;
  std::int64_t squarefree_part = 0;

  double dilatation() const;
};

/// Requires a 2x2 matrix of determinant 1 and trace > 2.
DilatationInfo dilatation_info(const IntMatrix& m);

/// n divided by its largest square divisor (n > 0), by trial division.
std::int64_t squarefree_part(std::int64_t n);

namespace checked {
std::int64_t add(std::int64_t a, std::int64_t b);
std::int64_t sub(std::int64_t a, std::int64_t b);
std::int64_t mul(std::int64_t a, std::int64_t b);
}  // namespace checked

}  // namespace fgdyn
