#include "fgdyn/matrix.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "fgdyn/errors.hpp"

namespace fgdyn {

namespace checked {

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

}  // namespace checked

IntMatrix::IntMatrix(int dimension) : n_(dimension) {
  if (dimension < 0) throw std::invalid_argument("negative matrix dimension");
  data_.assign(static_cast<std::size_t>(dimension) * dimension, 0);
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : IntMatrix(static_cast<int>(rows.size())) {
  int r = 1;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n_) throw std::invalid_argument("matrix must be square");
    int c = 1;
    for (auto v : row) at(r, c++) = v;
    ++r;
  }
}

IntMatrix IntMatrix::identity(int dimension) {
  IntMatrix m(dimension);
  for (int i = 1; i <= dimension; ++i) m.at(i, i) = 1;
  return m;
}

std::size_t IntMatrix::index(int row, int col) const {
  if (row < 1 || row > n_ || col < 1 || col > n_) throw std::out_of_range("matrix index");
  return static_cast<std::size_t>(row - 1) * n_ + (col - 1);
}

std::int64_t IntMatrix::trace() const {
  std::int64_t t = 0;
  for (int i = 1; i <= n_; ++i) t = checked::add(t, at(i, i));
  return t;
}

IntMatrix matrix_mul(const IntMatrix& x, const IntMatrix& y) {
  if (x.dimension() != y.dimension()) throw std::invalid_argument("matrix dimension mismatch");
  const int n = x.dimension();
  IntMatrix r(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      std::int64_t s = 0;
      for (int k = 1; k <= n; ++k) s = checked::add(s, checked::mul(x.at(i, k), y.at(k, j)));
      r.at(i, j) = s;
    }
  return r;
}

IntMatrix matrix_power(const IntMatrix& m, unsigned long p) {
  IntMatrix result = IntMatrix::identity(m.dimension());
  IntMatrix base = m;
  while (p > 0) {
    if (p & 1) result = matrix_mul(result, base);
    p >>= 1;
    if (p > 0) base = matrix_mul(base, base);
  }
  return result;
}

std::int64_t determinant(const IntMatrix& m) {
  const int n = m.dimension();
  if (n == 0) return 1;
  std::vector<std::vector<std::int64_t>> a(n, std::vector<std::int64_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m.at(i + 1, j + 1);
  int sign = 1;
  std::int64_t prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int swap = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) {
          swap = i;
          break;
        }
      if (swap < 0) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        // Bareiss: the division is exact.
        std::int64_t num = checked::sub(checked::mul(a[i][j], a[k][k]), checked::mul(a[i][k], a[k][j]));
        a[i][j] = num / prev;
      }
    prev = a[k][k];
  }
  return checked::mul(sign, a[n - 1][n - 1]);
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (int i = 1; i <= m.dimension(); ++i) {
    os << (i > 1 ? ", [" : "[");
    for (int j = 1; j <= m.dimension(); ++j) os << (j > 1 ? ", " : "") << m.at(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

std::int64_t squarefree_part(std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("squarefree_part needs a positive integer");
  std::int64_t result = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e % 2 == 1) result *= p;
  }
  return result * n;
}

double DilatationInfo::dilatation() const {
  return (static_cast<double>(trace) + std::sqrt(static_cast<double>(discriminant))) / 2.0;
}

DilatationInfo dilatation_info(const IntMatrix& m) {
  if (m.dimension() != 2) throw std::invalid_argument("dilatation_info needs a 2x2 matrix");
  if (determinant(m) != 1) throw std::invalid_argument("dilatation_info needs determinant 1");
  const std::int64_t t = m.trace();
  if (t <= 2) throw NotHyperbolicError("trace " + std::to_string(t) + " <= 2: matrix is not hyperbolic");
  DilatationInfo info;
  info.trace = t;
  info.discriminant = checked::sub(checked::mul(t, t), 4);
  info.squarefree_part = squarefree_part(info.discriminant);
  return info;
}

}  // namespace fgdyn
