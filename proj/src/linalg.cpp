#include "subreg/linalg.hpp"

#include <numeric>
#include <utility>

namespace subreg {

std::int64_t mod_pos(std::int64_t v, int q) {
  std::int64_t r = v % q;
  return r < 0 ? r + q : r;
}

std::int64_t inverse_mod(std::int64_t a, int q) {
  a = mod_pos(a, q);
  if (a == 0) throw std::domain_error("inverse_mod: zero element");
  // extended Euclid
  std::int64_t t = 0, new_t = 1, r = q, new_r = a;
  while (new_r != 0) {
    std::int64_t quot = r / new_r;
    t = std::exchange(new_t, t - quot * new_t);
    r = std::exchange(new_r, r - quot * new_r);
  }
  if (r != 1) throw std::domain_error("inverse_mod: modulus not prime to element");
  return mod_pos(t, q);
}

PrimeField::Scalar PrimeField::inverse(Scalar x) const { return inverse_mod(x, q); }

IntMatrix mod_reduce(const IntMatrix& m, int q) {
  IntMatrix out = m;
  for (Eigen::Index i = 0; i < out.size(); ++i)
    out.data()[i] = mod_pos(out.data()[i], q);
  return out;
}

IntMatrix mod_mul(const IntMatrix& a, const IntMatrix& b, int q) {
  return mod_reduce(a * b, q);
}

RationalMatrix kernel_basis(RationalMatrix m) {
  const Eigen::Index cols = m.cols();
  std::vector<int> pivots;
  row_echelon(m, RationalField{}, &pivots);
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;

  RationalMatrix basis(cols, cols - static_cast<Eigen::Index>(pivots.size()));
  Eigen::Index k = 0;
  for (Eigen::Index free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    RationalVector v = RationalVector::Zero(cols);
    v(free_col) = Rational(1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v(pivots[r]) = -m(static_cast<Eigen::Index>(r), free_col);
    basis.col(k++) = v;
  }
  return basis;
}

int integer_rank(const IntMatrix& m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(cols));
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) a[i][j] = m(i, j);

  BigInt prev = 1;
  int rank = 0;
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (Eigen::Index r = rank; r < rows; ++r) {
      if (a[r][col] != 0) {
        pivot = static_cast<int>(r);
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) std::swap(a[pivot], a[rank]);
    for (Eigen::Index r = rank + 1; r < rows; ++r) {
      for (Eigen::Index c = col + 1; c < cols; ++c)
        a[r][c] = (a[rank][col] * a[r][c] - a[r][col] * a[rank][c]) / prev;
      a[r][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

int rank_mod(const IntMatrix& m, int q) {
  IntMatrix r = mod_reduce(m, q);
  return row_echelon(r, PrimeField(q));
}

IntMatrix integer_power(IntMatrix m, int exponent) {
  IntMatrix out = IntMatrix::Identity(m.rows(), m.cols());
  for (int k = 0; k < exponent; ++k) out = out * m;
  return out;
}

bool is_nilpotent(const IntMatrix& m) {
  // Squared over arbitrary-precision integers: entries of powers of a
  // non-nilpotent input can overflow 64 bits before the verdict is reached.
  const Eigen::Index n = m.rows();
  std::vector<std::vector<BigInt>> p(n, std::vector<BigInt>(n));
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) p[i][j] = m(i, j);
  auto zero = [n](const std::vector<std::vector<BigInt>>& x) {
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j)
        if (x[i][j] != 0) return false;
    return true;
  };
  auto square = [n](const std::vector<std::vector<BigInt>>& x) {
    std::vector<std::vector<BigInt>> out(n, std::vector<BigInt>(n, BigInt(0)));
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index k = 0; k < n; ++k) {
        if (x[i][k] == 0) continue;
        for (Eigen::Index j = 0; j < n; ++j) out[i][j] += x[i][k] * x[k][j];
      }
    return out;
  };
  for (Eigen::Index k = 1; k < n; k *= 2) {
    if (zero(p)) return true;
    p = square(p);
  }
  return zero(p);
}

bool is_nilpotent(const RationalMatrix& m) {
  RationalMatrix p = m;
  auto zero = [](const RationalMatrix& x) {
    for (Eigen::Index i = 0; i < x.size(); ++i)
      if (!x.data()[i].is_zero()) return false;
    return true;
  };
  for (Eigen::Index k = 1; k < m.rows(); k *= 2) {
    if (zero(p)) return true;
    p = p * p;
  }
  return zero(p);
}

IntVector primitive_integer_vector(const RationalVector& v) {
  BigInt lcm = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    lcm = boost::multiprecision::lcm(lcm, v(i).denominator());
  std::vector<BigInt> scaled(v.size());
  BigInt content = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    scaled[i] = v(i).numerator() * (lcm / v(i).denominator());
    content = boost::multiprecision::gcd(content, scaled[i]);
  }
  if (content == 0) content = 1;
  IntVector out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    BigInt e = scaled[i] / content;
    out(i) = e.convert_to<std::int64_t>();
  }
  return out;
}

}  // namespace subreg
