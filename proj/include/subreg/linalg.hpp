// Exact dense linear algebra: scalar-templated row reduction over a field,
// fraction-free integer rank, and arithmetic mod a small prime.
#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "subreg/scalar.hpp"

namespace subreg {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = DenseMatrix<std::int64_t>;
using IntVector = DenseVector<std::int64_t>;
using RationalMatrix = DenseMatrix<Rational>;
using RationalVector = DenseVector<Rational>;

/// Exact field operations over the rationals.
struct RationalField {
  using Scalar = Rational;
  static bool is_zero(const Scalar& x) { return x.is_zero(); }
  static Scalar inverse(const Scalar& x) { return Rational(1) / x; }
};

/// The prime field F_q, elements represented by residues in [0, q).
struct PrimeField {
  using Scalar = std::int64_t;
  int q;

  explicit PrimeField(int modulus) : q(modulus) {}
  bool is_zero(Scalar x) const { return x % q == 0; }
  Scalar inverse(Scalar x) const;
};

std::int64_t mod_pos(std::int64_t v, int q);
std::int64_t inverse_mod(std::int64_t a, int q);
IntMatrix mod_reduce(const IntMatrix& m, int q);
IntMatrix mod_mul(const IntMatrix& a, const IntMatrix& b, int q);

/// In-place reduction to row echelon form; returns the rank and, if asked,
/// the pivot column of every pivot row.
template <typename Field>
int row_echelon(DenseMatrix<typename Field::Scalar>& m, const Field& field,
                std::vector<int>* pivot_columns = nullptr) {
  using Scalar = typename Field::Scalar;
  const Eigen::Index rows = m.rows(), cols = m.cols();
  int rank = 0;
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = rank; r < rows; ++r) {
      if (!field.is_zero(m(r, col))) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) m.row(pivot).swap(m.row(rank));
    const Scalar inv = field.inverse(m(rank, col));
    for (Eigen::Index c = col; c < cols; ++c) m(rank, c) = m(rank, c) * inv;
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (r == rank || field.is_zero(m(r, col))) continue;
      const Scalar factor = m(r, col);
      for (Eigen::Index c = col; c < cols; ++c)
        m(r, c) = m(r, c) - factor * m(rank, c);
    }
    if (pivot_columns) pivot_columns->push_back(static_cast<int>(col));
    ++rank;
  }
  return rank;
}

template <typename Field>
int rank_of(DenseMatrix<typename Field::Scalar> m, const Field& field) {
  return row_echelon(m, field);
}

/// Basis of the right kernel of `m` over the rationals, one basis vector per
/// column of the result.
RationalMatrix kernel_basis(RationalMatrix m);

/// Rank of an integer matrix, computed fraction-free (Bareiss) over
/// arbitrary-precision integers.
int integer_rank(const IntMatrix& m);

int rank_mod(const IntMatrix& m, int q);

IntMatrix integer_power(IntMatrix m, int exponent);
bool is_nilpotent(const IntMatrix& m);
bool is_nilpotent(const RationalMatrix& m);

/// Scales a rational vector to a primitive integer vector (clears
/// denominators, divides by the content).
IntVector primitive_integer_vector(const RationalVector& v);

}  // namespace subreg
