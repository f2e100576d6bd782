#pragma once

// Exact rational scalars, dense matrices and the elimination kernel.
//
// Every identity checked by this library is a polynomial identity in rational
// structure constants, so all comparisons are exact equality.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nlie {

/// GMP rational. Arithmetic results are always canonical; values built from a
/// numerator/denominator pair must go through make_rational.
using Rational = mpq_class;
using Vector = std::vector<Rational>;

/// Selects the OpenMP kernel or the serial reference path.
enum class Exec { serial, parallel };

Rational make_rational(long numerator, long denominator = 1);

/// Accepts "p", "-p", "p/q", "-p/q" with q > 0. Throws ParseError.
Rational parse_rational(std::string_view text);

/// Canonical form: "p/q" in lowest terms, or "p" when q = 1.
std::string to_string(const Rational& value);

Vector zero_vector(std::size_t n);
bool is_zero(const Vector& v);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_columns(std::span<const Vector> columns, std::size_t rows);
  static Matrix from_rows(std::span<const Vector> rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  bool is_zero() const;
  /// Index of the first column holding a nonzero entry, if any.
  std::optional<std::size_t> first_nonzero_column() const;

  Matrix transpose() const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(const Rational& scalar);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Product that skips zero entries; the representation matrices are very sparse.
Matrix multiply(const Matrix& a, const Matrix& b, Exec exec = Exec::parallel);
Matrix operator*(const Matrix& a, const Matrix& b);
Vector mat_vec(const Matrix& m, const Vector& v);
Matrix commutator(const Matrix& a, const Matrix& b, Exec exec = Exec::parallel);
Matrix kronecker(const Matrix& a, const Matrix& b);
Matrix block_diagonal(const Matrix& a, const Matrix& b);

/// c when m = c * identity, nothing otherwise (including non-square m).
std::optional<Rational> scalar_value(const Matrix& m);

struct RowEchelon {
  Matrix reduced;                   ///< reduced row echelon form
  std::vector<std::size_t> pivots;  ///< pivot column of each nonzero row
};

/// Gauss-Jordan elimination over Q. Pivot is the first nonzero entry in the
/// column, so the result does not depend on the execution path.
RowEchelon row_reduce(Matrix m, Exec exec = Exec::parallel);

std::size_t rank(const Matrix& m, Exec exec = Exec::parallel);

/// Right null space basis, one vector per free column (1 there, 0 on the other
/// free columns).
std::vector<Vector> kernel_basis(const Matrix& m, Exec exec = Exec::parallel);

/// Rank of the matrix whose rows are vs. Throws ShapeError on ragged input.
std::size_t span_dimension(std::span<const Vector> vs);

/// A subspace of Q^n with a basis b_0..b_{k-1} and coordinate positions p_0..p_{k-1}
/// such that b_i[p_j] = delta_ij. Coordinates of a member v are v[p_0..p_{k-1}].
class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0) : ambient_(ambient) {}

  static Subspace span_of(std::span<const Vector> vectors, std::size_t ambient);
  /// Null space of m, built directly from its reduced echelon form.
  static Subspace kernel_of(const Matrix& m, Exec exec = Exec::parallel);

  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<Vector>& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& positions() const noexcept { return positions_; }

  /// Adds v to the span. Returns false when v was already a member.
  bool insert(const Vector& v);
  bool contains(const Vector& v) const;
  std::optional<Vector> coordinates(const Vector& v) const;
  /// The basis as columns of an ambient x dim matrix.
  Matrix basis_matrix() const;

 private:
  Vector residual(const Vector& v) const;

  std::size_t ambient_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> positions_;
};

}  // namespace nlie
