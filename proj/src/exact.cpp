#include "nlie/exact.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "nlie/errors.hpp"

namespace nlie {

Rational make_rational(long numerator, long denominator) {
  if (denominator == 0) throw ShapeError("zero denominator");
  Rational q(numerator, denominator);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  auto all_digits = [](std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
  };
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  mpz_class n(std::string(num), 10);
  if (text.front() == '-') n = -n;
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& value) { return value.get_str(); }

Vector zero_vector(std::size_t n) { return Vector(n); }

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ShapeError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(std::span<const Vector> columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw ShapeError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Matrix Matrix::from_rows(std::span<const Vector> rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw ShapeError("row length mismatch");
    std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(r * cols));
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

bool Matrix::is_zero() const { return nlie::is_zero(data_); }

std::optional<std::size_t> Matrix::first_nonzero_column() const {
  for (std::size_t c = 0; c < cols_; ++c) {
    for (std::size_t r = 0; r < rows_; ++r) {
      if (sgn((*this)(r, c)) != 0) return c;
    }
  }
  return std::nullopt;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw ShapeError("matrix sum shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (sgn(other.data_[i]) != 0) data_[i] += other.data_[i];
  }
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw ShapeError("matrix difference shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (sgn(other.data_[i]) != 0) data_[i] -= other.data_[i];
  }
  return *this;
}

Matrix& Matrix::operator*=(const Rational& scalar) {
  for (auto& x : data_) {
    if (sgn(x) != 0) x *= scalar;
  }
  return *this;
}

namespace {

void multiply_row(const Matrix& a, const Matrix& b, Matrix& out, std::size_t i) {
  for (std::size_t k = 0; k < a.cols(); ++k) {
    const Rational& aik = a(i, k);
    if (sgn(aik) == 0) continue;
    for (std::size_t j = 0; j < b.cols(); ++j) {
      const Rational& bkj = b(k, j);
      if (sgn(bkj) != 0) out(i, j) += aik * bkj;
    }
  }
}

}  // namespace

Matrix multiply(const Matrix& a, const Matrix& b, Exec exec) {
  if (a.cols() != b.rows()) throw ShapeError("matrix product shape mismatch");
  Matrix out(a.rows(), b.cols());
  const auto rows = static_cast<std::ptrdiff_t>(a.rows());
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 4) if (rows >= 48)
    for (std::ptrdiff_t i = 0; i < rows; ++i) multiply_row(a, b, out, static_cast<std::size_t>(i));
  } else {
    for (std::ptrdiff_t i = 0; i < rows; ++i) multiply_row(a, b, out, static_cast<std::size_t>(i));
  }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) { return multiply(a, b); }

Vector mat_vec(const Matrix& m, const Vector& v) {
  if (m.cols() != v.size()) throw ShapeError("matrix-vector shape mismatch");
  Vector out(m.rows());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (sgn(v[c]) == 0) continue;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (sgn(m(r, c)) != 0) out[r] += m(r, c) * v[c];
    }
  }
  return out;
}

Matrix commutator(const Matrix& a, const Matrix& b, Exec exec) {
  return multiply(a, b, exec) - multiply(b, a, exec);
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (sgn(a(i, j)) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) {
          if (sgn(b(k, l)) != 0) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    }
  return out;
}

Matrix block_diagonal(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
  return out;
}

std::optional<Rational> scalar_value(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  if (m.rows() == 0) return Rational(0);
  const Rational c = m(0, 0);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t col = 0; col < m.cols(); ++col) {
      if (m(r, col) != (r == col ? c : Rational(0))) return std::nullopt;
    }
  return c;
}

namespace {

// row[target] -= factor * row[pivot_row], entries left of pivot_col are already zero.
void eliminate(Matrix& m, std::size_t target, std::size_t pivot_row, std::size_t pivot_col) {
  const Rational factor = m(target, pivot_col);
  if (sgn(factor) == 0) return;
  for (std::size_t c = pivot_col; c < m.cols(); ++c) {
    const Rational& p = m(pivot_row, c);
    if (sgn(p) != 0) m(target, c) -= factor * p;
  }
}

}  // namespace

RowEchelon row_reduce(Matrix m, Exec exec) {
  RowEchelon out;
  std::size_t next_row = 0;
  for (std::size_t col = 0; col < m.cols() && next_row < m.rows(); ++col) {
    std::size_t pivot = next_row;
    while (pivot < m.rows() && sgn(m(pivot, col)) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != next_row) {
      for (std::size_t c = col; c < m.cols(); ++c) std::swap(m(pivot, c), m(next_row, c));
    }
    const Rational inv = 1 / m(next_row, col);
    for (std::size_t c = col; c < m.cols(); ++c) {
      if (sgn(m(next_row, c)) != 0) m(next_row, c) *= inv;
    }
    const auto rows = static_cast<std::ptrdiff_t>(m.rows());
    const std::size_t pr = next_row;
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static) if (rows >= 64)
      for (std::ptrdiff_t r = 0; r < rows; ++r) {
        if (static_cast<std::size_t>(r) != pr) eliminate(m, static_cast<std::size_t>(r), pr, col);
      }
    } else {
      for (std::ptrdiff_t r = 0; r < rows; ++r) {
        if (static_cast<std::size_t>(r) != pr) eliminate(m, static_cast<std::size_t>(r), pr, col);
      }
    }
    out.pivots.push_back(col);
    ++next_row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m, Exec exec) { return row_reduce(m, exec).pivots.size(); }

std::vector<Vector> kernel_basis(const Matrix& m, Exec exec) {
  return Subspace::kernel_of(m, exec).basis();
}

std::size_t span_dimension(std::span<const Vector> vs) {
  if (vs.empty()) return 0;
  const std::size_t n = vs.front().size();
  for (const auto& v : vs) {
    if (v.size() != n) throw ShapeError("span_dimension: vectors of different lengths");
  }
  return rank(Matrix::from_rows(vs, n));
}

Subspace Subspace::span_of(std::span<const Vector> vectors, std::size_t ambient) {
  Subspace s(ambient);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

Subspace Subspace::kernel_of(const Matrix& m, Exec exec) {
  const RowEchelon e = row_reduce(m, exec);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  Subspace s(m.cols());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    s.basis_.push_back(std::move(v));
    s.positions_.push_back(free);
  }
  return s;
}

Vector Subspace::residual(const Vector& v) const {
  if (v.size() != ambient_) throw ShapeError("subspace: vector length mismatch");
  Vector r = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Rational c = r[positions_[i]];
    if (sgn(c) == 0) continue;
    for (std::size_t k = 0; k < ambient_; ++k) {
      if (sgn(basis_[i][k]) != 0) r[k] -= c * basis_[i][k];
    }
  }
  return r;
}

bool Subspace::insert(const Vector& v) {
  Vector r = residual(v);
  std::size_t p = 0;
  while (p < ambient_ && sgn(r[p]) == 0) ++p;
  if (p == ambient_) return false;
  const Rational inv = 1 / r[p];
  for (auto& x : r) {
    if (sgn(x) != 0) x *= inv;
  }
  for (auto& b : basis_) {
    const Rational c = b[p];
    if (sgn(c) == 0) continue;
    for (std::size_t k = 0; k < ambient_; ++k) {
      if (sgn(r[k]) != 0) b[k] -= c * r[k];
    }
  }
  basis_.push_back(std::move(r));
  positions_.push_back(p);
  return true;
}

bool Subspace::contains(const Vector& v) const { return nlie::is_zero(residual(v)); }

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) return std::nullopt;
  Vector c(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) c[i] = v[positions_[i]];
  return c;
}

Matrix Subspace::basis_matrix() const { return Matrix::from_columns(basis_, ambient_); }

}  // namespace nlie
