#include "nlie/lie_algebra.hpp"

#include "nlie/errors.hpp"

namespace nlie {

LieAlgebra::LieAlgebra(std::size_t dim, const BracketRule& rule, std::vector<std::string> names)
    : dim_(dim), table_(dim * dim, Vector(dim)), names_(std::move(names)) {
  if (names_.empty()) {
    for (std::size_t i = 0; i < dim; ++i) names_.push_back("x" + std::to_string(i + 1));
  }
  if (names_.size() != dim) throw ShapeError("LieAlgebra: name count does not match dimension");
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i + 1; j < dim; ++j) {
      Vector v = rule(i, j);
      if (v.size() != dim) throw ShapeError("LieAlgebra: bracket vector has wrong length");
      Vector neg(dim);
      for (std::size_t k = 0; k < dim; ++k) neg[k] = -v[k];
      table_[i * dim + j] = std::move(v);
      table_[j * dim + i] = std::move(neg);
    }
  }
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw ShapeError("LieAlgebra::bracket: length mismatch");
  Vector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (i == j || sgn(y[j]) == 0) continue;
      const Rational c = x[i] * y[j];
      const Vector& b = bracket_basis(i, j);
      for (std::size_t k = 0; k < dim_; ++k) {
        if (sgn(b[k]) != 0) out[k] += c * b[k];
      }
    }
  }
  return out;
}

Matrix LieAlgebra::ad(std::size_t i) const {
  Matrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    const Vector& b = bracket_basis(i, j);
    for (std::size_t k = 0; k < dim_; ++k) m(k, j) = b[k];
  }
  return m;
}

Matrix killing_form(const LieAlgebra& algebra) {
  const std::size_t d = algebra.dim();
  std::vector<Matrix> ads;
  for (std::size_t i = 0; i < d; ++i) ads.push_back(algebra.ad(i));
  Matrix k(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Matrix p = multiply(ads[i], ads[j], Exec::serial);
      Rational tr = 0;
      for (std::size_t r = 0; r < d; ++r) tr += p(r, r);
      k(i, j) = tr;
    }
  return k;
}

}  // namespace nlie
