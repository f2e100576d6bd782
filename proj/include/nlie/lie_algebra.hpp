#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "nlie/exact.hpp"

namespace nlie {

/// Finite-dimensional Lie algebra over Q given by structure constants on a basis.
/// Only [x_i, x_j] for i < j is supplied; [x_j, x_i] = -[x_i, x_j] and [x_i, x_i] = 0.
class LieAlgebra {
 public:
  using BracketRule = std::function<Vector(std::size_t, std::size_t)>;

  LieAlgebra() = default;
  /// rule(i, j) is called for every i < j and must return a vector of length dim.
  LieAlgebra(std::size_t dim, const BracketRule& rule, std::vector<std::string> names = {});

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<std::string>& names() const noexcept { return names_; }

  const Vector& bracket_basis(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
  Vector bracket(const Vector& x, const Vector& y) const;

  /// ad(x_i) as a dim x dim matrix.
  Matrix ad(std::size_t i) const;

  /// Structure constants agree; basis names are not compared.
  bool same_structure(const LieAlgebra& other) const { return dim_ == other.dim_ && table_ == other.table_; }

 private:
  std::size_t dim_ = 0;
  std::vector<Vector> table_;
  std::vector<std::string> names_;
};

/// Killing form B(x_i, x_j) = tr(ad x_i ad x_j).
Matrix killing_form(const LieAlgebra& algebra);

}  // namespace nlie
