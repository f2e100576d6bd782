#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nlie/exact.hpp"
#include "nlie/lie_algebra.hpp"

namespace nlie {

/// First basis pair (i < j) with rho([x_i, x_j]) != [rho(x_i), rho(x_j)], if any.
std::optional<std::pair<std::size_t, std::size_t>> homomorphism_violation(const LieAlgebra& algebra,
                                                                          const std::vector<Matrix>& matrices,
                                                                          Exec exec = Exec::parallel);

/// A representation: one square matrix per basis element of the algebra.
/// The constructor verifies the homomorphism identity exactly on every basis
/// pair and throws InternalError otherwise, so every LieRep value is a module.
class LieRep {
 public:
  LieRep(LieAlgebra algebra, std::vector<Matrix> matrices, std::vector<std::string> labels = {},
         Exec exec = Exec::parallel);

  const LieAlgebra& algebra() const noexcept { return algebra_; }
  const std::vector<Matrix>& matrices() const noexcept { return matrices_; }
  const Matrix& matrix(std::size_t i) const { return matrices_.at(i); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::size_t dim() const noexcept { return dim_; }

  /// rho(x) for a general algebra element x.
  Matrix act(const Vector& x) const;

 private:
  LieAlgebra algebra_;
  std::vector<Matrix> matrices_;
  std::vector<std::string> labels_;
  std::size_t dim_ = 0;
};

LieRep zero_rep(const LieAlgebra& algebra, std::size_t dim);
/// The Lie-adjoint module x . y = [x, y].
LieRep adjoint_rep(const LieAlgebra& algebra);

/// Restriction to an invariant subspace, in the subspace's own basis.
/// Throws ShapeError when the subspace is not invariant.
LieRep restrict_rep(const LieRep& rep, const Subspace& sub, std::vector<std::string> labels = {});

/// rho(x) = rho1(x) (x) 1 + 1 (x) rho2(x).
LieRep tensor_product(const LieRep& a, const LieRep& b);

/// x . (u ^ v) = xu ^ v + u ^ xv on the basis e_a ^ e_b, a < b.
LieRep exterior_square(const LieRep& rep);

/// Representation of `source` obtained through a linear map source -> rep.algebra():
/// rho'(y_w) = sum_c map(c, w) rho(x_c). The map must be a Lie homomorphism,
/// which the LieRep constructor verifies.
LieRep pullback(const LieRep& rep, const LieAlgebra& source, const Matrix& map);

/// Restriction to the common eigenspace {v : op_k v = value_k v for all k}.
LieRep restrict_to_eigenspace(const LieRep& rep, const std::vector<Matrix>& ops, const std::vector<Rational>& values,
                              const std::string& label_prefix = "v");

/// Dimension of Hom_L(a, b), computed as the null space of X rho_a(x) - rho_b(x) X = 0.
std::size_t intertwiner_dimension(const LieRep& a, const LieRep& b);

}  // namespace nlie
