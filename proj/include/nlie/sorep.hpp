#pragma once

// Concrete so_m algebras and the representations used by the classification:
// homogeneous and harmonic polynomial modules, rational sl2 modules in the
// compact basis f1, f2, f3, the so4 modules M_t (x) M_r, and Casimir operators.

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "nlie/exact.hpp"
#include "nlie/lie_algebra.hpp"
#include "nlie/lie_rep.hpp"

namespace nlie {

/// so_m with basis e_ij = x_i d_j - x_j d_i, i < j, in lexicographic order.
/// Throws IndexError for m < 3.
LieAlgebra so_algebra(std::size_t m);

/// Basis position of e_ij (0-based, i < j) in so_algebra(m).
std::size_t so_index(std::size_t i, std::size_t j, std::size_t m);

struct Monomial {
  std::vector<unsigned> exponents;

  unsigned degree() const;
  /// e.g. "x1^2*x3", or "1" for the constant.
  std::string label() const;
};

/// Degree-t monomials in m variables, exponent vectors in descending
/// lexicographic order (x1^t first).
std::vector<Monomial> monomials(std::size_t m, std::size_t t);

/// Homogeneous degree-t polynomials in m variables with e_ij acting as x_i d_j - x_j d_i.
LieRep polynomial_module(std::size_t m, std::size_t t);

/// sum_i d_i^2 from degree t to degree t-2 (a 0 x N matrix when t < 2).
Matrix laplacian_matrix(std::size_t m, std::size_t t);
std::size_t laplacian_kernel_dim(std::size_t m, std::size_t t);

/// The harmonic degree-t polynomials, the irreducible so_m module of highest weight t*pi_1.
LieRep harmonic_module(std::size_t m, std::size_t t);

/// Lie-adjoint module of so_m, realized as the exterior square of the vector module.
LieRep wedge_square_module(std::size_t m);

/// sl2 in the compact basis: [f1,f2] = -f3, [f1,f3] = f2, [f2,f3] = -f1.
LieAlgebra sl2_algebra();

/// Copies of M_t in the smallest rational realization of M_t: 1 for even t.
/// For odd t, M_t has no realization over Q (nor over R) in this basis, and
/// the smallest rational module is M_t + M_t.
std::size_t sl2_rational_multiplicity(std::size_t t);

/// Rational module over sl2_algebra() whose complexification is
/// sl2_rational_multiplicity(t) copies of the (t+1)-dimensional irreducible.
LieRep sl2_module(std::size_t t);

/// f1^2 + f2^2 + f3^2.
Matrix sl2_casimir(const LieRep& rep);

/// Coordinates of f1..f6 in the e-basis of so_algebra(4):
/// f1=(e12+e34)/2, f2=(e13-e24)/2, f3=(e14+e23)/2,
/// f4=(-e12+e34)/2, f5=(e13+e24)/2, f6=(-e14+e23)/2.
std::array<Vector, 6> so4_f_basis();

/// The so4 module L (x) R: f1..f3 act on the left factor, f4..f6 on the right.
LieRep so4_from_sl2_pair(const LieRep& left, const LieRep& right);

/// Copies of M_{t,r} in so4_tensor_module(t, r): 1 when t + r is even, 2 otherwise.
std::size_t so4_rational_multiplicity(std::size_t t, std::size_t r);

/// Rational so4 module whose complexification is so4_rational_multiplicity(t, r)
/// copies of M_{t,r} = M_t (x) M_r.
LieRep so4_tensor_module(std::size_t t, std::size_t r);

/// C1 = f1^2 + f2^2 + f3^2 and C2 = f4^2 + f5^2 + f6^2 on an so4 module.
std::pair<Matrix, Matrix> casimir_matrices(const LieRep& so4_rep);

/// Scalars of C1 and C2. Throws InternalError when either is not a multiple of
/// the identity, ShapeError when the module is not over so4.
std::pair<Rational, Rational> casimir_values(const LieRep& so4_rep);

}  // namespace nlie
