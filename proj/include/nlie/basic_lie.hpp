#pragma once

// The basic Lie algebra L(A) on the (n-1)-th exterior power of an n-Lie algebra,
// and its identification with so_{n+1} for the vector product algebras.

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "nlie/exact.hpp"
#include "nlie/lie_algebra.hpp"
#include "nlie/nlie.hpp"
#include "nlie/wedge.hpp"

namespace nlie {

/// Basis of the (arity-1)-th exterior power of a dim-dimensional space, in
/// lexicographic order; a tuple's position is its basis index in L(A).
/// Empty when arity-1 > dim.
std::vector<WedgeIndex> wedge_basis(std::size_t arity, std::size_t dim);

/// The two textbook expressions for the bracket of L(A):
///   first:  sum_i (-1)^{i+1} [a_1..a_{n-1}, b_i] ^ b_1 ^ .. ^b_i.. ^ b_{n-1}
///   second: sum_i s_i a_1 ^ .. ^a_i.. ^ a_{n-1} ^ [a_i, b_1..b_{n-1}]
/// with the sign s_i chosen by `second_sign`.
enum class BasicBracketForm { first, second };

/// Sign exponent used by the second form: s_i = (-1)^{i+offset} with offset = 1
/// (antisymmetry-consistent) or offset = n (as the formula is usually printed).
enum class SecondFormSign { i_plus_one, i_plus_n };

/// [a, b] in L(A) for basis wedges a and b, as coordinates in wedge_basis.
Vector basic_bracket(const NLieAlgebra& alg, const WedgeIndex& a, const WedgeIndex& b,
                     BasicBracketForm form = BasicBracketForm::first,
                     SecondFormSign sign = SecondFormSign::i_plus_one);

/// L(A) built from the first form. Does not require A to pass is_filippov; the
/// result is a Lie algebra only when it does.
LieAlgebra basic_lie_algebra(const NLieAlgebra& alg);

/// True iff basic_bracket(a, b) = -basic_bracket(b, a) for every basis pair.
bool basic_bracket_is_antisymmetric(const NLieAlgebra& alg);

struct JacobiReport {
  bool pass = true;
  std::optional<std::array<std::size_t, 3>> triple;
  Vector residual;
};

/// [x,[y,z]] + [y,[z,x]] + [z,[x,y]] = 0 on all basis triples x < y < z.
JacobiReport jacobi_check(const LieAlgebra& algebra, Exec exec = Exec::parallel);

/// True iff map([x, y]) = [map x, map y] for every basis pair. map is
/// dst.dim() x src.dim(), column w holding the image of src basis element w.
bool is_lie_homomorphism(const LieAlgebra& src, const LieAlgebra& dst, const Matrix& map);

/// Linear map L(V_n) -> so_{n+1}: the wedge whose complement is {i, j}, i < j,
/// goes to (-1)^{i+j+n+1} e_ij. Verified to be a bijective Lie homomorphism
/// before it is returned (InternalError otherwise). Requires n >= 2.
Matrix iso_to_so(std::size_t n);

/// ad{w} for every wedge basis element w, in wedge_basis order.
std::vector<Matrix> adjoint_maps(const NLieAlgebra& alg);

/// The n-Lie adjoint module: L(A) acting on A through adjoint maps.
LieRep nlie_adjoint_rep(const NLieAlgebra& alg);

}  // namespace nlie
