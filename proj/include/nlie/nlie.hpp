#pragma once

// n-Lie (Filippov) algebras: an n-ary, fully antisymmetric bracket on a
// finite-dimensional Q-space, stored on strictly increasing basis tuples.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "nlie/exact.hpp"
#include "nlie/lie_rep.hpp"
#include "nlie/wedge.hpp"

namespace nlie {

using AlgebraElement = Vector;

Vector basis_vector(std::size_t dim, std::size_t i);

class NLieAlgebra {
 public:
  using Entry = std::pair<Tuple, Vector>;

  /// Entries may name tuples in any order; they are sorted with the sign
  /// absorbed into the coefficients. A tuple with a repeated index must carry
  /// a zero vector, and two entries for the same tuple must agree; otherwise
  /// IndexError. Omitted tuples are zero.
  NLieAlgebra(std::size_t arity, std::size_t dim, const std::vector<Entry>& entries = {});

  std::size_t arity() const noexcept { return arity_; }
  std::size_t dim() const noexcept { return dim_; }

  /// Nonzero structure constants, keyed by strictly increasing tuples.
  const std::map<Tuple, Vector>& structure() const noexcept { return structure_; }

  /// Bracket of basis vectors in any order (a repeated index gives 0).
  Vector bracket_basis(const Tuple& indices) const;
  /// Multilinear, antisymmetric extension. Throws ArityError / ShapeError.
  Vector bracket(std::span<const AlgebraElement> args) const;

  friend bool operator==(const NLieAlgebra&, const NLieAlgebra&) = default;

 private:
  std::size_t arity_;
  std::size_t dim_;
  std::map<Tuple, Vector> structure_;
};

/// The (n+1)-dimensional algebra with [e_1, ..., ^e_i, ..., e_{n+1}] = (-1)^i e_i.
NLieAlgebra vector_product_algebra(std::size_t n);

/// Two equivalent ways of writing the right-hand side of the Leibniz rule.
enum class LeibnizForm {
  /// sum_i w(a_n, ..., w(a_1..a_{n-1}, a_i), ..., a_{2n-1})
  derivation,
  /// sum_i (-1)^{n+i} w(w(a_1..a_{n-1}, a_i), a_n, ..., ^a_i, ..., a_{2n-1})
  moved_front,
};

/// Both sides of the Leibniz rule for basis tuples left = (a_1..a_{n-1}), right = (a_n..a_{2n-1}).
std::pair<Vector, Vector> leibniz_sides(const NLieAlgebra& alg, const Tuple& left, const Tuple& right,
                                        LeibnizForm form = LeibnizForm::derivation);

struct LeibnizViolation {
  Tuple left;
  Tuple right;
  Vector lhs;
  Vector rhs;
};

struct FilippovReport {
  bool pass = true;
  std::optional<LeibnizViolation> violation;
  /// Number of increasing (left, right) tuple pairs covered.
  std::size_t cases = 0;
};

/// Checks the Leibniz rule on all increasing basis tuple pairs, which suffices
/// because both sides are multilinear and antisymmetric in (a_1..a_{n-1}) and
/// in (a_n..a_{2n-1}) separately. Pairs whose both sides vanish identically
/// (the inner adjoint map is zero, or no stored tuple can be reached) are
/// skipped. The reported violation is the lexicographically first.
FilippovReport is_filippov(const NLieAlgebra& alg, Exec exec = Exec::parallel);

/// D(w(a_1..a_n)) = sum_i w(.., D a_i, ..) on all increasing basis tuples.
bool is_derivation(const NLieAlgebra& alg, const Matrix& d);

/// The matrix of b -> [args..., b] for n-1 arguments.
Matrix adjoint_map(const NLieAlgebra& alg, std::span<const AlgebraElement> args);

/// A + M with M abelian. `mod` must be a representation of basic_lie_algebra(alg);
/// rho(a_1 ^ ... ^ a_{n-1}) m is the bracket with m in the last slot. A bracket with
/// m in slot i is (-1)^{n-i} times the one with m moved to the last slot, and
/// brackets with two or more module arguments vanish.
NLieAlgebra semidirect_sum(const NLieAlgebra& alg, const LieRep& mod);

}  // namespace nlie
