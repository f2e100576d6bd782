#pragma once

// Deciding whether an so_{n+1}-module (equivalently an L(V_n)-module) prolongs
// to an n-Lie module of the vector product algebra V_n.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nlie/exact.hpp"
#include "nlie/lie_rep.hpp"
#include "nlie/nlie.hpp"

namespace nlie {

/// (i; j, s, k) with j < s < k and i outside {j, s, k}; 0-based.
struct ObstructionIndex {
  std::size_t i, j, s, k;

  /// Validates the pattern against so_m; throws IndexError.
  static ObstructionIndex make(std::size_t i, std::size_t j, std::size_t s, std::size_t k, std::size_t m);
  /// 1-based, e.g. "R_1234".
  std::string label() const;

  friend bool operator==(const ObstructionIndex&, const ObstructionIndex&) = default;
};

/// Every valid index for so_m, lexicographic in (i, j, s, k). There are (m-3) * C(m, 3).
std::vector<ObstructionIndex> obstruction_indices(std::size_t m);

/// rho(e_ij) rho(e_sk) + rho(e_is) rho(e_kj) + rho(e_ik) rho(e_js), with e_ba = -e_ab.
Matrix r_operator(const LieRep& rep, const ObstructionIndex& idx);
/// Same product for arbitrary indices, bypassing validation (e_aa = 0).
Matrix r_operator_unchecked(const LieRep& rep, std::size_t i, std::size_t j, std::size_t s, std::size_t k);

/// m such that rep is a module over so_algebra(m); ShapeError otherwise.
std::size_t so_size(const LieRep& rep);

struct ProlongWitness {
  std::optional<ObstructionIndex> index;  ///< set by can_prolong
  Tuple algebra_tuple;                    ///< (a_1..a_{2n-2}), set by prolong_check_general
  std::size_t basis = 0;                  ///< module basis vector the residual was computed on
  std::string basis_label;
  Vector residual;  ///< nonzero
};

struct ProlongReport {
  bool verdict = true;
  std::optional<ProlongWitness> witness;  ///< present iff verdict is false
};

/// R_ijsk v = 0 for every valid index and every module basis vector v.
/// Vacuously true for so_3 (n = 2). The witness is the first failing index,
/// then the first failing basis vector.
ProlongReport can_prolong(const LieRep& rep, Exec exec = Exec::parallel);

/// rho(w(a_1..a_n) ^ a_{n+1} ^ .. ^ a_{2n-2})
///   = sum_i (-1)^{i+n} rho(a_1 ^ .. ^a_i.. ^ a_n) rho(a_i ^ a_{n+1} ^ .. ^ a_{2n-2})
/// on all increasing basis tuples (a_1..a_n), (a_{n+1}..a_{2n-2}).
/// rep must be over basic_lie_algebra(alg).
ProlongReport prolong_check_general(const NLieAlgebra& alg, const LieRep& rep, Exec exec = Exec::parallel);

/// rep over so_{n+1}, seen as a module of L(V_n) through iso_to_so(n).
LieRep transport_to_basic(const LieRep& so_rep, std::size_t n);

/// The n-slot action w_n(a_1..a_{n-1}, m) of an n-Lie module.
using ModuleAction = std::function<Vector(std::span<const AlgebraElement>, const Vector&)>;

/// w_n(a_1..a_{n-1}, m) = rho(a_1 ^ .. ^ a_{n-1}) m.
ModuleAction action_from_rep(const NLieAlgebra& alg, const LieRep& rep);

enum class ModuleAxiom { linearity, skew_symmetry, adjacent_swap, leibniz_last_slot, leibniz_mixed };
std::string to_string(ModuleAxiom axiom);

struct ModuleAxiomReport {
  bool pass = true;
  std::optional<ModuleAxiom> failed;
  std::string detail;
};

/// The four n-Lie module axioms, with w_i derived from w_n as
/// w_i(.., m at slot i, ..) = (-1)^{n-i} w_n(.., m). Linearity is probed with
/// seeded pseudorandom rational combinations; everything else on basis tuples.
ModuleAxiomReport check_module_axioms(const NLieAlgebra& alg, const ModuleAction& action, std::size_t module_dim,
                                      std::uint64_t seed = 0);

struct IrreducibilityReport {
  bool irreducible = false;
  std::optional<Subspace> witness;  ///< a proper nonzero invariant subspace
};

/// Irreducible iff no proper invariant subspace turns up among: the common
/// kernel of all rho(x), the cyclic subspaces of every basis vector, and the
/// cyclic subspaces of 5 seeded pseudorandom vectors. A zero-dimensional module
/// is not irreducible.
IrreducibilityReport is_irreducible(const LieRep& rep, std::uint64_t seed = 0);

/// Smallest invariant subspace containing v.
Subspace cyclic_subspace(const LieRep& rep, const Vector& v);

LieRep direct_sum(const LieRep& a, const LieRep& b);

/// (n+2t-1)/(n+t-1) * C(n+t-1, t), checked to be an integer. Requires n >= 2.
std::uint64_t dimension_formula(std::size_t n, std::size_t t);

struct Q2Spans {
  std::size_t symbol = 0;  ///< span of the R_ijsk symbols in S^2(so_{n+1})
  std::size_t lifted = 0;  ///< span including the degree-1 commutator parts
};

/// Spans of { R_ijsk } for so_{n+1}.
Q2Spans q2_spans(std::size_t n);
std::size_t q2_span_dimension(std::size_t n);

}  // namespace nlie
