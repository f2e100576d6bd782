#pragma once

// Test-only reference computations, written independently of the library
// kernels they check.

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "nlie/exact.hpp"
#include "nlie/lie_rep.hpp"
#include "nlie/nlie.hpp"

namespace oracle {

using nlie::Matrix;
using nlie::Rational;
using nlie::Vector;

/// Fraction-free (Bareiss) rank after clearing row denominators.
std::size_t bareiss_rank(const Matrix& m);

/// Bracket of basis vectors by inversion counting against the stored table.
Vector basis_bracket(const nlie::NLieAlgebra& alg, const std::vector<std::size_t>& idx);
/// Multilinear bracket of general vectors, summing over all index combinations.
Vector bracket(const nlie::NLieAlgebra& alg, const std::vector<Vector>& args);

/// Leibniz rule over every ordered basis tuple (not only increasing ones).
/// Returns true when the identity holds everywhere.
bool filippov_all_tuples(const nlie::NLieAlgebra& alg);

/// Polynomials as exponent -> coefficient maps.
using Poly = std::map<std::vector<unsigned>, Rational>;
Poly monomial(std::vector<unsigned> exponents);
/// (x_i d_j - x_j d_i) p.
Poly apply_e(std::size_t i, std::size_t j, const Poly& p);
Poly multiply(const Poly& a, const Poly& b);
/// Coordinates in the basis of nlie::monomials(m, t).
Vector coordinates(const Poly& p, std::size_t m, std::size_t t);
Poly from_coordinates(const Vector& v, std::size_t m, std::size_t t);

/// C(m+t-1, t) - C(m+t-3, t-2).
std::uint64_t harmonic_dimension(std::size_t m, std::size_t t);

/// The defining m x m matrix of e_ij: E_ij - E_ji.
Matrix so_defining(std::size_t i, std::size_t j, std::size_t m);

/// Hand-rolled generators for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi);
  Rational rational(long bound = 5);
  Rational nonzero_rational(long bound = 5);
  Vector vector(std::size_t n, long bound = 5);
  std::vector<std::size_t> permutation(std::size_t n);
  Matrix matrix(std::size_t rows, std::size_t cols, long bound = 3);

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle
