#include <doctest.h>

#include "nlie/basic_lie.hpp"
#include "nlie/errors.hpp"
#include "nlie/nlie.hpp"
#include "nlie/prolong.hpp"
#include "nlie/sorep.hpp"
#include "oracles.hpp"

using namespace nlie;

namespace {

Vector e(std::size_t dim, std::size_t i) { return basis_vector(dim, i); }

Vector neg(Vector v) {
  for (auto& x : v) x = -x;
  return v;
}

NLieAlgebra v3_with(const Tuple& t, Vector value) {
  const NLieAlgebra v3 = vector_product_algebra(3);
  std::vector<NLieAlgebra::Entry> entries;
  for (const auto& [k, v] : v3.structure()) entries.emplace_back(k, k == t ? value : v);
  return NLieAlgebra(3, 4, entries);
}

}  // namespace

TEST_SUITE("nlie") {
  TEST_CASE("wedge bookkeeping") {
    CHECK(increasing_tuples(2, 4).size() == 6);
    CHECK(tuple_label(increasing_tuples(2, 4)[2]) == "(1,4)");
    Tuple t{2, 0, 1};
    CHECK(sort_with_sign(t) == 1);
    CHECK(t == Tuple{0, 1, 2});
    Tuple u{1, 0, 2};
    CHECK(sort_with_sign(u) == -1);
    Tuple w{1, 1};
    CHECK_FALSE(sort_with_sign(w).has_value());
    for (std::size_t k = 0; k < 10; ++k) CHECK(tuple_rank(increasing_tuples(3, 5)[k], 5) == k);
    const std::vector<Vector> f{e(3, 1), e(3, 0)};
    CHECK(expand_wedge(f, 3) == Vector{-1, 0, 0});
  }

  TEST_CASE("vector product brackets") {
    const NLieAlgebra v3 = vector_product_algebra(3);
    CHECK(v3.bracket_basis({1, 2, 3}) == neg(e(4, 0)));
    CHECK(v3.bracket_basis({0, 1, 2}) == e(4, 3));
    CHECK(v3.bracket_basis({0, 1, 3}) == neg(e(4, 2)));
    CHECK(v3.bracket_basis({1, 0, 3}) == e(4, 2));
    const NLieAlgebra v2 = vector_product_algebra(2);
    CHECK(v2.bracket_basis({0, 2}) == e(3, 1));
    const std::vector<Vector> rep{e(4, 1), e(4, 1), e(4, 2)};
    CHECK(is_zero(v3.bracket(rep)));
    CHECK_THROWS_AS(vector_product_algebra(1), ArityError);
    const std::vector<Vector> two{e(4, 0), e(4, 1)};
    CHECK_THROWS_AS(v3.bracket(two), ArityError);
    const std::vector<Vector> bad{e(4, 0), e(4, 1), e(3, 2)};
    CHECK_THROWS_AS(v3.bracket(bad), ShapeError);
  }

  TEST_CASE("construction normalizes and rejects conflicts") {
    const NLieAlgebra a(3, 4, {{{2, 1, 3}, {1, 0, 0, 0}}});
    CHECK(a.structure().at({1, 2, 3}) == Vector{-1, 0, 0, 0});
    CHECK_THROWS_AS(NLieAlgebra(3, 4, {{{1, 1, 3}, {1, 0, 0, 0}}}), IndexError);
    CHECK_THROWS_AS(NLieAlgebra(3, 4, {{{1, 2, 3}, {1, 0, 0, 0}}, {{2, 1, 3}, {1, 0, 0, 0}}}), IndexError);
    CHECK_NOTHROW(NLieAlgebra(3, 4, {{{1, 2, 3}, {1, 0, 0, 0}}, {{2, 1, 3}, {-1, 0, 0, 0}}}));
    CHECK_THROWS_AS(NLieAlgebra(3, 4, {{{1, 2, 7}, {1, 0, 0, 0}}}), IndexError);
    CHECK_THROWS_AS(NLieAlgebra(1, 4), ArityError);
  }

  TEST_CASE("Filippov identity on vector product algebras") {
    for (std::size_t n = 2; n <= 5; ++n) {
      const auto r = is_filippov(vector_product_algebra(n));
      CHECK(r.pass);
      CHECK_FALSE(r.violation.has_value());
    }
    CHECK(is_filippov(NLieAlgebra(3, 5)).pass);
    CHECK(oracle::filippov_all_tuples(vector_product_algebra(2)));
    CHECK(oracle::filippov_all_tuples(vector_product_algebra(3)));
  }

  TEST_CASE("a perturbed constant is caught with a witness") {
    // [e1,e2,e3] = e3 + e4: the extra e3 component breaks the identity.
    const NLieAlgebra bad = v3_with({0, 1, 2}, {0, 0, 1, 1});
    const auto r = is_filippov(bad);
    CHECK_FALSE(r.pass);
    REQUIRE(r.violation.has_value());
    CHECK(r.violation->lhs != r.violation->rhs);
    const auto [lhs, rhs] = leibniz_sides(bad, r.violation->left, r.violation->right);
    CHECK(lhs == r.violation->lhs);
    CHECK(rhs == r.violation->rhs);
    CHECK_FALSE(oracle::filippov_all_tuples(bad));
  }

  TEST_CASE("rescaled vector products stay Filippov") {
    // [e1,e2,e3] = 2 e4 or -e4 is the vector product of a diagonal form, so both checkers accept it.
    for (const Rational& c : {Rational(2), Rational(-1)}) {
      const NLieAlgebra a = v3_with({0, 1, 2}, {0, 0, 0, c});
      CHECK(is_filippov(a).pass);
      CHECK(oracle::filippov_all_tuples(a));
    }
  }

  TEST_CASE("both Leibniz forms agree on V3") {
    const NLieAlgebra v3 = vector_product_algebra(3);
    const NLieAlgebra bad = v3_with({0, 1, 2}, {0, 0, 1, 1});
    for (const auto& l : increasing_tuples(2, 4))
      for (const auto& r : increasing_tuples(3, 4)) {
        CHECK(leibniz_sides(v3, l, r, LeibnizForm::derivation) == leibniz_sides(v3, l, r, LeibnizForm::moved_front));
        CHECK(leibniz_sides(bad, l, r, LeibnizForm::derivation) == leibniz_sides(bad, l, r, LeibnizForm::moved_front));
      }
  }

  TEST_CASE("derivations") {
    const NLieAlgebra v3 = vector_product_algebra(3);
    CHECK(is_derivation(v3, Matrix(4, 4)));
    CHECK_FALSE(is_derivation(v3, Matrix::identity(4)));
    CHECK_THROWS_AS(is_derivation(v3, Matrix(3, 3)), ShapeError);
    for (std::size_t n = 2; n <= 5; ++n) {
      const NLieAlgebra v = vector_product_algebra(n);
      for (const auto& d : adjoint_maps(v)) CHECK(is_derivation(v, d));
    }
  }

  TEST_CASE("adjoint map examples") {
    const NLieAlgebra v3 = vector_product_algebra(3);
    const std::vector<Vector> args{e(4, 0), e(4, 1)};
    const Matrix ad = adjoint_map(v3, args);
    CHECK(ad.column(2) == e(4, 3));
    CHECK(ad.column(3) == neg(e(4, 2)));
    CHECK(is_zero(ad.column(0)));
    CHECK(is_zero(ad.column(1)));
    const NLieAlgebra v2 = vector_product_algebra(2);
    const std::vector<Vector> one{e(3, 0)};
    const Matrix ad2 = adjoint_map(v2, one);
    CHECK(ad2.column(1) == neg(e(3, 2)));
    CHECK(ad2.column(2) == e(3, 1));
    CHECK_THROWS_AS(adjoint_map(v3, one), ArityError);
  }

  TEST_CASE("semidirect sums") {
    const NLieAlgebra v3 = vector_product_algebra(3);
    const NLieAlgebra with_adj = semidirect_sum(v3, nlie_adjoint_rep(v3));
    CHECK(with_adj.dim() == 8);
    CHECK(with_adj.arity() == 3);
    CHECK(is_filippov(with_adj).pass);
    for (std::size_t n = 2; n <= 4; ++n) {
      const NLieAlgebra v = vector_product_algebra(n);
      CHECK(is_filippov(semidirect_sum(v, zero_rep(basic_lie_algebra(v), 1))).pass);
    }
    const LieRep m10 = transport_to_basic(so4_tensor_module(1, 0), 3);
    CHECK_FALSE(is_filippov(semidirect_sum(v3, m10)).pass);
    CHECK_THROWS_AS(semidirect_sum(v3, polynomial_module(4, 1)), ShapeError);
  }

  TEST_CASE("semidirect sum brackets follow the slot sign rule") {
    const NLieAlgebra v3 = vector_product_algebra(3);
    const LieRep adj = nlie_adjoint_rep(v3);
    const NLieAlgebra s = semidirect_sum(v3, adj);
    // [e1, e2, m3] with m in the last slot is rho(e1^e2) m3 = [e1,e2,e3] = e4, placed in M.
    const Vector last = s.bracket_basis({0, 1, 6});
    CHECK(last[7] == 1);
    // Moving m one slot left flips the sign.
    CHECK(s.bracket_basis({0, 6, 1}) == neg(last));
    CHECK(is_zero(s.bracket_basis({0, 5, 6})));
  }
}
