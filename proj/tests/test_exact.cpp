#include <doctest.h>

#include "nlie/errors.hpp"
#include "nlie/exact.hpp"
#include "nlie/sorep.hpp"
#include "oracles.hpp"

using namespace nlie;

TEST_SUITE("exact") {
  TEST_CASE("rational parsing and printing") {
    CHECK(to_string(make_rational(6, 4)) == "3/2");
    CHECK(to_string(make_rational(-4, 2)) == "-2");
    CHECK(to_string(parse_rational("-10/4")) == "-5/2");
    CHECK(to_string(parse_rational("7")) == "7");
    CHECK(parse_rational("0/5") == 0);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/-2"), ParseError);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
  }

  TEST_CASE("rank examples") {
    CHECK(rank(Matrix::identity(3)) == 3);
    CHECK(rank(Matrix(2, 2)) == 0);
    CHECK(rank(Matrix{{1, 2}, {2, 4}}) == 1);
    CHECK(rank(Matrix(0, 4)) == 0);
  }

  TEST_CASE("kernel examples") {
    CHECK(kernel_basis(Matrix::identity(4)).empty());
    const auto k = kernel_basis(Matrix{{1, -1}});
    REQUIRE(k.size() == 1);
    CHECK(k[0][0] == k[0][1]);
    CHECK(k[0][0] != 0);
    const Matrix lap = laplacian_matrix(4, 2);
    const auto h = kernel_basis(lap);
    CHECK(h.size() == 9);
    for (const auto& v : h) CHECK(is_zero(mat_vec(lap, v)));
  }

  TEST_CASE("span dimension") {
    const std::vector<Vector> a{{1, 0}, {0, 1}};
    const std::vector<Vector> b{{1, 1}, {2, 2}};
    CHECK(span_dimension(a) == 2);
    CHECK(span_dimension(b) == 1);
    const std::vector<Vector> ragged{{1, 0}, {1}};
    CHECK_THROWS_AS(span_dimension(ragged), ShapeError);
  }

  TEST_CASE("rank agrees with fraction-free elimination") {
    oracle::Gen gen(11);
    for (int trial = 0; trial < 60; ++trial) {
      const auto rows = static_cast<std::size_t>(gen.integer(1, 7));
      const auto cols = static_cast<std::size_t>(gen.integer(1, 7));
      Matrix m = gen.matrix(rows, cols, 2);
      // Force some dependencies.
      if (rows > 2 && trial % 2 == 0)
        for (std::size_t c = 0; c < cols; ++c) m(rows - 1, c) = m(0, c) * 3 - m(1, c);
      const std::size_t r = rank(m);
      CHECK(r == oracle::bareiss_rank(m));
      const auto k = kernel_basis(m);
      CHECK(r + k.size() == cols);
      for (const auto& v : k) CHECK(is_zero(mat_vec(m, v)));
    }
  }

  TEST_CASE("rank is invariant under row permutation and scaling") {
    oracle::Gen gen(12);
    for (int trial = 0; trial < 40; ++trial) {
      const auto rows = static_cast<std::size_t>(gen.integer(2, 6));
      const auto cols = static_cast<std::size_t>(gen.integer(2, 6));
      const Matrix m = gen.matrix(rows, cols, 1);
      const auto perm = gen.permutation(rows);
      Matrix p(rows, cols);
      for (std::size_t r = 0; r < rows; ++r) {
        const Rational s = gen.nonzero_rational();
        for (std::size_t c = 0; c < cols; ++c) p(r, c) = s * m(perm[r], c);
      }
      CHECK(rank(p) == rank(m));
    }
  }

  TEST_CASE("row echelon form is reduced") {
    oracle::Gen gen(13);
    const Matrix m = gen.matrix(5, 7, 3);
    const auto e = row_reduce(m);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      CHECK(e.reduced(r, e.pivots[r]) == 1);
      for (std::size_t q = 0; q < m.rows(); ++q)
        if (q != r) CHECK(e.reduced(q, e.pivots[r]) == 0);
    }
  }

  TEST_CASE("subspace membership and coordinates") {
    oracle::Gen gen(14);
    const std::vector<Vector> span{gen.vector(5), gen.vector(5), gen.vector(5)};
    const Subspace s = Subspace::span_of(span, 5);
    CHECK(s.dim() == oracle::bareiss_rank(Matrix::from_rows(span, 5)));
    Vector combo(5);
    for (std::size_t i = 0; i < 5; ++i) combo[i] = 2 * span[0][i] - span[2][i];
    CHECK(s.contains(combo));
    const auto c = s.coordinates(combo);
    REQUIRE(c.has_value());
    Vector back(5);
    for (std::size_t j = 0; j < s.dim(); ++j)
      for (std::size_t i = 0; i < 5; ++i) back[i] += (*c)[j] * s.basis()[j][i];
    CHECK(back == combo);
    for (std::size_t i = 0; i < s.dim(); ++i)
      for (std::size_t j = 0; j < s.dim(); ++j) CHECK(s.basis()[i][s.positions()[j]] == (i == j ? 1 : 0));
  }

  TEST_CASE("matrix helpers") {
    const Matrix a{{1, 2}, {3, 4}};
    const Matrix b{{0, 1}, {1, 0}};
    CHECK(a * b == Matrix{{2, 1}, {4, 3}});
    CHECK(commutator(a, b) == a * b - b * a);
    CHECK(kronecker(Matrix::identity(2), b).rows() == 4);
    CHECK(block_diagonal(a, b)(2, 3) == 1);
    CHECK(scalar_value(Rational(3) * Matrix::identity(3)) == Rational(3));
    CHECK_FALSE(scalar_value(a).has_value());
    CHECK(a.transpose()(0, 1) == 3);
    CHECK_THROWS_AS(a * Matrix(3, 3), ShapeError);
  }
}
