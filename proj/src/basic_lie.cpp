#include "nlie/basic_lie.hpp"

#include "nlie/errors.hpp"
#include "nlie/parallel.hpp"
#include "nlie/sorep.hpp"

namespace nlie {

std::vector<WedgeIndex> wedge_basis(std::size_t arity, std::size_t dim) {
  if (arity == 0) return {};
  return increasing_tuples(arity - 1, dim);
}

Vector basic_bracket(const NLieAlgebra& alg, const WedgeIndex& a, const WedgeIndex& b, BasicBracketForm form,
                     SecondFormSign sign) {
  const std::size_t n = alg.arity();
  const std::size_t dim = alg.dim();
  if (a.size() + 1 != n || b.size() + 1 != n) throw ArityError("basic_bracket: wedges must have n-1 factors");
  Vector out(binomial(dim, n - 1));
  std::vector<Vector> factors;
  for (std::size_t p = 0; p + 1 < n; ++p) {
    factors.clear();
    Tuple inner;
    if (form == BasicBracketForm::first) {
      inner = a;
      inner.push_back(b[p]);
      factors.push_back(alg.bracket_basis(inner));
      for (std::size_t q = 0; q + 1 < n; ++q) {
        if (q != p) factors.push_back(basis_vector(dim, b[q]));
      }
    } else {
      for (std::size_t q = 0; q + 1 < n; ++q) {
        if (q != p) factors.push_back(basis_vector(dim, a[q]));
      }
      inner.push_back(a[p]);
      inner.insert(inner.end(), b.begin(), b.end());
      factors.push_back(alg.bracket_basis(inner));
    }
    // 1-based i = p + 1
    const std::size_t exponent =
        form == BasicBracketForm::first || sign == SecondFormSign::i_plus_one ? p + 2 : p + 1 + n;
    const Vector term = expand_wedge(factors, dim);
    for (std::size_t k = 0; k < out.size(); ++k) {
      if (sgn(term[k]) == 0) continue;
      if (exponent % 2 == 0) out[k] += term[k];
      else out[k] -= term[k];
    }
  }
  return out;
}

LieAlgebra basic_lie_algebra(const NLieAlgebra& alg) {
  const auto basis = wedge_basis(alg.arity(), alg.dim());
  std::vector<std::string> names;
  for (const auto& w : basis) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "^e" : "e") + std::to_string(w[i] + 1);
    names.push_back(s.empty() ? "1" : s);
  }
  return LieAlgebra(
      basis.size(), [&](std::size_t i, std::size_t j) { return basic_bracket(alg, basis[i], basis[j]); },
      std::move(names));
}

bool basic_bracket_is_antisymmetric(const NLieAlgebra& alg) {
  const auto basis = wedge_basis(alg.arity(), alg.dim());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i; j < basis.size(); ++j) {
      Vector ab = basic_bracket(alg, basis[i], basis[j]);
      const Vector ba = basic_bracket(alg, basis[j], basis[i]);
      for (std::size_t k = 0; k < ab.size(); ++k) ab[k] += ba[k];
      if (!is_zero(ab)) return false;
    }
  return true;
}

JacobiReport jacobi_check(const LieAlgebra& algebra, Exec exec) {
  const std::size_t d = algebra.dim();
  std::vector<std::array<std::size_t, 3>> triples;
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = x + 1; y < d; ++y)
      for (std::size_t z = y + 1; z < d; ++z) triples.push_back({x, y, z});

  auto probe = [&](std::size_t k) -> std::optional<Vector> {
    const auto [x, y, z] = triples[k];
    const Vector ex = basis_vector(d, x), ey = basis_vector(d, y), ez = basis_vector(d, z);
    Vector sum = algebra.bracket(ex, algebra.bracket_basis(y, z));
    const Vector t2 = algebra.bracket(ey, algebra.bracket_basis(z, x));
    const Vector t3 = algebra.bracket(ez, algebra.bracket_basis(x, y));
    for (std::size_t i = 0; i < d; ++i) sum[i] += t2[i] + t3[i];
    if (is_zero(sum)) return std::nullopt;
    return sum;
  };
  JacobiReport report;
  if (auto hit = first_hit<Vector>(triples.size(), probe, exec)) {
    report.pass = false;
    report.triple = triples[hit->index];
    report.residual = std::move(hit->value);
  }
  return report;
}

bool is_lie_homomorphism(const LieAlgebra& src, const LieAlgebra& dst, const Matrix& map) {
  if (map.rows() != dst.dim() || map.cols() != src.dim()) throw ShapeError("is_lie_homomorphism: map has wrong shape");
  std::vector<Vector> images;
  for (std::size_t w = 0; w < src.dim(); ++w) images.push_back(map.column(w));
  for (std::size_t i = 0; i < src.dim(); ++i)
    for (std::size_t j = i + 1; j < src.dim(); ++j) {
      if (mat_vec(map, src.bracket_basis(i, j)) != dst.bracket(images[i], images[j])) return false;
    }
  return true;
}

Matrix iso_to_so(std::size_t n) {
  if (n < 2) throw ArityError("iso_to_so needs n >= 2");
  const std::size_t m = n + 1;
  const auto wedges = wedge_basis(n, m);
  Matrix map(binomial(m, 2), wedges.size());
  for (std::size_t w = 0; w < wedges.size(); ++w) {
    Tuple complement;
    for (std::size_t k = 0, p = 0; k < m; ++k) {
      if (p < wedges[w].size() && wedges[w][p] == k) ++p;
      else complement.push_back(k);
    }
    // (-1)^{i+j+n+1} with 1-based i, j
    const std::size_t exponent = complement[0] + complement[1] + 2 + n + 1;
    map(tuple_rank(complement, m), w) = exponent % 2 == 0 ? 1 : -1;
  }
  if (rank(map) != wedges.size() || map.rows() != map.cols()) throw InternalError("iso_to_so: map is not bijective");
  if (!is_lie_homomorphism(basic_lie_algebra(vector_product_algebra(n)), so_algebra(m), map)) {
    throw InternalError("iso_to_so: map is not a Lie homomorphism");
  }
  return map;
}

std::vector<Matrix> adjoint_maps(const NLieAlgebra& alg) {
  std::vector<Matrix> out;
  for (const auto& w : wedge_basis(alg.arity(), alg.dim())) {
    std::vector<AlgebraElement> args;
    for (auto i : w) args.push_back(basis_vector(alg.dim(), i));
    out.push_back(adjoint_map(alg, args));
  }
  return out;
}

LieRep nlie_adjoint_rep(const NLieAlgebra& alg) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < alg.dim(); ++i) labels.push_back("e" + std::to_string(i + 1));
  return LieRep(basic_lie_algebra(alg), adjoint_maps(alg), std::move(labels));
}

}  // namespace nlie
