#include "nlie/lie_rep.hpp"

#include "nlie/errors.hpp"
#include "nlie/parallel.hpp"
#include "nlie/wedge.hpp"

namespace nlie {

std::optional<std::pair<std::size_t, std::size_t>> homomorphism_violation(const LieAlgebra& algebra,
                                                                          const std::vector<Matrix>& matrices,
                                                                          Exec exec) {
  const std::size_t d = algebra.dim();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) pairs.emplace_back(i, j);

  auto probe = [&](std::size_t k) -> std::optional<bool> {
    const auto [i, j] = pairs[k];
    Matrix lhs(matrices[i].rows(), matrices[i].cols());
    const Vector& b = algebra.bracket_basis(i, j);
    for (std::size_t c = 0; c < d; ++c) {
      if (sgn(b[c]) != 0) lhs += b[c] * matrices[c];
    }
    if (lhs == commutator(matrices[i], matrices[j], Exec::serial)) return std::nullopt;
    return true;
  };
  if (auto hit = first_hit<bool>(pairs.size(), probe, exec)) return pairs[hit->index];
  return std::nullopt;
}

LieRep::LieRep(LieAlgebra algebra, std::vector<Matrix> matrices, std::vector<std::string> labels, Exec exec)
    : algebra_(std::move(algebra)), matrices_(std::move(matrices)), labels_(std::move(labels)) {
  if (matrices_.size() != algebra_.dim()) throw ShapeError("LieRep: need one matrix per algebra basis element");
  dim_ = matrices_.empty() ? 0 : matrices_.front().rows();
  for (const auto& m : matrices_) {
    if (m.rows() != dim_ || m.cols() != dim_) throw ShapeError("LieRep: matrices must be square of equal size");
  }
  if (labels_.empty()) {
    for (std::size_t i = 0; i < dim_; ++i) labels_.push_back("m" + std::to_string(i + 1));
  }
  if (labels_.size() != dim_) throw ShapeError("LieRep: label count does not match module dimension");
  if (auto bad = homomorphism_violation(algebra_, matrices_, exec)) {
    throw InternalError("LieRep: homomorphism identity fails on basis pair (" + algebra_.names()[bad->first] + ", " +
                        algebra_.names()[bad->second] + ")");
  }
}

Matrix LieRep::act(const Vector& x) const {
  if (x.size() != algebra_.dim()) throw ShapeError("LieRep::act: element length mismatch");
  Matrix out(dim_, dim_);
  for (std::size_t c = 0; c < x.size(); ++c) {
    if (sgn(x[c]) != 0) out += x[c] * matrices_[c];
  }
  return out;
}

LieRep zero_rep(const LieAlgebra& algebra, std::size_t dim) {
  return LieRep(algebra, std::vector<Matrix>(algebra.dim(), Matrix(dim, dim)));
}

LieRep adjoint_rep(const LieAlgebra& algebra) {
  std::vector<Matrix> ms;
  for (std::size_t i = 0; i < algebra.dim(); ++i) ms.push_back(algebra.ad(i));
  return LieRep(algebra, std::move(ms), algebra.names());
}

LieRep restrict_rep(const LieRep& rep, const Subspace& sub, std::vector<std::string> labels) {
  if (sub.ambient() != rep.dim()) throw ShapeError("restrict_rep: subspace lives in a different space");
  const std::size_t k = sub.dim();
  std::vector<Matrix> ms;
  for (const auto& m : rep.matrices()) {
    Matrix r(k, k);
    for (std::size_t j = 0; j < k; ++j) {
      const auto coords = sub.coordinates(mat_vec(m, sub.basis()[j]));
      if (!coords) throw ShapeError("restrict_rep: subspace is not invariant");
      for (std::size_t i = 0; i < k; ++i) r(i, j) = (*coords)[i];
    }
    ms.push_back(std::move(r));
  }
  if (labels.empty()) {
    for (std::size_t j = 0; j < k; ++j) labels.push_back("[" + rep.labels()[sub.positions()[j]] + "]");
  }
  return LieRep(rep.algebra(), std::move(ms), std::move(labels));
}

LieRep tensor_product(const LieRep& a, const LieRep& b) {
  if (!a.algebra().same_structure(b.algebra())) throw ShapeError("tensor_product: modules over different algebras");
  const Matrix ia = Matrix::identity(a.dim());
  const Matrix ib = Matrix::identity(b.dim());
  std::vector<Matrix> ms;
  for (std::size_t x = 0; x < a.algebra().dim(); ++x) {
    ms.push_back(kronecker(a.matrix(x), ib) + kronecker(ia, b.matrix(x)));
  }
  std::vector<std::string> labels;
  for (const auto& la : a.labels())
    for (const auto& lb : b.labels()) labels.push_back(la + "|" + lb);
  return LieRep(a.algebra(), std::move(ms), std::move(labels));
}

LieRep exterior_square(const LieRep& rep) {
  const std::size_t d = rep.dim();
  const auto pairs = increasing_tuples(2, d);
  std::vector<Matrix> ms;
  for (const auto& m : rep.matrices()) {
    Matrix out(pairs.size(), pairs.size());
    for (std::size_t col = 0; col < pairs.size(); ++col) {
      const std::size_t a = pairs[col][0];
      const std::size_t b = pairs[col][1];
      // m(e_a) ^ e_b + e_a ^ m(e_b)
      for (std::size_t r = 0; r < d; ++r) {
        if (sgn(m(r, a)) != 0 && r != b) {
          Tuple t{r, b};
          const int s = *sort_with_sign(t);
          Rational& slot = out(tuple_rank(t, d), col);
          if (s > 0) slot += m(r, a);
          else slot -= m(r, a);
        }
        if (sgn(m(r, b)) != 0 && r != a) {
          Tuple t{a, r};
          const int s = *sort_with_sign(t);
          Rational& slot = out(tuple_rank(t, d), col);
          if (s > 0) slot += m(r, b);
          else slot -= m(r, b);
        }
      }
    }
    ms.push_back(std::move(out));
  }
  std::vector<std::string> labels;
  for (const auto& p : pairs) labels.push_back(rep.labels()[p[0]] + "^" + rep.labels()[p[1]]);
  return LieRep(rep.algebra(), std::move(ms), std::move(labels));
}

LieRep pullback(const LieRep& rep, const LieAlgebra& source, const Matrix& map) {
  if (map.rows() != rep.algebra().dim() || map.cols() != source.dim()) throw ShapeError("pullback: map has wrong shape");
  std::vector<Matrix> ms;
  for (std::size_t w = 0; w < source.dim(); ++w) ms.push_back(rep.act(map.column(w)));
  return LieRep(source, std::move(ms), rep.labels());
}

LieRep restrict_to_eigenspace(const LieRep& rep, const std::vector<Matrix>& ops, const std::vector<Rational>& values,
                              const std::string& label_prefix) {
  if (ops.size() != values.size()) throw ShapeError("restrict_to_eigenspace: one value per operator");
  const std::size_t d = rep.dim();
  Matrix stacked(d * ops.size(), d);
  for (std::size_t k = 0; k < ops.size(); ++k) {
    const Matrix shifted = ops[k] - values[k] * Matrix::identity(d);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) stacked(k * d + r, c) = shifted(r, c);
  }
  const Subspace eigen = Subspace::kernel_of(stacked);
  std::vector<std::string> labels;
  for (std::size_t j = 0; j < eigen.dim(); ++j) labels.push_back(label_prefix + std::to_string(j + 1));
  return restrict_rep(rep, eigen, std::move(labels));
}

std::size_t intertwiner_dimension(const LieRep& a, const LieRep& b) {
  if (!a.algebra().same_structure(b.algebra())) throw ShapeError("intertwiner_dimension: different algebras");
  const std::size_t da = a.dim();
  const std::size_t db = b.dim();
  // Unknown X is db x da, variable index r * da + c.
  const std::size_t unknowns = db * da;
  Matrix system(a.algebra().dim() * unknowns, unknowns);
  for (std::size_t x = 0; x < a.algebra().dim(); ++x) {
    const Matrix& ra = a.matrix(x);
    const Matrix& rb = b.matrix(x);
    const std::size_t base = x * unknowns;
    // (X ra - rb X)(r, c) = sum_k X(r,k) ra(k,c) - sum_k rb(r,k) X(k,c)
    for (std::size_t r = 0; r < db; ++r)
      for (std::size_t c = 0; c < da; ++c) {
        const std::size_t eq = base + r * da + c;
        for (std::size_t k = 0; k < da; ++k) {
          if (sgn(ra(k, c)) != 0) system(eq, r * da + k) += ra(k, c);
        }
        for (std::size_t k = 0; k < db; ++k) {
          if (sgn(rb(r, k)) != 0) system(eq, k * da + c) -= rb(r, k);
        }
      }
  }
  return unknowns - rank(system);
}

}  // namespace nlie
