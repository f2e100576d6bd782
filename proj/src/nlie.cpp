#include "nlie/nlie.hpp"

#include <algorithm>
#include <set>

#include "nlie/basic_lie.hpp"
#include "nlie/errors.hpp"
#include "nlie/parallel.hpp"

namespace nlie {

Vector basis_vector(std::size_t dim, std::size_t i) {
  Vector v(dim);
  v.at(i) = 1;
  return v;
}

NLieAlgebra::NLieAlgebra(std::size_t arity, std::size_t dim, const std::vector<Entry>& entries)
    : arity_(arity), dim_(dim) {
  if (arity < 2) throw ArityError("n-Lie algebra arity must be at least 2, got " + std::to_string(arity));
  for (const auto& [raw, coeffs] : entries) {
    if (raw.size() != arity) throw ArityError("structure tuple " + tuple_label(raw) + " has wrong length");
    if (coeffs.size() != dim) throw ShapeError("structure coefficients for " + tuple_label(raw) + " have wrong length");
    for (auto i : raw) {
      if (i >= dim) throw IndexError("structure tuple " + tuple_label(raw) + " indexes outside the basis");
    }
    Tuple t = raw;
    const auto sign = sort_with_sign(t);
    if (!sign) {
      if (!is_zero(coeffs)) throw IndexError("repeated index in " + tuple_label(raw) + " with nonzero bracket");
      continue;
    }
    Vector v = coeffs;
    if (*sign < 0) {
      for (auto& x : v) x = -x;
    }
    auto [it, inserted] = structure_.try_emplace(t, v);
    if (!inserted && it->second != v) {
      throw IndexError("conflicting structure constants for " + tuple_label(t));
    }
  }
  std::erase_if(structure_, [](const auto& kv) { return is_zero(kv.second); });
}

namespace {

// out += coeff * [t with slot replaced by v]
void add_bracket_with(const NLieAlgebra& alg, const Tuple& t, std::size_t slot, const Vector& v, const Rational& coeff,
                      Vector& out) {
  Tuple work = t;
  for (std::size_t c = 0; c < v.size(); ++c) {
    if (sgn(v[c]) == 0) continue;
    work = t;
    work[slot] = c;
    const auto sign = sort_with_sign(work);
    if (!sign) continue;
    const auto it = alg.structure().find(work);
    if (it == alg.structure().end()) continue;
    const Rational f = (*sign > 0 ? coeff : Rational(-coeff)) * v[c];
    for (std::size_t k = 0; k < out.size(); ++k) {
      if (sgn(it->second[k]) != 0) out[k] += f * it->second[k];
    }
  }
}

void expand_bracket(const NLieAlgebra& alg, std::span<const AlgebraElement> args, std::size_t depth, Tuple& current,
                    const Rational& coeff, Vector& out) {
  if (depth == args.size()) {
    Tuple t = current;
    const auto sign = sort_with_sign(t);
    if (!sign) return;
    const auto it = alg.structure().find(t);
    if (it == alg.structure().end()) return;
    const Rational f = *sign > 0 ? coeff : Rational(-coeff);
    for (std::size_t k = 0; k < out.size(); ++k) {
      if (sgn(it->second[k]) != 0) out[k] += f * it->second[k];
    }
    return;
  }
  const Vector& a = args[depth];
  for (std::size_t c = 0; c < a.size(); ++c) {
    if (sgn(a[c]) == 0) continue;
    if (std::find(current.begin(), current.end(), c) != current.end()) continue;
    current.push_back(c);
    expand_bracket(alg, args, depth + 1, current, coeff * a[c], out);
    current.pop_back();
  }
}

// Columns of ad{left}: D(e_b) = [left..., e_b].
std::vector<Vector> adjoint_columns(const NLieAlgebra& alg, const Tuple& left) {
  std::vector<Vector> cols(alg.dim(), Vector(alg.dim()));
  Tuple t = left;
  t.push_back(0);
  for (std::size_t b = 0; b < alg.dim(); ++b) {
    t.back() = b;
    cols[b] = alg.bracket_basis(t);
  }
  return cols;
}

Vector apply_columns(const std::vector<Vector>& cols, const Vector& v) {
  Vector out(v.size());
  for (std::size_t c = 0; c < v.size(); ++c) {
    if (sgn(v[c]) == 0) continue;
    for (std::size_t k = 0; k < out.size(); ++k) {
      if (sgn(cols[c][k]) != 0) out[k] += v[c] * cols[c][k];
    }
  }
  return out;
}

std::pair<Vector, Vector> sides_with(const NLieAlgebra& alg, const std::vector<Vector>& d, const Tuple& right,
                                     LeibnizForm form) {
  const std::size_t dim = alg.dim();
  Vector lhs = apply_columns(d, alg.bracket_basis(right));
  Vector rhs(dim);
  if (form == LeibnizForm::derivation) {
    for (std::size_t p = 0; p < right.size(); ++p) add_bracket_with(alg, right, p, d[right[p]], Rational(1), rhs);
  } else {
    for (std::size_t p = 0; p < right.size(); ++p) {
      // (-1)^{n+i} with i = n + p
      Tuple moved;
      moved.push_back(0);
      for (std::size_t q = 0; q < right.size(); ++q) {
        if (q != p) moved.push_back(right[q]);
      }
      add_bracket_with(alg, moved, 0, d[right[p]], Rational(p % 2 == 0 ? 1 : -1), rhs);
    }
  }
  return {std::move(lhs), std::move(rhs)};
}

}  // namespace

Vector NLieAlgebra::bracket_basis(const Tuple& indices) const {
  if (indices.size() != arity_) throw ArityError("bracket needs " + std::to_string(arity_) + " arguments");
  Tuple t = indices;
  const auto sign = sort_with_sign(t);
  Vector out(dim_);
  if (!sign) return out;
  const auto it = structure_.find(t);
  if (it == structure_.end()) return out;
  out = it->second;
  if (*sign < 0) {
    for (auto& x : out) x = -x;
  }
  return out;
}

Vector NLieAlgebra::bracket(std::span<const AlgebraElement> args) const {
  if (args.size() != arity_) throw ArityError("bracket needs " + std::to_string(arity_) + " arguments");
  for (const auto& a : args) {
    if (a.size() != dim_) throw ShapeError("bracket argument has wrong length");
  }
  Vector out(dim_);
  Tuple current;
  expand_bracket(*this, args, 0, current, Rational(1), out);
  return out;
}

NLieAlgebra vector_product_algebra(std::size_t n) {
  if (n < 2) throw ArityError("vector product algebra needs n >= 2, got " + std::to_string(n));
  std::vector<NLieAlgebra::Entry> entries;
  for (std::size_t i = 0; i <= n; ++i) {
    Tuple t;
    for (std::size_t k = 0; k <= n; ++k) {
      if (k != i) t.push_back(k);
    }
    Vector v(n + 1);
    v[i] = (i + 1) % 2 == 0 ? 1 : -1;  // (-1)^i with 1-based i
    entries.emplace_back(std::move(t), std::move(v));
  }
  return NLieAlgebra(n, n + 1, entries);
}

std::pair<Vector, Vector> leibniz_sides(const NLieAlgebra& alg, const Tuple& left, const Tuple& right,
                                        LeibnizForm form) {
  if (left.size() + 1 != alg.arity() || right.size() != alg.arity()) throw ArityError("leibniz_sides: tuple lengths");
  return sides_with(alg, adjoint_columns(alg, left), right, form);
}

FilippovReport is_filippov(const NLieAlgebra& alg, Exec exec) {
  const std::size_t n = alg.arity();
  const std::size_t dim = alg.dim();
  const auto lefts = increasing_tuples(n - 1, dim);
  FilippovReport report;
  report.cases = lefts.size() * binomial(dim, n);

  auto probe = [&](std::size_t li) -> std::optional<LeibnizViolation> {
    const Tuple& left = lefts[li];
    const auto d = adjoint_columns(alg, left);
    if (std::all_of(d.begin(), d.end(), [](const Vector& c) { return is_zero(c); })) return std::nullopt;

    // The right tuples that can give a nonzero side: stored tuples (lhs), and
    // tuples one substitution away from a stored tuple through D (rhs terms).
    std::vector<std::vector<std::size_t>> preimages(dim);
    for (std::size_t b = 0; b < dim; ++b)
      for (std::size_t c = 0; c < dim; ++c) {
        if (sgn(d[b][c]) != 0) preimages[c].push_back(b);
      }
    std::set<Tuple> candidates;
    for (const auto& [stored, value] : alg.structure()) {
      candidates.insert(stored);
      for (std::size_t p = 0; p < stored.size(); ++p) {
        for (std::size_t b : preimages[stored[p]]) {
          Tuple t = stored;
          t[p] = b;
          if (sort_with_sign(t)) candidates.insert(std::move(t));
        }
      }
    }
    for (const auto& right : candidates) {
      auto [lhs, rhs] = sides_with(alg, d, right, LeibnizForm::derivation);
      if (lhs != rhs) return LeibnizViolation{left, right, std::move(lhs), std::move(rhs)};
    }
    return std::nullopt;
  };

  if (auto hit = first_hit<LeibnizViolation>(lefts.size(), probe, exec)) {
    report.pass = false;
    report.violation = std::move(hit->value);
  }
  return report;
}

bool is_derivation(const NLieAlgebra& alg, const Matrix& d) {
  if (d.rows() != alg.dim() || d.cols() != alg.dim()) throw ShapeError("is_derivation: matrix must be dim x dim");
  std::vector<Vector> cols;
  for (std::size_t c = 0; c < alg.dim(); ++c) cols.push_back(d.column(c));
  for (const auto& t : increasing_tuples(alg.arity(), alg.dim())) {
    const Vector lhs = mat_vec(d, alg.bracket_basis(t));
    Vector rhs(alg.dim());
    for (std::size_t p = 0; p < t.size(); ++p) add_bracket_with(alg, t, p, cols[t[p]], Rational(1), rhs);
    if (lhs != rhs) return false;
  }
  return true;
}

Matrix adjoint_map(const NLieAlgebra& alg, std::span<const AlgebraElement> args) {
  if (args.size() + 1 != alg.arity()) throw ArityError("adjoint_map needs arity - 1 arguments");
  std::vector<AlgebraElement> full(args.begin(), args.end());
  full.push_back(Vector(alg.dim()));
  Matrix m(alg.dim(), alg.dim());
  for (std::size_t b = 0; b < alg.dim(); ++b) {
    full.back() = basis_vector(alg.dim(), b);
    const Vector col = alg.bracket(full);
    for (std::size_t r = 0; r < alg.dim(); ++r) m(r, b) = col[r];
  }
  return m;
}

NLieAlgebra semidirect_sum(const NLieAlgebra& alg, const LieRep& mod) {
  if (!mod.algebra().same_structure(basic_lie_algebra(alg))) {
    throw ShapeError("semidirect_sum: module is not over the basic Lie algebra of the n-Lie algebra");
  }
  const std::size_t d = alg.dim();
  const std::size_t dm = mod.dim();
  const std::size_t total = d + dm;
  std::vector<NLieAlgebra::Entry> entries;
  for (const auto& [t, v] : alg.structure()) {
    Vector w(total);
    std::copy(v.begin(), v.end(), w.begin());
    entries.emplace_back(t, std::move(w));
  }
  const auto wedges = wedge_basis(alg.arity(), d);
  for (std::size_t w = 0; w < wedges.size(); ++w) {
    const Matrix& rho = mod.matrix(w);
    for (std::size_t m = 0; m < dm; ++m) {
      Vector v(total);
      bool nonzero = false;
      for (std::size_t r = 0; r < dm; ++r) {
        v[d + r] = rho(r, m);
        nonzero = nonzero || sgn(rho(r, m)) != 0;
      }
      if (!nonzero) continue;
      Tuple t = wedges[w];
      t.push_back(d + m);
      entries.emplace_back(std::move(t), std::move(v));
    }
  }
  return NLieAlgebra(alg.arity(), total, entries);
}

}  // namespace nlie
