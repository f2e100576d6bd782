#include "nlie/sorep.hpp"

#include <map>

#include "nlie/errors.hpp"
#include "nlie/wedge.hpp"

namespace nlie {

namespace {

// Signed position of e_ab in the so_m basis (e_ba = -e_ab, e_aa = 0).
void add_e(Vector& v, std::size_t a, std::size_t b, std::size_t m, int coeff) {
  if (a == b || coeff == 0) return;
  if (a < b) v[so_index(a, b, m)] += coeff;
  else v[so_index(b, a, m)] -= coeff;
}

Rational casimir_of_weight(std::size_t t) { return make_rational(-static_cast<long>(t * (t + 2)), 4); }

}  // namespace

std::size_t so_index(std::size_t i, std::size_t j, std::size_t m) { return tuple_rank({i, j}, m); }

LieAlgebra so_algebra(std::size_t m) {
  if (m < 3) throw IndexError("so_m needs m >= 3, got " + std::to_string(m));
  const auto pairs = increasing_tuples(2, m);
  std::vector<std::string> names;
  for (const auto& p : pairs) names.push_back("e_" + std::to_string(p[0] + 1) + "_" + std::to_string(p[1] + 1));
  return LieAlgebra(
      pairs.size(),
      [&](std::size_t x, std::size_t y) {
        const std::size_t a = pairs[x][0], b = pairs[x][1], c = pairs[y][0], d = pairs[y][1];
        // [e_ab, e_cd] = d_bc e_ad + d_ad e_bc - d_bd e_ac - d_ac e_bd
        Vector v(pairs.size());
        if (b == c) add_e(v, a, d, m, 1);
        if (a == d) add_e(v, b, c, m, 1);
        if (b == d) add_e(v, a, c, m, -1);
        if (a == c) add_e(v, b, d, m, -1);
        return v;
      },
      std::move(names));
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (auto e : exponents) d += e;
  return d;
}

std::string Monomial::label() const {
  std::string s;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i + 1);
    if (exponents[i] > 1) s += "^" + std::to_string(exponents[i]);
  }
  return s.empty() ? "1" : s;
}

namespace {

void fill_monomials(std::size_t m, std::size_t remaining, std::vector<unsigned>& current, std::vector<Monomial>& out) {
  if (current.size() + 1 == m) {
    current.push_back(static_cast<unsigned>(remaining));
    out.push_back({current});
    current.pop_back();
    return;
  }
  for (std::size_t e = remaining + 1; e-- > 0;) {
    current.push_back(static_cast<unsigned>(e));
    fill_monomials(m, remaining - e, current, out);
    current.pop_back();
  }
}

std::map<std::vector<unsigned>, std::size_t> monomial_index(const std::vector<Monomial>& ms) {
  std::map<std::vector<unsigned>, std::size_t> idx;
  for (std::size_t i = 0; i < ms.size(); ++i) idx.emplace(ms[i].exponents, i);
  return idx;
}

}  // namespace

std::vector<Monomial> monomials(std::size_t m, std::size_t t) {
  std::vector<Monomial> out;
  if (m == 0) return out;
  std::vector<unsigned> current;
  fill_monomials(m, t, current, out);
  return out;
}

LieRep polynomial_module(std::size_t m, std::size_t t) {
  const LieAlgebra so = so_algebra(m);
  const auto basis = monomials(m, t);
  const auto index = monomial_index(basis);
  const auto pairs = increasing_tuples(2, m);
  std::vector<Matrix> ms;
  for (const auto& p : pairs) {
    const std::size_t i = p[0], j = p[1];
    Matrix e(basis.size(), basis.size());
    for (std::size_t col = 0; col < basis.size(); ++col) {
      const auto& alpha = basis[col].exponents;
      // x_i d_j
      if (alpha[j] > 0) {
        auto beta = alpha;
        --beta[j];
        ++beta[i];
        e(index.at(beta), col) += alpha[j];
      }
      // - x_j d_i
      if (alpha[i] > 0) {
        auto beta = alpha;
        --beta[i];
        ++beta[j];
        e(index.at(beta), col) -= alpha[i];
      }
    }
    ms.push_back(std::move(e));
  }
  std::vector<std::string> labels;
  for (const auto& mono : basis) labels.push_back(mono.label());
  return LieRep(so, std::move(ms), std::move(labels));
}

Matrix laplacian_matrix(std::size_t m, std::size_t t) {
  const auto source = monomials(m, t);
  if (t < 2) return Matrix(0, source.size());
  const auto target = monomials(m, t - 2);
  const auto index = monomial_index(target);
  Matrix lap(target.size(), source.size());
  for (std::size_t col = 0; col < source.size(); ++col) {
    for (std::size_t i = 0; i < m; ++i) {
      const unsigned a = source[col].exponents[i];
      if (a < 2) continue;
      auto beta = source[col].exponents;
      beta[i] -= 2;
      lap(index.at(beta), col) += static_cast<long>(a * (a - 1));
    }
  }
  return lap;
}

std::size_t laplacian_kernel_dim(std::size_t m, std::size_t t) {
  const Matrix lap = laplacian_matrix(m, t);
  return lap.cols() - rank(lap);
}

LieRep harmonic_module(std::size_t m, std::size_t t) {
  const LieRep poly = polynomial_module(m, t);
  const Subspace harmonic = Subspace::kernel_of(laplacian_matrix(m, t));
  std::vector<std::string> labels;
  for (auto p : harmonic.positions()) labels.push_back("h[" + poly.labels()[p] + "]");
  return restrict_rep(poly, harmonic, std::move(labels));
}

LieRep wedge_square_module(std::size_t m) { return exterior_square(polynomial_module(m, 1)); }

LieAlgebra sl2_algebra() {
  // Same structure constants as so_3 under f1 = e_12, f2 = e_13, f3 = e_23.
  const LieAlgebra so3 = so_algebra(3);
  return LieAlgebra(
      3, [&](std::size_t i, std::size_t j) { return so3.bracket_basis(i, j); }, {"f1", "f2", "f3"});
}

std::size_t sl2_rational_multiplicity(std::size_t t) { return t % 2 == 0 ? 1 : 2; }

Matrix sl2_casimir(const LieRep& rep) {
  if (!rep.algebra().same_structure(sl2_algebra())) throw ShapeError("sl2_casimir: module is not over sl2");
  Matrix c(rep.dim(), rep.dim());
  for (const auto& f : rep.matrices()) c += f * f;
  return c;
}

std::array<Vector, 6> so4_f_basis() {
  const Rational h = make_rational(1, 2);
  std::array<Vector, 6> f;
  for (auto& v : f) v.assign(6, Rational(0));
  // e12=0, e13=1, e14=2, e23=3, e24=4, e34=5
  f[0][0] = h, f[0][5] = h;
  f[1][1] = h, f[1][4] = -h;
  f[2][2] = h, f[2][3] = h;
  f[3][0] = -h, f[3][5] = h;
  f[4][1] = h, f[4][4] = h;
  f[5][2] = -h, f[5][3] = h;
  return f;
}

LieRep sl2_module(std::size_t t) {
  const LieAlgebra sl2 = sl2_algebra();
  if (t % 2 == 0) {
    // Harmonic polynomials of degree t/2 in three variables.
    const LieRep h = harmonic_module(3, t / 2);
    return LieRep(sl2, h.matrices(), h.labels());
  }
  // The left sl2 factor of the so4 vector module is M_1 + M_1 over Q.
  const LieRep vec = polynomial_module(4, 1);
  const auto f = so4_f_basis();
  std::vector<Matrix> q1;
  for (std::size_t a = 0; a < 3; ++a) q1.push_back(vec.act(f[a]));
  const LieRep base(sl2, std::move(q1), vec.labels());
  if (t == 1) return base;
  const LieRep ambient = tensor_product(base, sl2_module(t - 1));
  return restrict_to_eigenspace(ambient, {sl2_casimir(ambient)}, {casimir_of_weight(t)}, "u");
}

LieRep so4_from_sl2_pair(const LieRep& left, const LieRep& right) {
  const LieAlgebra sl2 = sl2_algebra();
  if (!left.algebra().same_structure(sl2) || !right.algebra().same_structure(sl2)) {
    throw ShapeError("so4_from_sl2_pair: factors must be sl2 modules");
  }
  const Matrix il = Matrix::identity(left.dim());
  const Matrix ir = Matrix::identity(right.dim());
  std::array<Matrix, 6> f;
  for (std::size_t a = 0; a < 3; ++a) {
    f[a] = kronecker(left.matrix(a), ir);
    // f4..f6 satisfy the sl2 table with the opposite sign
    f[a + 3] = Rational(-1) * kronecker(il, right.matrix(a));
  }
  // e12=f1-f4, e13=f2+f5, e14=f3-f6, e23=f3+f6, e24=-f2+f5, e34=f1+f4
  std::vector<Matrix> e{f[0] - f[3], f[1] + f[4], f[2] - f[5], f[2] + f[5], f[4] - f[1], f[0] + f[3]};
  std::vector<std::string> labels;
  for (const auto& a : left.labels())
    for (const auto& b : right.labels()) labels.push_back(a + "|" + b);
  return LieRep(so_algebra(4), std::move(e), std::move(labels));
}

std::size_t so4_rational_multiplicity(std::size_t t, std::size_t r) { return (t + r) % 2 == 0 ? 1 : 2; }

LieRep so4_tensor_module(std::size_t t, std::size_t r) {
  if (t % 2 == 1 && r % 2 == 1) {
    // M_{t,r} occurs once in V (x) M_{t-1,r-1}, V = M_{1,1} the vector module;
    // cut it out as the joint Casimir eigenspace.
    const LieRep ambient =
        tensor_product(polynomial_module(4, 1), so4_from_sl2_pair(sl2_module(t - 1), sl2_module(r - 1)));
    auto [c1, c2] = casimir_matrices(ambient);
    return restrict_to_eigenspace(ambient, {c1, c2}, {casimir_of_weight(t), casimir_of_weight(r)});
  }
  return so4_from_sl2_pair(sl2_module(t), sl2_module(r));
}

std::pair<Matrix, Matrix> casimir_matrices(const LieRep& so4_rep) {
  if (!so4_rep.algebra().same_structure(so_algebra(4))) throw ShapeError("casimir_matrices: module is not over so4");
  const auto f = so4_f_basis();
  Matrix c1(so4_rep.dim(), so4_rep.dim());
  Matrix c2(so4_rep.dim(), so4_rep.dim());
  for (std::size_t a = 0; a < 3; ++a) {
    const Matrix left = so4_rep.act(f[a]);
    const Matrix right = so4_rep.act(f[a + 3]);
    c1 += left * left;
    c2 += right * right;
  }
  return {std::move(c1), std::move(c2)};
}

std::pair<Rational, Rational> casimir_values(const LieRep& so4_rep) {
  const auto [c1, c2] = casimir_matrices(so4_rep);
  const auto v1 = scalar_value(c1);
  const auto v2 = scalar_value(c2);
  if (!v1 || !v2) throw InternalError("casimir_values: Casimir operator is not scalar; module is not isotypic");
  return {*v1, *v2};
}

}  // namespace nlie
