#include "nlie/prolong.hpp"

#include <random>

#include "nlie/basic_lie.hpp"
#include "nlie/errors.hpp"
#include "nlie/parallel.hpp"
#include "nlie/sorep.hpp"
#include "nlie/wedge.hpp"

namespace nlie {

ObstructionIndex ObstructionIndex::make(std::size_t i, std::size_t j, std::size_t s, std::size_t k, std::size_t m) {
  if (!(j < s && s < k && k < m && i < m)) throw IndexError("obstruction index needs j < s < k inside so_m");
  if (i == j || i == s || i == k) throw IndexError("obstruction index needs i outside {j, s, k}");
  return {i, j, s, k};
}

std::string ObstructionIndex::label() const {
  return "R_" + std::to_string(i + 1) + "_" + std::to_string(j + 1) + "_" + std::to_string(s + 1) + "_" +
         std::to_string(k + 1);
}

std::vector<ObstructionIndex> obstruction_indices(std::size_t m) {
  std::vector<ObstructionIndex> out;
  for (std::size_t i = 0; i < m; ++i)
    for (const auto& t : increasing_tuples(3, m)) {
      if (t[0] != i && t[1] != i && t[2] != i) out.push_back({i, t[0], t[1], t[2]});
    }
  return out;
}

std::size_t so_size(const LieRep& rep) {
  const std::size_t d = rep.algebra().dim();
  std::size_t m = 3;
  while (m * (m - 1) / 2 < d) ++m;
  if (m * (m - 1) / 2 != d || !rep.algebra().same_structure(so_algebra(m))) {
    throw ShapeError("module is not over so_m");
  }
  return m;
}

namespace {

// rho(e_ab) with e_ba = -e_ab and e_aa = 0; nullptr-like zero flagged by sign 0.
struct SignedGenerator {
  const Matrix* matrix = nullptr;
  int sign = 0;
};

SignedGenerator generator(const LieRep& rep, std::size_t a, std::size_t b, std::size_t m) {
  if (a == b) return {};
  if (a < b) return {&rep.matrix(so_index(a, b, m)), 1};
  return {&rep.matrix(so_index(b, a, m)), -1};
}

void add_product(Matrix& out, SignedGenerator x, SignedGenerator y) {
  if (x.sign == 0 || y.sign == 0) return;
  Matrix p = multiply(*x.matrix, *y.matrix, Exec::serial);
  if (x.sign * y.sign > 0) out += p;
  else out -= p;
}

}  // namespace

Matrix r_operator_unchecked(const LieRep& rep, std::size_t i, std::size_t j, std::size_t s, std::size_t k) {
  const std::size_t m = so_size(rep);
  if (i >= m || j >= m || s >= m || k >= m) throw IndexError("r_operator: index outside so_m");
  Matrix r(rep.dim(), rep.dim());
  add_product(r, generator(rep, i, j, m), generator(rep, s, k, m));
  add_product(r, generator(rep, i, s, m), generator(rep, k, j, m));
  add_product(r, generator(rep, i, k, m), generator(rep, j, s, m));
  return r;
}

Matrix r_operator(const LieRep& rep, const ObstructionIndex& idx) {
  const std::size_t m = so_size(rep);
  const auto checked = ObstructionIndex::make(idx.i, idx.j, idx.s, idx.k, m);
  return r_operator_unchecked(rep, checked.i, checked.j, checked.s, checked.k);
}

ProlongReport can_prolong(const LieRep& rep, Exec exec) {
  const std::size_t m = so_size(rep);
  const auto indices = obstruction_indices(m);
  auto probe = [&](std::size_t n) -> std::optional<ProlongWitness> {
    const Matrix r = r_operator_unchecked(rep, indices[n].i, indices[n].j, indices[n].s, indices[n].k);
    const auto col = r.first_nonzero_column();
    if (!col) return std::nullopt;
    return ProlongWitness{indices[n], {}, *col, rep.labels()[*col], r.column(*col)};
  };
  ProlongReport report;
  if (auto hit = first_hit<ProlongWitness>(indices.size(), probe, exec)) {
    report.verdict = false;
    report.witness = std::move(hit->value);
  }
  return report;
}

ProlongReport prolong_check_general(const NLieAlgebra& alg, const LieRep& rep, Exec exec) {
  if (!rep.algebra().same_structure(basic_lie_algebra(alg))) {
    throw ShapeError("prolong_check_general: module is not over the basic Lie algebra");
  }
  const std::size_t n = alg.arity();
  const std::size_t d = alg.dim();
  const auto lefts = increasing_tuples(n, d);
  const auto rights = increasing_tuples(n - 2, d);
  const Matrix zero(rep.dim(), rep.dim());

  // rho of the wedge of basis vectors t (any order), with its sign.
  auto wedge_rho = [&](Tuple t, Matrix& out, const Rational& coeff) {
    const auto sign = sort_with_sign(t);
    if (!sign) return;
    const Matrix& m = rep.matrix(tuple_rank(t, d));
    out += (*sign > 0 ? coeff : Rational(-coeff)) * m;
  };

  auto probe = [&](std::size_t flat) -> std::optional<ProlongWitness> {
    const Tuple& a = lefts[flat / rights.size()];
    const Tuple& rest = rights[flat % rights.size()];
    Matrix lhs = zero;
    const Vector w = alg.bracket_basis(a);
    for (std::size_t c = 0; c < d; ++c) {
      if (sgn(w[c]) == 0) continue;
      Tuple t{c};
      t.insert(t.end(), rest.begin(), rest.end());
      wedge_rho(std::move(t), lhs, w[c]);
    }
    Matrix rhs = zero;
    for (std::size_t p = 0; p < n; ++p) {
      Tuple without;
      for (std::size_t q = 0; q < n; ++q) {
        if (q != p) without.push_back(a[q]);
      }
      Tuple with{a[p]};
      with.insert(with.end(), rest.begin(), rest.end());
      Matrix x = zero, y = zero;
      wedge_rho(std::move(without), x, Rational(1));
      wedge_rho(std::move(with), y, Rational(1));
      if (x.is_zero() || y.is_zero()) continue;
      // (-1)^{i+n} with 1-based i = p + 1
      if ((p + 1 + n) % 2 == 0) rhs += multiply(x, y, Exec::serial);
      else rhs -= multiply(x, y, Exec::serial);
    }
    const Matrix diff = lhs - rhs;
    const auto col = diff.first_nonzero_column();
    if (!col) return std::nullopt;
    Tuple all = a;
    all.insert(all.end(), rest.begin(), rest.end());
    return ProlongWitness{std::nullopt, std::move(all), *col, rep.labels()[*col], diff.column(*col)};
  };

  ProlongReport report;
  if (auto hit = first_hit<ProlongWitness>(lefts.size() * rights.size(), probe, exec)) {
    report.verdict = false;
    report.witness = std::move(hit->value);
  }
  return report;
}

LieRep transport_to_basic(const LieRep& so_rep, std::size_t n) {
  if (so_size(so_rep) != n + 1) throw ShapeError("transport_to_basic: module is not over so_{n+1}");
  return pullback(so_rep, basic_lie_algebra(vector_product_algebra(n)), iso_to_so(n));
}

ModuleAction action_from_rep(const NLieAlgebra& alg, const LieRep& rep) {
  if (!rep.algebra().same_structure(basic_lie_algebra(alg))) {
    throw ShapeError("action_from_rep: module is not over the basic Lie algebra");
  }
  const std::size_t d = alg.dim();
  return [rep, d](std::span<const AlgebraElement> args, const Vector& m) {
    const Vector w = expand_wedge(args, d);
    Vector out(rep.dim());
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (sgn(w[k]) == 0) continue;
      const Vector part = mat_vec(rep.matrix(k), m);
      for (std::size_t r = 0; r < out.size(); ++r) out[r] += w[k] * part[r];
    }
    return out;
  };
}

std::string to_string(ModuleAxiom axiom) {
  switch (axiom) {
    case ModuleAxiom::linearity: return "linearity";
    case ModuleAxiom::skew_symmetry: return "skew-symmetry";
    case ModuleAxiom::adjacent_swap: return "adjacent-swap";
    case ModuleAxiom::leibniz_last_slot: return "leibniz-last-slot";
    case ModuleAxiom::leibniz_mixed: return "leibniz-mixed";
  }
  return "unknown";
}

namespace {

Vector random_vector(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> num(-4, 4);
  std::uniform_int_distribution<long> den(1, 3);
  Vector v(n);
  for (auto& x : v) x = make_rational(num(rng), den(rng));
  return v;
}

Vector combine(const Rational& a, const Vector& x, const Rational& b, const Vector& y) {
  Vector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = a * x[i] + b * y[i];
  return out;
}

void add_to(Vector& acc, const Vector& v, int sign = 1) {
  for (std::size_t i = 0; i < acc.size(); ++i) {
    if (sign > 0) acc[i] += v[i];
    else acc[i] -= v[i];
  }
}

}  // namespace

ModuleAxiomReport check_module_axioms(const NLieAlgebra& alg, const ModuleAction& action, std::size_t module_dim,
                                      std::uint64_t seed) {
  const std::size_t n = alg.arity();
  const std::size_t d = alg.dim();
  auto fail = [](ModuleAxiom a, std::string detail) { return ModuleAxiomReport{false, a, std::move(detail)}; };
  auto basis_list = [&](const Tuple& t) {
    std::vector<AlgebraElement> v;
    for (auto i : t) v.push_back(basis_vector(d, i));
    return v;
  };
  // w_slot with m at 1-based `slot` and the algebra arguments in `args` (in slot order).
  auto omega = [&](const std::vector<AlgebraElement>& args, std::size_t slot, const Vector& m) {
    Vector v = action(args, m);
    if ((n - slot) % 2 == 1) {
      for (auto& x : v) x = -x;
    }
    return v;
  };

  // Linearity in every slot.
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<AlgebraElement> args;
    for (std::size_t p = 0; p + 1 < n; ++p) args.push_back(random_vector(rng, d));
    const Vector m1 = random_vector(rng, module_dim), m2 = random_vector(rng, module_dim);
    const Rational al = make_rational(static_cast<long>(trial) + 2, 3), be = make_rational(-5, static_cast<long>(trial) + 2);
    if (action(args, combine(al, m1, be, m2)) != combine(al, action(args, m1), be, action(args, m2))) {
      return fail(ModuleAxiom::linearity, "module slot");
    }
    for (std::size_t p = 0; p < args.size(); ++p) {
      const Vector y = random_vector(rng, d);
      auto a1 = args, a2 = args, a3 = args;
      a2[p] = y;
      a3[p] = combine(al, args[p], be, y);
      if (action(a3, m1) != combine(al, action(a1, m1), be, action(a2, m1))) {
        return fail(ModuleAxiom::linearity, "algebra slot " + std::to_string(p + 1));
      }
    }
  }

  const auto lefts = increasing_tuples(n - 1, d);
  std::vector<Vector> module_basis;
  for (std::size_t k = 0; k < module_dim; ++k) module_basis.push_back(basis_vector(module_dim, k));

  // (a) skew-symmetry in the algebra arguments.
  for (const auto& t : lefts) {
    for (std::size_t p = 0; p + 1 < t.size(); ++p) {
      Tuple swapped = t;
      std::swap(swapped[p], swapped[p + 1]);
      Tuple repeated = t;
      repeated[p + 1] = repeated[p];
      for (const auto& m : module_basis) {
        Vector sum = action(basis_list(t), m);
        add_to(sum, action(basis_list(swapped), m));
        if (!is_zero(sum)) return fail(ModuleAxiom::skew_symmetry, "swap in " + tuple_label(t));
        if (!is_zero(action(basis_list(repeated), m))) {
          return fail(ModuleAxiom::skew_symmetry, "repeated argument in " + tuple_label(repeated));
        }
      }
    }
  }

  // (b) w_i(.., m, a_{i+1}, ..) = -w_{i+1}(.., a_{i+1}, m, ..).
  for (const auto& t : lefts) {
    const auto args = basis_list(t);
    for (std::size_t slot = 1; slot < n; ++slot) {
      for (const auto& m : module_basis) {
        Vector sum = omega(args, slot, m);
        add_to(sum, omega(args, slot + 1, m));
        if (!is_zero(sum)) return fail(ModuleAxiom::adjacent_swap, "slot " + std::to_string(slot));
      }
    }
  }

  // (c) w_n(A, w_n(B, m)) = sum_p w_n(B[p -> w(A, b_p)], m) + w_n(B, w_n(A, m)).
  for (const auto& a : lefts) {
    const auto aargs = basis_list(a);
    for (const auto& b : lefts) {
      const auto bargs = basis_list(b);
      for (const auto& m : module_basis) {
        const Vector lhs = action(aargs, action(bargs, m));
        Vector rhs = action(bargs, action(aargs, m));
        for (std::size_t p = 0; p < b.size(); ++p) {
          auto inner = aargs;
          inner.push_back(bargs[p]);
          auto replaced = bargs;
          replaced[p] = alg.bracket(inner);
          add_to(rhs, action(replaced, m));
        }
        if (lhs != rhs) return fail(ModuleAxiom::leibniz_last_slot, tuple_label(a) + " x " + tuple_label(b));
      }
    }
  }

  // (d) w_{n-1}(P, m, w(C)) = sum_p w_{p+1}(c_1.., w_{n-1}(P, m, c_p), ..c_n).
  for (const auto& p : increasing_tuples(n - 2, d)) {
    const auto pargs = basis_list(p);
    for (const auto& c : increasing_tuples(n, d)) {
      const auto cargs = basis_list(c);
      for (const auto& m : module_basis) {
        auto largs = pargs;
        largs.push_back(alg.bracket(cargs));
        const Vector lhs = omega(largs, n - 1, m);
        Vector rhs(module_dim);
        for (std::size_t q = 0; q < n; ++q) {
          auto inner_args = pargs;
          inner_args.push_back(cargs[q]);
          const Vector inner = omega(inner_args, n - 1, m);
          std::vector<AlgebraElement> outer;
          for (std::size_t r = 0; r < n; ++r) {
            if (r != q) outer.push_back(cargs[r]);
          }
          add_to(rhs, omega(outer, q + 1, inner));
        }
        if (lhs != rhs) return fail(ModuleAxiom::leibniz_mixed, tuple_label(p) + " x " + tuple_label(c));
      }
    }
  }
  return {};
}

Subspace cyclic_subspace(const LieRep& rep, const Vector& v) {
  Subspace s(rep.dim());
  std::vector<Vector> queue;
  if (s.insert(v)) queue.push_back(v);
  while (!queue.empty() && s.dim() < rep.dim()) {
    const Vector u = std::move(queue.back());
    queue.pop_back();
    for (const auto& m : rep.matrices()) {
      Vector w = mat_vec(m, u);
      if (s.insert(w)) queue.push_back(std::move(w));
    }
  }
  return s;
}

IrreducibilityReport is_irreducible(const LieRep& rep, std::uint64_t seed) {
  const std::size_t d = rep.dim();
  if (d == 0) return {false, std::nullopt};
  auto proper = [d](const Subspace& s) { return s.dim() > 0 && s.dim() < d; };

  Matrix stacked(rep.matrices().size() * d, d);
  for (std::size_t x = 0; x < rep.matrices().size(); ++x)
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) stacked(x * d + r, c) = rep.matrix(x)(r, c);
  Subspace invariants = Subspace::kernel_of(stacked);
  if (proper(invariants)) return {false, std::move(invariants)};

  for (std::size_t k = 0; k < d; ++k) {
    Subspace s = cyclic_subspace(rep, basis_vector(d, k));
    if (proper(s)) return {false, std::move(s)};
  }
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < 5; ++trial) {
    Subspace s = cyclic_subspace(rep, random_vector(rng, d));
    if (proper(s)) return {false, std::move(s)};
  }
  return {true, std::nullopt};
}

LieRep direct_sum(const LieRep& a, const LieRep& b) {
  if (!a.algebra().same_structure(b.algebra())) throw ShapeError("direct_sum: modules over different algebras");
  std::vector<Matrix> ms;
  for (std::size_t x = 0; x < a.algebra().dim(); ++x) ms.push_back(block_diagonal(a.matrix(x), b.matrix(x)));
  std::vector<std::string> labels;
  for (const auto& l : a.labels()) labels.push_back("1:" + l);
  for (const auto& l : b.labels()) labels.push_back("2:" + l);
  return LieRep(a.algebra(), std::move(ms), std::move(labels));
}

std::uint64_t dimension_formula(std::size_t n, std::size_t t) {
  if (n < 2) throw ArityError("dimension_formula needs n >= 2");
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), n + t - 1, t);
  const mpz_class num = mpz_class(static_cast<unsigned long>(n + 2 * t - 1)) * c;
  const mpz_class den(static_cast<unsigned long>(n + t - 1));
  if (num % den != 0) throw InternalError("dimension_formula: non-integral value");
  const mpz_class q = num / den;
  return q.get_ui();
}

Q2Spans q2_spans(std::size_t n) {
  const std::size_t m = n + 1;
  const LieAlgebra so = so_algebra(m);
  const std::size_t dim = so.dim();
  const std::size_t sym = binomial(dim + 1, 2);
  // Coordinates: symmetric pairs (x <= y) first, then the degree-1 part.
  auto sym_index = [dim](std::size_t x, std::size_t y) {
    if (x > y) std::swap(x, y);
    return x * dim - x * (x - 1) / 2 + (y - x);
  };
  std::vector<Vector> symbols, lifted;
  for (const auto& idx : obstruction_indices(m)) {
    Vector v(sym + dim);
    auto term = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
      // e_ab e_cd = e_ab . e_cd + [e_ab, e_cd] / 2
      const int s1 = a < b ? 1 : -1, s2 = c < d ? 1 : -1;
      const std::size_t x = so_index(std::min(a, b), std::max(a, b), m);
      const std::size_t y = so_index(std::min(c, d), std::max(c, d), m);
      v[sym_index(x, y)] += s1 * s2;
      const Vector br = so.bracket_basis(x, y);
      for (std::size_t k = 0; k < dim; ++k) {
        if (sgn(br[k]) != 0) v[sym + k] += make_rational(s1 * s2, 2) * br[k];
      }
    };
    term(idx.i, idx.j, idx.s, idx.k);
    term(idx.i, idx.s, idx.k, idx.j);
    term(idx.i, idx.k, idx.j, idx.s);
    lifted.push_back(v);
    v.resize(sym);
    symbols.push_back(std::move(v));
  }
  return {span_dimension(symbols), span_dimension(lifted)};
}

std::size_t q2_span_dimension(std::size_t n) {
  if (n < 2) throw ArityError("q2_span_dimension needs n >= 2");
  return q2_spans(n).symbol;
}

}  // namespace nlie
