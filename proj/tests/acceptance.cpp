// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "nlie/basic_lie.hpp"
#include "nlie/prolong.hpp"
#include "nlie/sorep.hpp"

using namespace nlie;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      note = what;
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

bool run(int number, const char* title, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = Clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.ok = false;
    out.note = std::string("exception: ") + e.what();
  }
  std::printf("%s %2d %s (%.2fs)%s%s\n", out.ok ? "PASS" : "FAIL", number, title, seconds_since(start),
              out.note.empty() ? "" : ": ", out.note.c_str());
  return out.ok;
}

NLieAlgebra perturbed_v3() {
  const NLieAlgebra v3 = vector_product_algebra(3);
  std::vector<NLieAlgebra::Entry> entries(v3.structure().begin(), v3.structure().end());
  for (auto& [t, v] : entries)
    if (t == Tuple{0, 1, 2}) v[2] += 1;
  return NLieAlgebra(3, 4, entries);
}

// Residual recomputed from the obstruction operator itself.
bool witness_checks_out(const LieRep& rep, const ProlongReport& r) {
  if (r.verdict || !r.witness || !r.witness->index) return false;
  const Vector again = r_operator(rep, *r.witness->index).column(r.witness->basis);
  return again == r.witness->residual && !is_zero(again);
}

bool invariant(const LieRep& rep, const Subspace& sub) {
  for (const auto& m : rep.matrices())
    for (const auto& b : sub.basis())
      if (!sub.contains(mat_vec(m, b))) return false;
  return true;
}

}  // namespace

int main() {
  bool all = true;

  all &= run(1, "Filippov identity on V_2..V_5, perturbation caught", [](Outcome& o) {
    const auto start = Clock::now();
    for (std::size_t n = 2; n <= 5; ++n)
      o.require(is_filippov(vector_product_algebra(n)).pass, "V_" + std::to_string(n) + " rejected");
    o.require(seconds_since(start) < 5.0, "over 5 s");
    const auto bad = is_filippov(perturbed_v3());
    o.require(!bad.pass && bad.violation.has_value(), "perturbed V_3 accepted");
    if (bad.violation) o.require(bad.violation->lhs != bad.violation->rhs, "witness sides agree");
  });

  all &= run(2, "L(V_n) is a Lie algebra isomorphic to so_{n+1}", [](Outcome& o) {
    const auto start = Clock::now();
    for (std::size_t n = 2; n <= 5; ++n) {
      const LieAlgebra l = basic_lie_algebra(vector_product_algebra(n));
      const Matrix map = iso_to_so(n);
      o.require(jacobi_check(l).pass, "Jacobi fails for n=" + std::to_string(n));
      o.require(map.rows() == map.cols() && rank(map) == map.cols(), "not bijective for n=" + std::to_string(n));
      o.require(is_lie_homomorphism(l, so_algebra(n + 1), map), "not a homomorphism for n=" + std::to_string(n));
    }
    o.require(seconds_since(start) < 5.0, "over 5 s");
  });

  all &= run(3, "polynomial modules prolong for n=4,5, t=0..3", [](Outcome& o) {
    for (std::size_t n = 4; n <= 5; ++n)
      for (std::size_t t = 0; t <= 3; ++t) {
        const LieRep rep = polynomial_module(n + 1, t);
        const auto start = Clock::now();
        const ProlongReport r = can_prolong(rep);
        const double s = seconds_since(start);
        o.require(r.verdict, "n=" + std::to_string(n) + " t=" + std::to_string(t) + " rejected");
        o.require(s < 10.0, "n=" + std::to_string(n) + " t=" + std::to_string(t) + " over 10 s");
      }
  });

  all &= run(4, "so4 diagonal law and C1 - C2", [](Outcome& o) {
    for (std::size_t t = 0; t <= 3; ++t)
      for (std::size_t r = 0; r <= 3; ++r) {
        const std::string tag = "M_" + std::to_string(t) + "," + std::to_string(r);
        const LieRep m = so4_tensor_module(t, r);
        const ProlongReport rep = can_prolong(m);
        o.require(rep.verdict == (t == r), tag + " verdict");
        if (!rep.verdict) o.require(witness_checks_out(m, rep), tag + " witness");
        const auto [c1, c2] = casimir_matrices(m);
        const Rational want = make_rational(static_cast<long>(r * (r + 2)) - static_cast<long>(t * (t + 2)), 4);
        o.require(c1 - c2 == want * Matrix::identity(m.dim()), tag + " C1 - C2 entrywise");
        const auto [v1, v2] = casimir_values(m);
        o.require(v1 - v2 == want, tag + " casimir_values");
        o.require(r_operator(m, ObstructionIndex::make(0, 1, 2, 3, 4)) == c1 - c2, tag + " R_1234 != C1 - C2");
      }
  });

  all &= run(5, "adjoint modules of so5, so6 do not prolong", [](Outcome& o) {
    for (std::size_t m : {5u, 6u}) {
      const LieRep w = wedge_square_module(m);
      o.require(witness_checks_out(w, can_prolong(w)), "so" + std::to_string(m) + " has no verified witness");
    }
  });

  all &= run(6, "dimension formula equals harmonic dimension", [](Outcome& o) {
    for (std::size_t n = 3; n <= 5; ++n)
      for (std::size_t t = 0; t <= 4; ++t) {
        const std::uint64_t d = dimension_formula(n, t);
        o.require(d == laplacian_kernel_dim(n + 1, t), "n=" + std::to_string(n) + " t=" + std::to_string(t));
        if (n == 3) o.require(d == (t + 1) * (t + 1), "n=3 t=" + std::to_string(t) + " not (t+1)^2");
      }
  });

  all &= run(7, "three deciders agree on a module suite", [](Outcome& o) {
    struct Case {
      std::size_t n;
      LieRep rep;
    };
    std::vector<Case> suite;
    suite.push_back({3, harmonic_module(4, 2)});
    suite.push_back({3, harmonic_module(4, 3)});
    suite.push_back({4, harmonic_module(5, 2)});
    suite.push_back({3, so4_tensor_module(1, 1)});
    suite.push_back({3, so4_tensor_module(2, 2)});
    suite.push_back({3, so4_tensor_module(0, 1)});
    suite.push_back({3, so4_tensor_module(1, 2)});
    suite.push_back({3, so4_tensor_module(3, 1)});
    suite.push_back({3, wedge_square_module(4)});
    suite.push_back({4, wedge_square_module(5)});
    suite.push_back({3, adjoint_rep(so_algebra(4))});
    suite.push_back({4, adjoint_rep(so_algebra(5))});
    suite.push_back({3, direct_sum(harmonic_module(4, 1), so4_tensor_module(2, 2))});
    suite.push_back({3, direct_sum(so4_tensor_module(1, 1), so4_tensor_module(0, 2))});
    suite.push_back({4, direct_sum(harmonic_module(5, 1), polynomial_module(5, 2))});
    suite.push_back({4, direct_sum(harmonic_module(5, 1), wedge_square_module(5))});
    std::size_t yes = 0, no = 0;
    for (std::size_t k = 0; k < suite.size(); ++k) {
      const auto& [n, rep] = suite[k];
      const NLieAlgebra vn = vector_product_algebra(n);
      const LieRep basic = transport_to_basic(rep, n);
      const bool a = can_prolong(rep).verdict;
      const bool b = prolong_check_general(vn, basic).verdict;
      const bool c = is_filippov(semidirect_sum(vn, basic)).pass;
      o.require(a == b && b == c, "disagreement on suite entry " + std::to_string(k + 1));
      (a ? yes : no) += 1;
    }
    o.require(yes > 0 && no > 0, "suite is one-sided");
  });

  all &= run(8, "Q2 span dimensions 0, 1, 5", [](Outcome& o) {
    const std::size_t want[] = {0, 1, 5};
    for (std::size_t n = 2; n <= 4; ++n) {
      const std::size_t got = q2_span_dimension(n);
      o.require(got == want[n - 2], "n=" + std::to_string(n) + " gives " + std::to_string(got));
    }
  });

  all &= run(9, "direct sums and invariant subspaces of prolongable modules prolong", [](Outcome& o) {
    const std::vector<LieRep> good = {polynomial_module(5, 2), harmonic_module(5, 3), polynomial_module(4, 3),
                                      so4_tensor_module(2, 2)};
    for (const auto& a : good) o.require(can_prolong(a).verdict, "base module rejected");
    for (std::size_t x = 0; x < good.size(); ++x)
      for (std::size_t y = x; y < good.size(); ++y) {
        if (so_size(good[x]) != so_size(good[y])) continue;
        o.require(can_prolong(direct_sum(good[x], good[y])).verdict, "direct sum rejected");
      }
    for (const auto& rep : good) {
      const IrreducibilityReport ir = is_irreducible(rep);
      std::vector<Subspace> subs;
      if (ir.witness) subs.push_back(*ir.witness);
      for (std::size_t k = 0; k < rep.dim(); k += 3) subs.push_back(cyclic_subspace(rep, basis_vector(rep.dim(), k)));
      for (const auto& sub : subs) {
        o.require(invariant(rep, sub), "subspace not invariant");
        o.require(can_prolong(restrict_rep(rep, sub)).verdict, "restriction rejected");
      }
    }
  });

  all &= run(10, "harmonic modules irreducible, polynomial modules reducible", [](Outcome& o) {
    for (std::size_t t = 0; t <= 3; ++t)
      o.require(is_irreducible(harmonic_module(4, t)).irreducible, "harmonic t=" + std::to_string(t));
    for (std::size_t t = 2; t <= 4; ++t) {
      const LieRep p = polynomial_module(4, t);
      const IrreducibilityReport r = is_irreducible(p);
      o.require(!r.irreducible && r.witness.has_value(), "polynomial t=" + std::to_string(t) + " irreducible");
      if (!r.witness) continue;
      o.require(r.witness->dim() > 0 && r.witness->dim() < p.dim() && invariant(p, *r.witness),
                "polynomial t=" + std::to_string(t) + " witness not proper invariant");
      if (t == 2) {
        // the line through r^2 = x1^2 + x2^2 + x3^2 + x4^2
        Vector r2(p.dim());
        const auto basis = monomials(4, 2);
        for (std::size_t k = 0; k < basis.size(); ++k)
          for (unsigned e : basis[k].exponents)
            if (e == 2) r2[k] = 1;
        o.require(r.witness->dim() == 1 && r.witness->contains(r2), "t=2 witness is not the r^2 line");
      }
    }
  });

  return all ? 0 : 1;
}
