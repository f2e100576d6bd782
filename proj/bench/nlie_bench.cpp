// Serial vs OpenMP timings of the hot kernels.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "nlie/nlie.hpp"
#include "nlie/prolong.hpp"
#include "nlie/sorep.hpp"

using namespace nlie;

namespace {

double best_of(int reps, const std::function<void()>& f) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    const auto start = std::chrono::steady_clock::now();
    f();
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (ms < best) best = ms;
  }
  return best;
}

void report(const std::string& name, const std::function<void(Exec)>& f, int reps = 3) {
  const double s = best_of(reps, [&] { f(Exec::serial); });
  const double p = best_of(reps, [&] { f(Exec::parallel); });
  std::printf("%-34s serial %9.2f ms   parallel %9.2f ms   x%.2f\n", name.c_str(), s, p, s / p);
}

Matrix dense(std::size_t n, long seed) {
  Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = make_rational((seed * 31 + r * 17 + c * 7) % 11 - 5, 1 + (r + c) % 3);
  return m;
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());

  const NLieAlgebra v5 = vector_product_algebra(5);
  report("is_filippov(V5)", [&](Exec e) { (void)is_filippov(v5, e); });

  const NLieAlgebra v4 = vector_product_algebra(4);
  const LieRep tail = transport_to_basic(polynomial_module(5, 2), 4);
  const NLieAlgebra big = semidirect_sum(v4, tail);
  report("is_filippov(V4 + poly(5,2))", [&](Exec e) { (void)is_filippov(big, e); }, 1);

  const LieRep poly = polynomial_module(6, 4);
  report("can_prolong(poly(6,4))", [&](Exec e) { (void)can_prolong(poly, e); }, 1);

  const LieRep wedge = wedge_square_module(6);
  report("can_prolong(wedge2 so6)", [&](Exec e) { (void)can_prolong(wedge, e); });

  const Matrix a = dense(96, 1), b = dense(96, 2);
  report("multiply 96x96", [&](Exec e) { (void)multiply(a, b, e); });
  report("row_reduce 96x96", [&](Exec e) { (void)row_reduce(a, e); });
}
