#include "nlie/wedge.hpp"

#include <algorithm>

#include "nlie/errors.hpp"

namespace nlie {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<Tuple> increasing_tuples(std::size_t length, std::size_t dim) {
  std::vector<Tuple> out;
  if (length > dim) return out;
  Tuple t(length);
  for (std::size_t i = 0; i < length; ++i) t[i] = i;
  while (true) {
    out.push_back(t);
    std::size_t p = length;
    while (p > 0 && t[p - 1] == dim - length + (p - 1)) --p;
    if (p == 0) break;
    ++t[p - 1];
    for (std::size_t q = p; q < length; ++q) t[q] = t[q - 1] + 1;
  }
  return out;
}

std::optional<int> sort_with_sign(Tuple& t) {
  int sign = 1;
  for (std::size_t i = 1; i < t.size(); ++i) {
    for (std::size_t j = i; j > 0 && t[j - 1] >= t[j]; --j) {
      if (t[j - 1] == t[j]) return std::nullopt;
      std::swap(t[j - 1], t[j]);
      sign = -sign;
    }
  }
  return sign;
}

std::size_t tuple_rank(const Tuple& t, std::size_t dim) {
  const std::size_t k = t.size();
  std::size_t rank = 0;
  std::size_t start = 0;
  for (std::size_t p = 0; p < k; ++p) {
    if (t[p] >= dim || t[p] < start) throw IndexError("tuple_rank: tuple not increasing within dimension");
    for (std::size_t v = start; v < t[p]; ++v) rank += binomial(dim - 1 - v, k - 1 - p);
    start = t[p] + 1;
  }
  return rank;
}

std::string tuple_label(const Tuple& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t[i] + 1);
  }
  return s + ")";
}

namespace {

void expand(std::span<const Vector> factors, std::size_t dim, std::size_t depth, Tuple& current,
            const Rational& coeff, Vector& out) {
  if (depth == factors.size()) {
    Tuple t = current;
    const auto sign = sort_with_sign(t);
    if (!sign) return;
    Rational& slot = out[tuple_rank(t, dim)];
    if (*sign > 0) slot += coeff;
    else slot -= coeff;
    return;
  }
  const Vector& f = factors[depth];
  for (std::size_t c = 0; c < dim; ++c) {
    if (sgn(f[c]) == 0) continue;
    if (std::find(current.begin(), current.end(), c) != current.end()) continue;
    current.push_back(c);
    expand(factors, dim, depth + 1, current, coeff * f[c], out);
    current.pop_back();
  }
}

}  // namespace

Vector expand_wedge(std::span<const Vector> factors, std::size_t dim) {
  for (const auto& f : factors) {
    if (f.size() != dim) throw ShapeError("expand_wedge: factor length mismatch");
  }
  Vector out(binomial(dim, factors.size()));
  if (factors.size() > dim) return out;
  Tuple current;
  current.reserve(factors.size());
  expand(factors, dim, 0, current, Rational(1), out);
  return out;
}

}  // namespace nlie
