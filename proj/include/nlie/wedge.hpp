#pragma once

// Index tuples and exterior-power bookkeeping shared by the n-ary bracket and
// the basic Lie algebra on the (n-1)-th exterior power.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nlie/exact.hpp"

namespace nlie {

/// 0-based basis indices. Stored tuples are strictly increasing.
using Tuple = std::vector<std::size_t>;
/// Strictly increasing tuple labelling a basis vector of an exterior power.
using WedgeIndex = Tuple;

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// All strictly increasing tuples of the given length over 0..dim-1, lexicographic.
std::vector<Tuple> increasing_tuples(std::size_t length, std::size_t dim);

/// Sorts t in place and returns the sign of the sorting permutation, or nothing
/// when t has a repeated index (the wedge/bracket then vanishes).
std::optional<int> sort_with_sign(Tuple& t);

/// Position of an increasing tuple in increasing_tuples(t.size(), dim).
std::size_t tuple_rank(const Tuple& t, std::size_t dim);

/// 1-based, e.g. "(1,2,4)".
std::string tuple_label(const Tuple& t);

/// Coordinates of f_1 ^ ... ^ f_k in the basis increasing_tuples(k, dim).
/// Expanded by multilinearity; permutation signs collected, repeats dropped.
Vector expand_wedge(std::span<const Vector> factors, std::size_t dim);

}  // namespace nlie
