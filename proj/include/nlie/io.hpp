#pragma once

// Text and JSON formats: structure-constant files, exported so_m modules, and
// prolongation reports.

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "nlie/lie_rep.hpp"
#include "nlie/nlie.hpp"
#include "nlie/prolong.hpp"

namespace nlie {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view version = "nlie-kit 0.1.0";

/// Structure constants as text:
///
///   nlie <arity> <dim>
///   i1 i2 ... in -> c1 c2 ... cdim
///
/// 1-based indices, rational coefficients "p/q" or "p", '#' starts a comment,
/// omitted tuples are zero. The writer emits one line per stored tuple in
/// increasing order, so write -> read reproduces the algebra exactly.
std::string write_structure(const NLieAlgebra& alg);
/// Throws ParseError with 1-based line and column.
NLieAlgebra read_structure(std::string_view text);
NLieAlgebra read_structure_file(const std::filesystem::path& path);

/// {"algebra": "so", "m": m, "basis": [...], "matrices": {"e_1_2": [["p/q", ...], ...], ...}}
Json module_to_json(const LieRep& so_rep);
/// Throws ParseError on malformed input and InternalError if the matrices do not
/// form a representation.
LieRep module_from_json(const Json& j);
LieRep read_module_file(const std::filesystem::path& path);

Json vector_to_json(const Vector& v);

/// Description of the module a report refers to.
struct ModuleInfo {
  std::string kind;
  Json params = Json::object();
  std::size_t dim = 0;
};

/// {"verdict", "n", "module": {"kind", "params", "dim"}, "witness": {...} | null, "elapsed_ms"}
Json prolong_report_json(const ProlongReport& report, std::size_t n, const ModuleInfo& module, long elapsed_ms);

}  // namespace nlie
