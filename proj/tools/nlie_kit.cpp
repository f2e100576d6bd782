// nlie-kit: verification and classification driver.
//
// Exit codes: 0 success, 1 a mathematical check failed, 2 usage, parse or budget error.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nlie/basic_lie.hpp"
#include "nlie/errors.hpp"
#include "nlie/io.hpp"
#include "nlie/prolong.hpp"
#include "nlie/sorep.hpp"

using namespace nlie;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Range {
  std::size_t lo = 0, hi = 0;
};

Range parse_range(const std::string& text, const char* flag) {
  auto number = [&](const std::string& s) -> std::size_t {
    if (s.empty() || s.size() > 6 || s.find_first_not_of("0123456789") != std::string::npos) {
      throw UsageError(std::string(flag) + ": expected N or A..B, got '" + text + "'");
    }
    return std::stoul(s);
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto v = number(text);
    return {v, v};
  }
  Range r{number(text.substr(0, dots)), number(text.substr(dots + 2))};
  if (r.lo > r.hi) throw UsageError(std::string(flag) + ": empty range " + text);
  return r;
}

std::uint64_t seed_from_env() {
  const char* raw = std::getenv("NLIE_KIT_SEED");
  if (raw == nullptr || *raw == '\0') return 0;
  const std::string s(raw);
  if (s.size() > 19 || s.find_first_not_of("0123456789") != std::string::npos) {
    throw UsageError("NLIE_KIT_SEED must be a non-negative integer");
  }
  return std::stoull(s);
}

std::string vector_text(const Vector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + "]";
}

std::string tuple_text(const Tuple& t) { return tuple_label(t); }

void write_json(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << j.dump(2) << '\n';
}

// ---- verify ----------------------------------------------------------------

struct VerifyOptions {
  std::optional<long> vn;
  std::string file;
  std::string json;
};

int cmd_verify(const VerifyOptions& opt) {
  std::optional<NLieAlgebra> alg;
  std::string source;
  if (opt.vn) {
    if (*opt.vn < 2 || *opt.vn > 12) throw UsageError("invalid arity: --vn needs 2 <= N <= 12");
    alg = vector_product_algebra(static_cast<std::size_t>(*opt.vn));
    source = "V" + std::to_string(*opt.vn);
  } else {
    alg = read_structure_file(opt.file);
    source = opt.file;
  }
  const std::size_t n = alg->arity();
  Json checks = Json::array();
  bool ok = true;
  std::cout << version << "\nverify " << source << " (arity " << n << ", dim " << alg->dim() << ")\n";

  const auto fil = is_filippov(*alg);
  ok = ok && fil.pass;
  Json fj = {{"check", "filippov"}, {"pass", fil.pass}};
  std::cout << "filippov: " << (fil.pass ? "pass" : "fail") << '\n';
  if (fil.violation) {
    const auto& v = *fil.violation;
    std::cout << "  violation at " << tuple_text(v.left) << " x " << tuple_text(v.right) << ": lhs "
              << vector_text(v.lhs) << ", rhs " << vector_text(v.rhs) << '\n';
    fj["left"] = tuple_text(v.left);
    fj["right"] = tuple_text(v.right);
    fj["lhs"] = vector_to_json(v.lhs);
    fj["rhs"] = vector_to_json(v.rhs);
  }
  checks.push_back(fj);

  const LieAlgebra basic = basic_lie_algebra(*alg);
  const auto jac = jacobi_check(basic);
  ok = ok && jac.pass;
  Json jj = {{"check", "jacobi(L)"}, {"pass", jac.pass}};
  std::cout << "jacobi(L): " << (jac.pass ? "pass" : "fail") << '\n';
  if (!jac.pass) {
    const auto& names = basic.names();
    const auto [x, y, z] = *jac.triple;
    std::cout << "  violation at (" << names[x] << ", " << names[y] << ", " << names[z] << "): "
              << vector_text(jac.residual) << '\n';
    jj["triple"] = Json::array({names[x], names[y], names[z]});
    jj["residual"] = vector_to_json(jac.residual);
  }
  checks.push_back(jj);

  const std::string iso_name = "iso so" + std::to_string(n + 1);
  if (alg->dim() == n + 1) {
    // The map is fixed; iso_to_so itself re-verifies it on V_n.
    const bool iso = is_lie_homomorphism(basic, so_algebra(n + 1), iso_to_so(n));
    ok = ok && iso;
    std::cout << iso_name << ": " << (iso ? "pass" : "fail") << '\n';
    checks.push_back({{"check", iso_name}, {"pass", iso}});
  } else {
    std::cout << iso_name << ": skipped (dimension is not n+1)\n";
  }
  if (!opt.json.empty()) {
    Json j;
    j["version"] = version;
    j["command"] = "verify";
    j["source"] = source;
    j["arity"] = n;
    j["dim"] = alg->dim();
    j["checks"] = checks;
    j["pass"] = ok;
    write_json(opt.json, j);
  }
  return ok ? exit_ok : exit_failed;
}

// ---- prolong ---------------------------------------------------------------

struct ProlongOptions {
  std::size_t n = 0;
  std::string t = "0..2";
  std::string r;
  bool tensor = false;
  bool wedge2 = false;
  bool adjoint = false;
  bool irreducible = false;
  std::string module_file;
  std::string json;
  std::size_t budget = 4;
  bool no_timing = false;
};

struct Row {
  ModuleInfo info;
  ProlongReport report;
  std::optional<bool> expected;
  std::optional<bool> irreducible;
  long elapsed_ms = 0;
};

void check_budget(std::size_t n, const Range& t, const std::optional<Range>& r, std::size_t budget) {
  if (n < 2) throw UsageError("--n must be at least 2");
  if (n > budget + 2) throw UsageError("over budget: n = " + std::to_string(n) + " exceeds " + std::to_string(budget + 2));
  if (t.hi > budget) throw UsageError("over budget: t = " + std::to_string(t.hi) + " exceeds " + std::to_string(budget));
  if (r && r->hi > budget) throw UsageError("over budget: r = " + std::to_string(r->hi) + " exceeds " + std::to_string(budget));
}

template <class F>
Row timed(ModuleInfo info, std::optional<bool> expected, F&& decide) {
  const auto start = std::chrono::steady_clock::now();
  Row row{std::move(info), decide(), expected, std::nullopt, 0};
  row.elapsed_ms = static_cast<long>(
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
  return row;
}

void print_row(const Row& row) {
  std::cout << row.info.kind;
  for (const auto& [k, v] : row.info.params.items()) std::cout << ' ' << k << '=' << v.dump();
  std::cout << " dim=" << row.info.dim << " verdict=" << (row.report.verdict ? "true" : "false");
  if (row.report.verdict && row.info.params.contains("t")) std::cout << " weight=" << row.info.params["t"].dump();
  if (row.irreducible) std::cout << " irreducible=" << (*row.irreducible ? "true" : "false");
  if (row.report.witness) {
    const auto& w = *row.report.witness;
    std::cout << " witness=" << (w.index ? w.index->label() : tuple_text(w.algebra_tuple)) << " on " << w.basis_label
              << " residual=" << vector_text(w.residual);
  }
  std::cout << '\n';
}

int cmd_prolong(const ProlongOptions& opt) {
  const std::uint64_t seed = seed_from_env();
  if (static_cast<int>(opt.tensor) + static_cast<int>(opt.wedge2) + static_cast<int>(opt.adjoint) +
          static_cast<int>(!opt.module_file.empty()) > 1) {
    throw UsageError("choose at most one of --tensor, --wedge2, --adjoint, --module-file");
  }
  std::vector<Row> rows;
  std::size_t n = opt.n;
  const Range t = parse_range(opt.t, "--t");
  const std::optional<Range> r = opt.r.empty() ? std::nullopt : std::optional<Range>(parse_range(opt.r, "--r"));

  if (!opt.module_file.empty()) {
    const LieRep rep = read_module_file(opt.module_file);
    const std::size_t m = so_size(rep);
    if (n != 0 && n + 1 != m) throw UsageError("--n does not match the module's so_m");
    n = m - 1;
    check_budget(n, {0, 0}, std::nullopt, opt.budget);
    if (rep.dim() > 256) throw UsageError("over budget: module dimension above 256");
    rows.push_back(timed({"file", {{"path", opt.module_file}}, rep.dim()}, std::nullopt, [&] { return can_prolong(rep); }));
    if (opt.irreducible) rows.back().irreducible = is_irreducible(rep, seed).irreducible;
  } else if (opt.tensor) {
    if (n == 0) n = 3;
    if (n != 3) throw UsageError("--tensor modules live over so4; use --n 3");
    const Range rr = r ? *r : t;
    check_budget(n, t, rr, opt.budget);
    for (std::size_t a = t.lo; a <= t.hi; ++a)
      for (std::size_t b = rr.lo; b <= rr.hi; ++b) {
        const LieRep rep = so4_tensor_module(a, b);
        Json params = {{"t", a}, {"r", b}, {"copies", so4_rational_multiplicity(a, b)}};
        rows.push_back(timed({"tensor", params, rep.dim()}, a == b, [&] { return can_prolong(rep); }));
        if (opt.irreducible) rows.back().irreducible = is_irreducible(rep, seed).irreducible;
      }
  } else if (opt.wedge2) {
    check_budget(n, {0, 0}, std::nullopt, opt.budget);
    const LieRep rep = wedge_square_module(n + 1);
    // Over so3 there are no obstruction operators at all.
    rows.push_back(timed({"wedge2", Json::object(), rep.dim()}, n == 2, [&] { return can_prolong(rep); }));
    if (opt.irreducible) rows.back().irreducible = is_irreducible(rep, seed).irreducible;
  } else if (opt.adjoint) {
    check_budget(n, {0, 0}, std::nullopt, opt.budget);
    const NLieAlgebra alg = vector_product_algebra(n);
    const LieRep rep = nlie_adjoint_rep(alg);
    rows.push_back(
        timed({"nlie-adjoint", Json::object(), rep.dim()}, true, [&] { return prolong_check_general(alg, rep); }));
    if (opt.irreducible) rows.back().irreducible = is_irreducible(rep, seed).irreducible;
  } else {
    check_budget(n, t, std::nullopt, opt.budget);
    for (std::size_t a = t.lo; a <= t.hi; ++a) {
      const LieRep rep = harmonic_module(n + 1, a);
      rows.push_back(timed({"harmonic", {{"t", a}}, rep.dim()}, true, [&] { return can_prolong(rep); }));
      if (opt.irreducible) rows.back().irreducible = is_irreducible(rep, seed).irreducible;
    }
  }

  std::cout << version << "\nprolong n=" << n << '\n';
  bool matches = true;
  std::vector<std::string> diffs;
  for (const auto& row : rows) {
    print_row(row);
    if (row.expected && *row.expected != row.report.verdict) {
      matches = false;
      diffs.push_back(row.info.kind + " " + row.info.params.dump() + ": expected " + (*row.expected ? "true" : "false") +
                      ", got " + (row.report.verdict ? "true" : "false"));
    }
    if (!row.expected && !row.report.verdict) matches = false;
  }
  for (const auto& d : diffs) std::cout << "diff: " << d << '\n';
  std::cout << "pattern: " << (matches ? "match" : "mismatch") << '\n';

  if (!opt.json.empty()) {
    Json j;
    j["version"] = version;
    j["command"] = "prolong";
    j["n"] = n;
    j["seed"] = seed;
    Json reports = Json::array();
    for (const auto& row : rows) {
      Json rep = prolong_report_json(row.report, n, row.info, opt.no_timing ? 0 : row.elapsed_ms);
      if (row.expected) rep["expected"] = *row.expected;
      if (row.irreducible) rep["irreducible"] = *row.irreducible;
      reports.push_back(std::move(rep));
    }
    j["reports"] = std::move(reports);
    j["matches_prediction"] = matches;
    write_json(opt.json, j);
  }
  return matches ? exit_ok : exit_failed;
}

// ---- dimensions, q2, export ------------------------------------------------

int cmd_dimensions(std::size_t n, const std::string& trange, std::size_t budget, const std::string& json) {
  const Range t = parse_range(trange, "--t");
  check_budget(n, t, std::nullopt, budget);
  std::cout << version << "\nn t formula harmonic match\n";
  bool ok = true;
  Json rows = Json::array();
  for (std::size_t a = t.lo; a <= t.hi; ++a) {
    const auto f = dimension_formula(n, a);
    const auto h = laplacian_kernel_dim(n + 1, a);
    const bool match = f == h;
    ok = ok && match;
    std::cout << n << ' ' << a << ' ' << f << ' ' << h << ' ' << (match ? "yes" : "no") << '\n';
    rows.push_back({{"n", n}, {"t", a}, {"formula", f}, {"harmonic", h}, {"match", match}});
  }
  if (!json.empty()) write_json(json, {{"version", version}, {"command", "dimensions"}, {"rows", rows}, {"pass", ok}});
  return ok ? exit_ok : exit_failed;
}

int cmd_q2(const std::string& nrange, std::size_t budget, const std::string& json) {
  const Range n = parse_range(nrange, "--n");
  if (n.lo < 2) throw UsageError("--n must be at least 2");
  if (n.hi > budget + 2) throw UsageError("over budget: n = " + std::to_string(n.hi));
  std::cout << version << "\nn symbol lifted\n";
  Json rows = Json::array();
  for (std::size_t a = n.lo; a <= n.hi; ++a) {
    const auto q = q2_spans(a);
    std::cout << a << ' ' << q.symbol << ' ' << q.lifted << '\n';
    rows.push_back({{"n", a}, {"symbol", q.symbol}, {"lifted", q.lifted}});
  }
  if (!json.empty()) write_json(json, {{"version", version}, {"command", "q2"}, {"rows", rows}});
  return exit_ok;
}

int cmd_export(std::size_t n, const std::string& family, std::size_t t, std::size_t r, std::size_t budget,
               const std::string& json) {
  check_budget(n, {t, t}, Range{r, r}, budget);
  std::optional<LieRep> rep;
  if (family == "harmonic") rep = harmonic_module(n + 1, t);
  else if (family == "poly") rep = polynomial_module(n + 1, t);
  else if (family == "wedge2") rep = wedge_square_module(n + 1);
  else if (family == "tensor") {
    if (n != 3) throw UsageError("tensor modules live over so4; use --n 3");
    rep = so4_tensor_module(t, r);
  } else {
    throw UsageError("unknown family '" + family + "'");
  }
  const Json j = module_to_json(*rep);
  if (json.empty()) std::cout << j.dump(2) << '\n';
  else write_json(json, j);
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact n-Lie algebra verification and module prolongation"};
  app.set_version_flag("--version", std::string(version));
  app.require_subcommand(1);

  VerifyOptions vopt;
  auto* verify = app.add_subcommand("verify", "check the Filippov identity, Jacobi of L(A) and L(V_n) = so_{n+1}");
  auto* vn_opt = verify->add_option("--vn", vopt.vn, "use the vector product algebra V_N");
  auto* file_opt = verify->add_option("--file", vopt.file, "structure-constant file");
  vn_opt->excludes(file_opt);
  verify->add_option("--json", vopt.json, "write a JSON report");

  ProlongOptions popt;
  auto* prolong = app.add_subcommand("prolong", "decide prolongation for families of so_{n+1} modules");
  prolong->add_option("--n", popt.n, "arity of V_n");
  prolong->add_option("--t", popt.t, "highest weight range A..B");
  prolong->add_option("--r", popt.r, "second weight range for --tensor");
  prolong->add_flag("--tensor", popt.tensor, "so4 modules M_t (x) M_r (n = 3)");
  prolong->add_flag("--wedge2", popt.wedge2, "the Lie-adjoint module of so_{n+1}");
  prolong->add_flag("--adjoint", popt.adjoint, "the n-Lie adjoint module of V_n");
  prolong->add_flag("--irreducible", popt.irreducible, "also report irreducibility (seed from NLIE_KIT_SEED)");
  prolong->add_option("--module-file", popt.module_file, "exported so_m module (JSON)");
  prolong->add_option("--json", popt.json, "write JSON reports");
  prolong->add_option("--budget", popt.budget, "cap: t, r <= N and n <= N + 2");
  prolong->add_flag("--no-timing", popt.no_timing, "write elapsed_ms as 0 for reproducible output");

  std::size_t dn = 0, dbudget = 4;
  std::string dt = "0..4", djson;
  auto* dims = app.add_subcommand("dimensions", "compare the dimension formula with harmonic kernels");
  dims->add_option("--n", dn, "arity of V_n")->required();
  dims->add_option("--t", dt, "range A..B");
  dims->add_option("--budget", dbudget, "cap: t <= N and n <= N + 2");
  dims->add_option("--json", djson, "write a JSON report");

  std::string qn = "2..4", qjson;
  std::size_t qbudget = 4;
  auto* q2 = app.add_subcommand("q2", "span of the obstruction operators in S^2(so_{n+1})");
  q2->add_option("--n", qn, "N or A..B");
  q2->add_option("--budget", qbudget, "cap: n <= N + 2");
  q2->add_option("--json", qjson, "write a JSON report");

  std::size_t en = 0, et = 0, er = 0, ebudget = 4;
  std::string efamily = "harmonic", ejson;
  auto* exp = app.add_subcommand("export", "write an so_{n+1} module as JSON");
  exp->add_option("--n", en, "arity of V_n")->required();
  exp->add_option("--family", efamily, "harmonic | poly | tensor | wedge2");
  exp->add_option("--t", et, "degree or first weight");
  exp->add_option("--r", er, "second weight for tensor");
  exp->add_option("--budget", ebudget, "cap: t, r <= N and n <= N + 2");
  exp->add_option("--json", ejson, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (*verify) {
      if (!vopt.vn && vopt.file.empty()) throw UsageError("verify needs --vn N or --file PATH");
      return cmd_verify(vopt);
    }
    if (*prolong) {
      if (popt.n == 0 && popt.module_file.empty() && !popt.tensor) throw UsageError("prolong needs --n N");
      return cmd_prolong(popt);
    }
    if (*dims) return cmd_dimensions(dn, dt, dbudget, djson);
    if (*q2) return cmd_q2(qn, qbudget, qjson);
    if (*exp) return cmd_export(en, efamily, et, er, ebudget, ejson);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return exit_usage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}
