#include <doctest.h>

#include "nlie/errors.hpp"
#include "nlie/io.hpp"
#include "nlie/sorep.hpp"
#include "oracles.hpp"

using namespace nlie;

namespace {

std::size_t parse_error_line(const std::string& text) {
  try {
    read_structure(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("structure file round trip") {
    for (std::size_t n = 2; n <= 5; ++n) {
      const NLieAlgebra v = vector_product_algebra(n);
      const std::string text = write_structure(v);
      CHECK(read_structure(text) == v);
      CHECK(write_structure(read_structure(text)) == text);
    }
    oracle::Gen gen(31);
    std::vector<NLieAlgebra::Entry> entries;
    for (const auto& t : increasing_tuples(3, 5))
      if (gen.integer(0, 1) == 1) entries.emplace_back(t, gen.vector(5, 7));
    const NLieAlgebra random(3, 5, entries);
    CHECK(read_structure(write_structure(random)) == random);
  }

  TEST_CASE("structure file syntax") {
    const std::string text =
        "# comment\n"
        "nlie 2 3   # header\n"
        "\n"
        "3 2 -> 1/2 0 -4/6\n";
    const NLieAlgebra a = read_structure(text);
    CHECK(a.arity() == 2);
    CHECK(a.structure().at({1, 2}) == Vector{make_rational(-1, 2), 0, make_rational(2, 3)});
    CHECK(write_structure(a) == "nlie 2 3\n2 3 -> -1/2 0 2/3\n");
  }

  TEST_CASE("structure file errors carry positions") {
    CHECK(parse_error_line("") == 1);
    CHECK(parse_error_line("lie 3 4\n") == 1);
    CHECK(parse_error_line("nlie 1 4\n") == 1);
    CHECK(parse_error_line("nlie 3 4\n1 2 3 -> 0 0 0\n") == 2);
    CHECK(parse_error_line("nlie 3 4\n1 2 3 => 0 0 0 1\n") == 2);
    CHECK(parse_error_line("nlie 3 4\n\n1 2 5 -> 0 0 0 1\n") == 3);
    CHECK(parse_error_line("nlie 3 4\n1 2 3 -> 0 0 0 1/0\n") == 2);
    CHECK(parse_error_line("nlie 3 4\n1 2 3 -> 0 0 0 1\n2 1 3 -> 0 0 0 1\n") == 3);
    CHECK(parse_error_line("nlie 3 4\n1 1 3 -> 0 0 0 1\n") == 2);
    try {
      read_structure("nlie 3 4\n1 2 3 -> 0 0 0 x\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
      CHECK(e.column() == 16);
    }
  }

  TEST_CASE("module JSON round trip") {
    for (const auto& rep : {harmonic_module(4, 2), so4_tensor_module(1, 2), wedge_square_module(5)}) {
      const Json j = module_to_json(rep);
      CHECK(j["algebra"] == "so");
      const LieRep back = module_from_json(Json::parse(j.dump()));
      CHECK(back.matrices() == rep.matrices());
      CHECK(back.labels() == rep.labels());
      CHECK(module_to_json(back).dump() == j.dump());
    }
    const Json j = module_to_json(polynomial_module(3, 1));
    CHECK(j["matrices"].contains("e_1_2"));
    CHECK(j["matrices"]["e_1_2"][1][0] == "-1");
  }

  TEST_CASE("malformed module JSON") {
    Json j = module_to_json(polynomial_module(4, 1));
    Json wrong_algebra = j;
    wrong_algebra["algebra"] = "sl";
    CHECK_THROWS_AS(module_from_json(wrong_algebra), ParseError);
    Json missing = j;
    missing["matrices"].erase("e_1_2");
    CHECK_THROWS_AS(module_from_json(missing), ParseError);
    Json ragged = j;
    ragged["matrices"]["e_1_2"][0] = Json::array({"1"});
    CHECK_THROWS_AS(module_from_json(ragged), ParseError);
    Json floating = j;
    floating["matrices"]["e_1_2"][0][0] = 0.5;
    CHECK_THROWS_AS(module_from_json(floating), ParseError);
    Json not_rep = j;
    not_rep["matrices"]["e_1_2"][0][0] = "1";
    CHECK_THROWS_AS(module_from_json(not_rep), InternalError);
    CHECK_THROWS_AS(module_from_json(Json::array()), ParseError);
  }

  TEST_CASE("prolong report JSON") {
    const LieRep rep = so4_tensor_module(0, 2);
    const ProlongReport r = can_prolong(rep);
    const Json j = prolong_report_json(r, 3, {"tensor", {{"t", 0}, {"r", 2}}, rep.dim()}, 0);
    CHECK(j.dump() ==
          R"({"verdict":false,"n":3,"module":{"kind":"tensor","params":{"t":0,"r":2},"dim":3},)"
          R"("witness":{"i":1,"j":2,"s":3,"k":4,"basis_label":"h[1]|h[x1]","residual":["2","0","0"]},"elapsed_ms":0})");
    const Json ok = prolong_report_json(can_prolong(so4_tensor_module(1, 1)), 3, {"tensor", {}, 4}, 5);
    CHECK(ok["witness"].is_null());
    CHECK(ok["elapsed_ms"] == 5);
  }
}
