#include "nlie/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "nlie/errors.hpp"
#include "nlie/sorep.hpp"

namespace nlie {

std::string write_structure(const NLieAlgebra& alg) {
  std::ostringstream out;
  out << "nlie " << alg.arity() << ' ' << alg.dim() << '\n';
  for (const auto& [tuple, coeffs] : alg.structure()) {
    for (auto i : tuple) out << i + 1 << ' ';
    out << "->";
    for (const auto& c : coeffs) out << ' ' << to_string(c);
    out << '\n';
  }
  return out.str();
}

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    tokens.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return tokens;
}

std::size_t parse_count(const Token& tok, std::size_t line) {
  if (tok.text.empty() || tok.text.size() > 9) throw ParseError("expected a small positive integer", line, tok.column);
  std::size_t value = 0;
  for (char c : tok.text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError("expected a positive integer, got '" + tok.text + "'", line, tok.column);
    }
    value = value * 10 + static_cast<std::size_t>(c - '0');
  }
  return value;
}

}  // namespace

NLieAlgebra read_structure(std::string_view text) {
  std::size_t arity = 0, dim = 0;
  bool have_header = false;
  std::vector<NLieAlgebra::Entry> entries;
  std::vector<std::size_t> entry_lines;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tokens = tokenize(line);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (!have_header) {
      if (tokens[0].text != "nlie") throw ParseError("expected header 'nlie <arity> <dim>'", line_no, tokens[0].column);
      if (tokens.size() != 3) throw ParseError("header needs exactly arity and dimension", line_no, tokens[0].column);
      arity = parse_count(tokens[1], line_no);
      dim = parse_count(tokens[2], line_no);
      if (arity < 2) throw ParseError("arity must be at least 2", line_no, tokens[1].column);
      if (dim > 4096) throw ParseError("dimension too large", line_no, tokens[2].column);
      have_header = true;
      continue;
    }
    if (tokens.size() != arity + 1 + dim) {
      throw ParseError("expected " + std::to_string(arity) + " indices, '->' and " + std::to_string(dim) +
                           " coefficients",
                       line_no, tokens[0].column);
    }
    if (tokens[arity].text != "->") throw ParseError("expected '->'", line_no, tokens[arity].column);
    Tuple tuple;
    for (std::size_t k = 0; k < arity; ++k) {
      const std::size_t idx = parse_count(tokens[k], line_no);
      if (idx < 1 || idx > dim) throw ParseError("index out of range 1.." + std::to_string(dim), line_no, tokens[k].column);
      tuple.push_back(idx - 1);
    }
    Vector coeffs;
    for (std::size_t k = arity + 1; k < tokens.size(); ++k) {
      try {
        coeffs.push_back(parse_rational(tokens[k].text));
      } catch (const ParseError& e) {
        throw ParseError("bad rational '" + tokens[k].text + "'", line_no, tokens[k].column);
      }
    }
    entries.emplace_back(std::move(tuple), std::move(coeffs));
    entry_lines.push_back(line_no);
    if (end == text.size()) break;
  }
  if (!have_header) throw ParseError("missing header 'nlie <arity> <dim>'", line_no, 1);
  try {
    return NLieAlgebra(arity, dim, entries);
  } catch (const IndexError& e) {
    // Locate the first offending entry by replaying the construction.
    for (std::size_t k = 0; k < entries.size(); ++k) {
      try {
        NLieAlgebra(arity, dim, std::vector<NLieAlgebra::Entry>(entries.begin(), entries.begin() + k + 1));
      } catch (const IndexError& inner) {
        throw ParseError(inner.what(), entry_lines[k], 1);
      }
    }
    throw ParseError(e.what());
  }
}

NLieAlgebra read_structure_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return read_structure(buffer.str());
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Json module_to_json(const LieRep& so_rep) {
  const std::size_t m = so_size(so_rep);
  Json j;
  j["algebra"] = "so";
  j["m"] = m;
  j["basis"] = so_rep.labels();
  Json matrices = Json::object();
  const auto names = so_algebra(m).names();
  for (std::size_t x = 0; x < names.size(); ++x) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < so_rep.dim(); ++r) rows.push_back(vector_to_json(so_rep.matrix(x).row(r)));
    matrices[names[x]] = std::move(rows);
  }
  j["matrices"] = std::move(matrices);
  return j;
}

LieRep module_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("module: expected a JSON object");
  if (!j.contains("algebra") || j["algebra"] != "so") throw ParseError("module: \"algebra\" must be \"so\"");
  if (!j.contains("m") || !j["m"].is_number_unsigned()) throw ParseError("module: \"m\" must be a positive integer");
  const auto m = j["m"].get<std::size_t>();
  if (m < 3 || m > 32) throw ParseError("module: \"m\" must be between 3 and 32");
  if (!j.contains("basis") || !j["basis"].is_array()) throw ParseError("module: \"basis\" must be an array");
  std::vector<std::string> labels;
  for (const auto& l : j["basis"]) {
    if (!l.is_string()) throw ParseError("module: basis labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  const std::size_t dim = labels.size();
  if (!j.contains("matrices") || !j["matrices"].is_object()) throw ParseError("module: \"matrices\" must be an object");
  const LieAlgebra so = so_algebra(m);
  std::vector<Matrix> ms;
  for (const auto& name : so.names()) {
    if (!j["matrices"].contains(name)) throw ParseError("module: missing matrix " + name);
    const Json& rows = j["matrices"][name];
    if (!rows.is_array() || rows.size() != dim) throw ParseError("module: matrix " + name + " must have dim rows");
    Matrix mat(dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
      if (!rows[r].is_array() || rows[r].size() != dim) throw ParseError("module: matrix " + name + " must be square");
      for (std::size_t c = 0; c < dim; ++c) {
        const Json& cell = rows[r][c];
        if (cell.is_string()) mat(r, c) = parse_rational(cell.get<std::string>());
        else if (cell.is_number_integer()) mat(r, c) = make_rational(cell.get<long>());
        else throw ParseError("module: entries must be \"p/q\" strings");
      }
    }
    ms.push_back(std::move(mat));
  }
  if (j["matrices"].size() != so.dim()) throw ParseError("module: unexpected matrix names");
  return LieRep(so, std::move(ms), std::move(labels));
}

LieRep read_module_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(e.what());
  }
  return module_from_json(j);
}

Json prolong_report_json(const ProlongReport& report, std::size_t n, const ModuleInfo& module, long elapsed_ms) {
  Json j;
  j["verdict"] = report.verdict;
  j["n"] = n;
  j["module"] = {{"kind", module.kind}, {"params", module.params}, {"dim", module.dim}};
  if (report.witness) {
    const auto& w = *report.witness;
    Json wj;
    if (w.index) {
      wj["i"] = w.index->i + 1;
      wj["j"] = w.index->j + 1;
      wj["s"] = w.index->s + 1;
      wj["k"] = w.index->k + 1;
    } else {
      Json t = Json::array();
      for (auto a : w.algebra_tuple) t.push_back(a + 1);
      wj["tuple"] = std::move(t);
    }
    wj["basis_label"] = w.basis_label;
    wj["residual"] = vector_to_json(w.residual);
    j["witness"] = std::move(wj);
  } else {
    j["witness"] = nullptr;
  }
  j["elapsed_ms"] = elapsed_ms;
  return j;
}

}  // namespace nlie
