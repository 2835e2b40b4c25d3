#include "tropical/matrix_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace tropical {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::istringstream ls(raw);
    Line line{number, {}};
    std::string tok;
    while (ls >> tok) line.tokens.push_back(tok);
    if (line.tokens.empty() || line.tokens.front().front() == '#') continue;
    out.push_back(std::move(line));
  }
  return out;
}

std::size_t parse_dimension(const std::string& tok, std::size_t line) {
  if (tok.empty() || tok.size() > 9 || tok.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("invalid dimension '" + tok + "'", line);
  const auto v = static_cast<std::size_t>(std::stoul(tok));
  if (v == 0) throw ParseError("dimensions must be positive", line);
  return v;
}

template <class T, class ParseEntry>
Matrix<T> parse_generic(std::string_view text, ParseEntry parse_entry) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError("empty input", 1);
  const auto& header = lines[0];
  if (header.tokens.size() != 2 || header.tokens[0] != "tmat" || header.tokens[1] != "1")
    throw ParseError("expected header 'tmat 1'", header.number);
  if (lines.size() < 2) throw ParseError("missing dimensions line", header.number + 1);
  const auto& dims = lines[1];
  if (dims.tokens.size() != 2) throw ParseError("expected '<rows> <cols>'", dims.number);
  const std::size_t n = parse_dimension(dims.tokens[0], dims.number);
  const std::size_t m = parse_dimension(dims.tokens[1], dims.number);

  MatrixBuilder<T> b(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    if (2 + i >= lines.size())
      throw ParseError("expected " + std::to_string(n) + " rows, found " + std::to_string(i),
                       lines.back().number + 1);
    const auto& line = lines[2 + i];
    if (line.tokens.size() != m)
      throw ParseError("expected " + std::to_string(m) + " entries, found " + std::to_string(line.tokens.size()),
                       line.number);
    for (std::size_t j = 0; j < m; ++j) {
      try {
        b(i, j) = parse_entry(line.tokens[j]);
      } catch (const ParseError& e) {
        throw ParseError(e.what(), line.number);
      }
    }
  }
  if (lines.size() > 2 + n) throw ParseError("unexpected trailing content", lines[2 + n].number);
  return std::move(b).build();
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <class T>
std::string serialize_generic(const Matrix<T>& m) {
  std::string out = "tmat 1\n" + std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ' ';
      out += m(i, j).str();
    }
    out += '\n';
  }
  return out;
}

}  // namespace

TropMatrix parse_matrix(std::string_view text) {
  return parse_generic<Scalar>(text, [](const std::string& tok) {
    if (tok == "-inf") throw ParseError("'-inf' is only allowed in extended matrices");
    return Scalar::parse(tok);
  });
}

ExtMatrix parse_ext_matrix(std::string_view text) {
  return parse_generic<ExtScalar>(text, [](const std::string& tok) { return ExtScalar::parse(tok); });
}

TropMatrix read_matrix_file(const std::filesystem::path& path) { return parse_matrix(slurp(path)); }
ExtMatrix read_ext_matrix_file(const std::filesystem::path& path) { return parse_ext_matrix(slurp(path)); }

std::string serialize(const TropMatrix& m) { return serialize_generic(m); }
std::string serialize(const ExtMatrix& m) { return serialize_generic(m); }

std::string format_rows(const TropMatrix& m, bool decimal) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ' ';
      out += decimal ? m(i, j).decimal_str() : m(i, j).str();
    }
    out += '\n';
  }
  return out;
}

std::string format_vector(const TropVector& v, bool decimal) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += decimal ? v[i].decimal_str() : v[i].str();
  }
  return out;
}

TropVector parse_point(std::string_view text) {
  std::vector<Scalar> entries;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto tok = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    entries.push_back(Scalar::parse(tok));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return TropVector(std::move(entries));
}

nlohmann::ordered_json to_json(const ClassificationReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["idempotent"] = r.idempotent;
  j["zero_diagonal"] = r.zero_diagonal;
  j["kleene_fixed"] = r.kleene_fixed;
  j["strongly_regular"] = r.strongly_regular;
  j["off_diagonal_negative"] = r.off_diagonal_negative;
  j["symmetric"] = r.symmetric;
  j["origin_in_interior"] = r.origin_in_interior;
  j["origin_in_row_interior"] = r.origin_in_row_interior;
  j["columns_sum_to_zero"] = r.columns_sum_to_zero;
  j["rows_sum_to_zero"] = r.rows_sum_to_zero;
  j["is_semimetric_matrix"] = r.is_semimetric_matrix;
  j["is_metric_matrix"] = r.is_metric_matrix;
  return j;
}

}  // namespace tropical
