#include "blockdet/matrix_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "blockdet/errors.hpp"

namespace blockdet::io {

namespace {

using nlohmann::json;

double parse_double(std::string_view s, std::string_view token) {
  double v = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && s.front() == '+') ++first;
  auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc{} || res.ptr != last || first == last) {
    throw ParseError("bad complex entry '" + std::string(token) + "'");
  }
  return v;
}

void append_double(std::string& out, double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  out.append(buf, res.ptr);
}

}  // namespace

std::optional<MatrixFormat> parse_format_name(std::string_view name) {
  if (name == "dense-text") return MatrixFormat::dense_text;
  if (name == "block-json") return MatrixFormat::block_json;
  return std::nullopt;
}

std::string_view format_name(MatrixFormat f) {
  return f == MatrixFormat::dense_text ? "dense-text" : "block-json";
}

cplx parse_complex_token(std::string_view token) {
  if (token.empty()) throw ParseError("empty complex entry");
  if (token.back() != 'i') return {parse_double(token, token), 0.0};

  const std::string_view body = token.substr(0, token.size() - 1);
  // The split is the last sign that is neither leading nor part of an exponent.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) return {0.0, parse_double(body, token)};
  return {parse_double(body.substr(0, split), token), parse_double(body.substr(split), token)};
}

DenseMatrix parse_dense_text(std::string_view text) {
  std::vector<std::string> tokens;
  std::istringstream lines{std::string(text)};
  std::string line;
  while (std::getline(lines, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream words(line);
    std::string w;
    while (words >> w) tokens.push_back(w);
  }
  if (tokens.size() < 2) throw ParseError("dense-text: missing 'rows cols' header");

  const auto parse_count = [](const std::string& s) {
    std::size_t v = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size() || v == 0) {
      throw ParseError("dense-text: bad dimension '" + s + "'");
    }
    return v;
  };
  const std::size_t rows = parse_count(tokens[0]);
  const std::size_t cols = parse_count(tokens[1]);
  if (tokens.size() - 2 != rows * cols) {
    throw ParseError("dense-text: header declares " + std::to_string(rows * cols) +
                     " entries, found " + std::to_string(tokens.size() - 2));
  }
  std::vector<cplx> entries;
  entries.reserve(rows * cols);
  for (std::size_t k = 2; k < tokens.size(); ++k) entries.push_back(parse_complex_token(tokens[k]));
  try {
    return DenseMatrix(rows, cols, std::move(entries));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("dense-text: ") + e.what());
  }
}

std::string write_dense_text(const DenseMatrix& m) {
  std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c != 0) out.push_back(' ');
      const cplx z = m(r, c);
      append_double(out, z.real());
      if (z.imag() != 0.0 || std::signbit(z.imag())) {
        if (!std::signbit(z.imag())) out.push_back('+');
        append_double(out, z.imag());
        out.push_back('i');
      }
    }
    out.push_back('\n');
  }
  return out;
}

BlockMatrix parse_block_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("block-json: ") + e.what());
  }
  try {
    const auto big_n = doc.at("N").get<std::size_t>();
    const auto n = doc.at("n").get<std::size_t>();
    const json& grid = doc.at("blocks");
    if (big_n == 0 || n == 0) throw ParseError("block-json: N and n must be positive");
    if (!grid.is_array() || grid.size() != big_n) {
      throw ParseError("block-json: 'blocks' must have N block rows");
    }
    std::vector<DenseMatrix> blocks;
    blocks.reserve(big_n * big_n);
    for (const json& block_row : grid) {
      if (!block_row.is_array() || block_row.size() != big_n) {
        throw ParseError("block-json: every block row must hold N blocks");
      }
      for (const json& block : block_row) {
        if (!block.is_array() || block.size() != n) {
          throw ParseError("block-json: every block must have n rows");
        }
        std::vector<cplx> entries;
        entries.reserve(n * n);
        for (const json& row : block) {
          if (!row.is_array() || row.size() != n) {
            throw ParseError("block-json: every block row must have n entries");
          }
          for (const json& z : row) {
            if (!z.is_array() || z.size() != 2) {
              throw ParseError("block-json: entries must be [re, im] pairs");
            }
            entries.emplace_back(z[0].get<double>(), z[1].get<double>());
          }
        }
        blocks.emplace_back(n, n, std::move(entries));
      }
    }
    return BlockMatrix(big_n, n, std::move(blocks));
  } catch (const json::exception& e) {
    throw ParseError(std::string("block-json: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("block-json: ") + e.what());
  }
}

std::string write_block_json(const BlockMatrix& bm) {
  json grid = json::array();
  for (std::size_t i = 1; i <= bm.block_count(); ++i) {
    json block_row = json::array();
    for (std::size_t j = 1; j <= bm.block_count(); ++j) {
      const DenseMatrix& b = bm.block(i, j);
      json rows = json::array();
      for (std::size_t r = 0; r < b.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < b.cols(); ++c) row.push_back({b(r, c).real(), b(r, c).imag()});
        rows.push_back(std::move(row));
      }
      block_row.push_back(std::move(rows));
    }
    grid.push_back(std::move(block_row));
  }
  json doc = {{"N", bm.block_count()}, {"n", bm.block_size()}, {"blocks", std::move(grid)}};
  return doc.dump() + "\n";
}

MatrixFile parse_matrix(std::string_view text, MatrixFormat format) {
  if (format == MatrixFormat::block_json) {
    BlockMatrix bm = parse_block_json(text);
    DenseMatrix dense = flatten(bm);
    return {format, std::move(dense), std::move(bm)};
  }
  return {format, parse_dense_text(text), std::nullopt};
}

MatrixFile read_matrix_file(const std::filesystem::path& path, std::optional<MatrixFormat> format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();

  if (!format) {
    const auto first = text.find_first_not_of(" \t\r\n");
    const bool looks_json =
        path.extension() == ".json" || (first != std::string::npos && text[first] == '{');
    format = looks_json ? MatrixFormat::block_json : MatrixFormat::dense_text;
  }
  return parse_matrix(text, *format);
}

}  // namespace blockdet::io
