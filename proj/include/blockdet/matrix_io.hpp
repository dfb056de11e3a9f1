#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "blockdet/block_matrix.hpp"
#include "blockdet/dense_matrix.hpp"

namespace blockdet::io {

enum class MatrixFormat { dense_text, block_json };

std::optional<MatrixFormat> parse_format_name(std::string_view name);
std::string_view format_name(MatrixFormat f);

/// A parsed matrix file. block-json input also carries its partition.
struct MatrixFile {
  MatrixFormat format;
  DenseMatrix dense;
  std::optional<BlockMatrix> blocks;
};

// dense-text:
//   # comment lines start with '#'
//   rows cols
//   entries, whitespace separated, each "re", "re+imi" or "re-imi"
DenseMatrix parse_dense_text(std::string_view text);
std::string write_dense_text(const DenseMatrix& m);

// block-json: {"N": .., "n": .., "blocks": N x N array of n x n arrays of [re, im]}
BlockMatrix parse_block_json(std::string_view text);
std::string write_block_json(const BlockMatrix& bm);

/// Parses `re`, `re+imi`, `re-imi` or `imi`.
cplx parse_complex_token(std::string_view token);

/// Without an explicit format, ".json" files and content starting with '{'
/// are read as block-json, anything else as dense-text.
MatrixFile read_matrix_file(const std::filesystem::path& path,
                            std::optional<MatrixFormat> format = std::nullopt);
MatrixFile parse_matrix(std::string_view text, MatrixFormat format);

}  // namespace blockdet::io
