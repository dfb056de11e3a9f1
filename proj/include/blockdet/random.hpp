#pragma once

#include <cstdint>
#include <random>

#include "blockdet/block_matrix.hpp"
#include "blockdet/dense_matrix.hpp"
#include "blockdet/scaled_det.hpp"

namespace blockdet {

inline constexpr std::uint64_t kDefaultSeed = 20240917;

using Rng = std::mt19937_64;

/// Uniform in the complex unit square: |re|, |im| <= scale.
cplx random_complex(Rng& rng, double scale = 1.0);
DenseMatrix random_dense(Rng& rng, std::size_t rows, std::size_t cols, double scale = 1.0);
BlockMatrix random_block_matrix(Rng& rng, std::size_t block_count, std::size_t block_size);

struct KnownDetMatrix {
  DenseMatrix matrix;
  ScaledDet det;
};

/// L * U with unit lower-triangular L and upper-triangular U whose diagonal
/// magnitudes lie in [0.5, 1.5]; the determinant is the product of U's
/// diagonal. Off-diagonal entries are scaled by 1/dim to keep the product
/// well conditioned.
KnownDetMatrix random_known_det(Rng& rng, std::size_t dim);

}  // namespace blockdet
