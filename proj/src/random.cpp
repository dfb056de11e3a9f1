#include "blockdet/random.hpp"

#include <cmath>
#include <numbers>

namespace blockdet {

cplx random_complex(Rng& rng, double scale) {
  std::uniform_real_distribution<double> u(-scale, scale);
  const double re = u(rng);
  const double im = u(rng);
  return {re, im};
}

DenseMatrix random_dense(Rng& rng, std::size_t rows, std::size_t cols, double scale) {
  DenseMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_complex(rng, scale);
  return m;
}

BlockMatrix random_block_matrix(Rng& rng, std::size_t block_count, std::size_t block_size) {
  return BlockMatrix::generate(block_count, block_size, [&](std::size_t, std::size_t) {
    return random_dense(rng, block_size, block_size);
  });
}

KnownDetMatrix random_known_det(Rng& rng, std::size_t dim) {
  const double off = 1.0 / static_cast<double>(dim);
  std::uniform_real_distribution<double> magnitude(0.5, 1.5);
  std::uniform_real_distribution<double> phase(-std::numbers::pi, std::numbers::pi);

  DenseMatrix lower = DenseMatrix::identity(dim);
  DenseMatrix upper(dim, dim);
  ScaledDet det = ScaledDet::one();
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < r; ++c) lower(r, c) = random_complex(rng, off);
    const double mag = magnitude(rng);
    const cplx d = std::polar(mag, phase(rng));
    upper(r, r) = d;
    det *= d;
    for (std::size_t c = r + 1; c < dim; ++c) upper(r, c) = random_complex(rng, off);
  }
  return {lower * upper, det};
}

}  // namespace blockdet
