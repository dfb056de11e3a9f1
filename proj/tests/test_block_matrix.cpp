#include <doctest.h>

#include "blockdet/block_matrix.hpp"
#include "blockdet/errors.hpp"
#include "blockdet/lu.hpp"
#include "blockdet/random.hpp"

using namespace blockdet;

TEST_CASE("partition reads blocks in reading order") {
  DenseMatrix m(4, 4);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) m(r, c) = static_cast<double>(10 * r + c);
  const BlockMatrix bm = partition(m, 2, 2);
  CHECK(bm.block(1, 1) == DenseMatrix{{0.0, 1.0}, {10.0, 11.0}});
  CHECK(bm.block(1, 2) == DenseMatrix{{2.0, 3.0}, {12.0, 13.0}});
  CHECK(bm.block(2, 1) == DenseMatrix{{20.0, 21.0}, {30.0, 31.0}});
  CHECK(bm.block(2, 2) == DenseMatrix{{22.0, 23.0}, {32.0, 33.0}});
}

TEST_CASE("partition of the identity") {
  const BlockMatrix bm = partition(DenseMatrix::identity(6), 3, 2);
  for (std::size_t i = 1; i <= 3; ++i)
    for (std::size_t j = 1; j <= 3; ++j)
      CHECK(bm.block(i, j) == (i == j ? DenseMatrix::identity(2) : DenseMatrix(2, 2)));
}

TEST_CASE("partition rejects dimensions that do not divide") {
  CHECK_THROWS_AS(partition(DenseMatrix::identity(5), 2, 2), DimensionMismatch);
  CHECK_THROWS_AS(partition(DenseMatrix(4, 6), 2, 2), DimensionMismatch);
  CHECK_THROWS_AS(partition(DenseMatrix::identity(4), 0, 4), DimensionMismatch);
}

TEST_CASE("BlockMatrix validates its blocks and indices") {
  std::vector<DenseMatrix> blocks(4, DenseMatrix(2, 2));
  blocks[3] = DenseMatrix(2, 3);
  CHECK_THROWS_AS(BlockMatrix(2, 2, blocks), DimensionMismatch);
  CHECK_THROWS_AS(BlockMatrix(2, 2, std::vector<DenseMatrix>(3, DenseMatrix(2, 2))),
                  DimensionMismatch);
  const BlockMatrix bm(3, 2);
  CHECK_THROWS_AS(bm.block(0, 1), IndexOutOfRange);
  CHECK_THROWS_AS(bm.block(1, 4), IndexOutOfRange);
}

TEST_CASE("flatten and partition round trip exactly") {
  Rng rng(23);
  for (std::size_t big_n = 1; big_n <= 5; ++big_n) {
    for (std::size_t n = 1; n <= 4; ++n) {
      const BlockMatrix bm = random_block_matrix(rng, big_n, n);
      CHECK(partition(flatten(bm), big_n, n) == bm);
    }
  }
}

TEST_CASE("flatten of a block-diagonal matrix leaves zero off-diagonal tiles") {
  Rng rng(29);
  const BlockMatrix bm = BlockMatrix::generate(3, 2, [&](std::size_t i, std::size_t j) {
    return i == j ? random_dense(rng, 2, 2) : DenseMatrix(2, 2);
  });
  const DenseMatrix flat = flatten(bm);
  CHECK(flat.slice(0, 2, 2, 2).is_zero());
  CHECK(flat.slice(4, 0, 2, 2).is_zero());
  CHECK(flat.slice(2, 2, 2, 2) == bm.block(2, 2));
}

TEST_CASE("trailing_submatrix") {
  Rng rng(31);
  const BlockMatrix bm = random_block_matrix(rng, 3, 2);
  CHECK(trailing_submatrix(bm, 3) == bm);
  const BlockMatrix last = trailing_submatrix(bm, 1);
  CHECK(last.block_count() == 1);
  CHECK(last.block(1, 1) == bm.block(3, 3));

  const BlockMatrix two = trailing_submatrix(bm, 2);
  CHECK(two.block(1, 1) == bm.block(2, 2));
  CHECK(two.block(1, 2) == bm.block(2, 3));
  CHECK(two.block(2, 1) == bm.block(3, 2));
  CHECK(two.block(2, 2) == bm.block(3, 3));

  CHECK_THROWS_AS(trailing_submatrix(bm, 0), IndexOutOfRange);
  CHECK_THROWS_AS(trailing_submatrix(bm, 4), IndexOutOfRange);

  for (std::size_t big_n = 1; big_n <= 5; ++big_n) {
    const BlockMatrix r = random_block_matrix(rng, big_n, 3);
    for (std::size_t k = 1; k <= big_n; ++k) {
      const std::size_t off = (big_n - k) * 3;
      const DenseMatrix corner = flatten(r).slice(off, off, k * 3, k * 3);
      CHECK(trailing_submatrix(r, k) == partition(corner, k, 3));
    }
  }
}

TEST_CASE("block vectors") {
  Rng rng(37);
  const BlockMatrix bm = random_block_matrix(rng, 4, 2);
  const BlockVectorColumn col = column_vector(bm, 2, 3);
  REQUIRE(col.blocks.size() == 3);
  CHECK(col.blocks[0] == bm.block(2, 3));
  CHECK(col.blocks[2] == bm.block(4, 3));
  CHECK(col.stacked().rows() == 6);
  CHECK(col.stacked().slice(4, 0, 2, 2) == bm.block(4, 3));

  const BlockVectorRow row = row_vector(bm, 1, 2);
  REQUIRE(row.blocks.size() == 3);
  CHECK(row.blocks.front() == bm.block(1, 2));
  CHECK(row.stacked().cols() == 6);
  CHECK(row.stacked().slice(0, 4, 2, 2) == bm.block(1, 4));
}

TEST_CASE("schur_complement_2x2") {
  Rng rng(41);
  const DenseMatrix a = random_dense(rng, 3, 3);
  const DenseMatrix d = random_dense(rng, 3, 3);
  const DenseMatrix c = random_dense(rng, 3, 3);

  CHECK(schur_complement_2x2(a, DenseMatrix(3, 3), c, d) == a);
  CHECK(schur_complement_2x2(a, c, DenseMatrix(3, 3), d) == a);

  const DenseMatrix id = DenseMatrix::identity(3);
  CHECK(schur_complement_2x2(id, id, id, id).is_zero());

  CHECK_THROWS_AS(schur_complement_2x2(a, c, c, DenseMatrix(3, 3)), SingularMatrix);
  CHECK_THROWS_AS(schur_complement_2x2(a, DenseMatrix(3, 2), c, d), DimensionMismatch);

  for (int trial = 0; trial < 20; ++trial) {
    const DenseMatrix aa = random_dense(rng, 3, 3);
    const DenseMatrix bb = random_dense(rng, 3, 3);
    const DenseMatrix cc = random_dense(rng, 3, 3);
    const DenseMatrix dd = random_dense(rng, 3, 3);
    const ScaledDet whole = det_dense(assemble_2x2(aa, bb, cc, dd));
    const ScaledDet split = det_dense(schur_complement_2x2(aa, bb, cc, dd)) * det_dense(dd);
    CHECK(relative_error(split, whole) < 1e-10);
  }
}

TEST_CASE("schur determinant identity with uneven splits") {
  Rng rng(43);
  for (std::size_t k = 1; k <= 4; ++k) {
    for (std::size_t m = 1; m <= 4; ++m) {
      const DenseMatrix a = random_dense(rng, k, k);
      const DenseMatrix b = random_dense(rng, k, m);
      const DenseMatrix c = random_dense(rng, m, k);
      const DenseMatrix d = random_dense(rng, m, m);
      const ScaledDet whole = det_dense(assemble_2x2(a, b, c, d));
      const ScaledDet split = det_dense(schur_complement_2x2(a, b, c, d)) * det_dense(d);
      CHECK(relative_error(split, whole) < 1e-9);
    }
  }
}

TEST_CASE("banachiewicz_inverse") {
  const DenseMatrix i2 = DenseMatrix::identity(2);
  const DenseMatrix i3 = DenseMatrix::identity(3);

  SUBCASE("identity") {
    const BlockInverse2x2 inv = banachiewicz_inverse(i2, DenseMatrix(2, 3), DenseMatrix(3, 2), i3);
    CHECK(inv.assembled() == DenseMatrix::identity(5));
  }
  SUBCASE("block diagonal") {
    Rng rng(47);
    const DenseMatrix a = random_dense(rng, 2, 2);
    const DenseMatrix d = random_dense(rng, 3, 3);
    const BlockInverse2x2 inv = banachiewicz_inverse(a, DenseMatrix(2, 3), DenseMatrix(3, 2), d);
    CHECK(max_abs_diff(inv.top_left, invert(a)) < 1e-12);
    CHECK(max_abs_diff(inv.bottom_right, invert(d)) < 1e-12);
    CHECK(inv.top_right.is_zero());
    CHECK(inv.bottom_left.is_zero());
  }
  SUBCASE("random 2+3 split") {
    Rng rng(53);
    for (int trial = 0; trial < 20; ++trial) {
      const DenseMatrix a = random_dense(rng, 2, 2);
      const DenseMatrix b = random_dense(rng, 2, 3);
      const DenseMatrix c = random_dense(rng, 3, 2);
      const DenseMatrix d = random_dense(rng, 3, 3);
      const DenseMatrix whole = assemble_2x2(a, b, c, d);
      const DenseMatrix inv = banachiewicz_inverse(a, b, c, d).assembled();
      CHECK(max_abs_diff(inv * whole, DenseMatrix::identity(5)) < 1e-9);
      CHECK(max_abs_diff(whole * inv, DenseMatrix::identity(5)) < 1e-9);
    }
  }
  SUBCASE("singular Schur complement") {
    CHECK_THROWS_AS(banachiewicz_inverse(i2, i2, i2, i2), SingularMatrix);
  }
}

TEST_CASE("permute_blocks") {
  Rng rng(59);
  const BlockMatrix bm = random_block_matrix(rng, 3, 2);
  const BlockMatrix p = permute_blocks(bm, {3, 1, 2});
  CHECK(p.block(1, 1) == bm.block(3, 3));
  CHECK(p.block(1, 2) == bm.block(3, 1));
  CHECK(p.block(3, 1) == bm.block(2, 3));
  CHECK(relative_error(det_dense(flatten(p)), det_dense(flatten(bm))) < 1e-12);
}
