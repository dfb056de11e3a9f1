#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "blockdet/block_det.hpp"
#include "blockdet/cli.hpp"
#include "blockdet/lu.hpp"
#include "blockdet/matrix_io.hpp"
#include "blockdet/random.hpp"

using namespace blockdet;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() : path_(std::filesystem::temp_directory_path() / "blockdet_cli_test") {
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }

  std::string write(const std::string& name, const std::string& text) const {
    const auto p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

 private:
  std::filesystem::path path_;
};

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_CASE("det on dense-text and block-json") {
  TempDir dir;
  const auto id = dir.write("id.txt", "2 2\n1 0\n0 1\n");
  Result r = run({"det", id});
  CHECK(r.code == 0);
  CHECK(r.out == "1.000000000000+0.000000000000E+000\n");

  Rng rng(401);
  const BlockMatrix diag = BlockMatrix::generate(3, 2, [&](std::size_t i, std::size_t j) {
    return i == j ? random_dense(rng, 2, 2) : DenseMatrix(2, 2);
  });
  const auto bj = dir.write("diag.json", io::write_block_json(diag));
  r = run({"det", bj});
  CHECK(r.code == 0);
  ScaledDet expected = ScaledDet::one();
  for (std::size_t i = 1; i <= 3; ++i) expected *= det_dense(diag.block(i, i));
  CHECK(relative_error(parse_scaled(first_line(r.out)), expected) < 1e-11);
}

TEST_CASE("det with and without --partition agree") {
  TempDir dir;
  Rng rng(409);
  const DenseMatrix m = random_dense(rng, 12, 12);
  const auto path = dir.write("m.txt", io::write_dense_text(m));
  const Result dense = run({"det", path});
  REQUIRE(dense.code == 0);
  const ScaledDet reference = parse_scaled(first_line(dense.out));
  for (const char* part : {"2,6", "3,4", "4,3", "6,2", "12,1"}) {
    const Result block = run({"det", path, "--partition", part});
    REQUIRE(block.code == 0);
    CHECK(relative_error(parse_scaled(first_line(block.out)), reference) < 1e-8);
  }
}

TEST_CASE("det exit codes") {
  TempDir dir;
  // S22 = 0 makes the first pivot singular; the matrix itself is not.
  const auto swap = dir.write("swap.txt", "2 2\n0 1\n1 0\n");
  Result r = run({"det", swap, "--partition", "2,1"});
  CHECK(r.code == 2);
  CHECK(r.err.find("level 0") != std::string::npos);
  CHECK(r.err.find("block 2") != std::string::npos);

  r = run({"det", swap, "--partition", "2,1", "--fallback", "dense"});
  CHECK(r.code == 0);
  CHECK(r.out == "-1.000000000000+0.000000000000E+000\n");

  CHECK(run({"det", swap, "--partition", "3,1"}).code == 1);
  CHECK(run({"det", swap, "--partition", "2"}).code == 1);
  CHECK(run({"det", swap, "--fallback", "lu"}).code == 1);
  CHECK(run({"det", dir.write("bad.txt", "2 2\n1 2 3\n")}).code == 1);
  CHECK(run({"det", dir.write("rect.txt", "1 2\n1 2\n")}).code == 1);
  CHECK(run({"det", "/nonexistent/file"}).code == 1);
  CHECK(run({"det", swap, "--format", "xml"}).code == 1);
  CHECK(run({}).code == 1);
}

TEST_CASE("compare") {
  TempDir dir;
  Rng rng(419);
  const auto path = dir.write("r.json", io::write_block_json(random_block_matrix(rng, 4, 3)));
  Result r = run({"compare", path});
  CHECK(r.code == 0);
  CHECK(r.out.find("relative_error") != std::string::npos);

  const auto dense = dir.write("r.txt", io::write_dense_text(random_dense(rng, 8, 8)));
  CHECK(run({"compare", dense, "--partition", "4,2", "--trials", "3"}).code == 0);
  CHECK(run({"compare", dense}).code == 1);

  // A 48x48 input cannot meet 1e-15.
  const auto big = dir.write("big.json", io::write_block_json(random_block_matrix(rng, 6, 8)));
  CHECK(run({"compare", big, "--tol", "1e-15"}).code == 3);
  CHECK(run({"compare", big}).code == 0);

  // Singular input: both paths agree that the determinant vanishes.
  const auto singular = dir.write("s.txt", "2 2\n1 1\n0 0\n");
  r = run({"compare", singular, "--partition", "2,1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("singular") != std::string::npos);
}

TEST_CASE("bench CSV") {
  Result r = run({"bench", "--max-N", "2", "--max-n", "1", "--trials", "1"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::vector<std::string> rows;
  while (std::getline(lines, line)) rows.push_back(line);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == "N,n,method,median_ns,relative_error");
  CHECK(rows[1].rfind("2,1,block,", 0) == 0);
  CHECK(rows[2].rfind("2,1,dense,", 0) == 0);

  // Same seed, same error column.
  const auto errors = [](const std::string& csv) {
    std::istringstream in(csv);
    std::string row;
    std::vector<std::string> out;
    while (std::getline(in, row)) out.push_back(row.substr(row.rfind(',') + 1));
    return out;
  };
  const Result a = run({"bench", "--max-N", "3", "--max-n", "3", "--trials", "2", "--seed", "9"});
  const Result b = run({"bench", "--max-N", "3", "--max-n", "3", "--trials", "2", "--seed", "9"});
  CHECK(errors(a.out) == errors(b.out));

  // Errors stay small as the block size grows.
  const Result c = run({"bench", "--max-N", "3", "--max-n", "8", "--trials", "2"});
  const auto errs = errors(c.out);
  for (std::size_t i = 1; i < errs.size(); ++i) CHECK(std::stod(errs[i]) < 1e-8);

  CHECK(run({"bench", "--max-N", "0"}).code == 1);
}

TEST_CASE("njl subcommand") {
  Result r = run({"njl"});
  CHECK(r.code == 0);
  CHECK(r.out.find("total multiplicity 48") != std::string::npos);
  CHECK(r.out.find("all checks passed") != std::string::npos);

  r = run({"njl", "--delta-re", "0", "--delta-im", "0"});
  CHECK(r.code == 0);
  // E3 == E1 and E4 == E2 once the gap closes.
  const auto value_of = [&](const std::string& label) {
    const auto pos = r.out.find(label + " = ");
    return r.out.substr(pos + label.size() + 3, 14);
  };
  CHECK(value_of("E3") == value_of("E1"));
  CHECK(value_of("E4") == value_of("E2"));

  CHECK(run({"njl", "--M", "nan"}).code == 1);
}

TEST_CASE("parse-check") {
  TempDir dir;
  Rng rng(431);
  const auto path = dir.write("p.json", io::write_block_json(random_block_matrix(rng, 3, 3)));
  Result r = run({"parse-check", path});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("ok ", 0) == 0);

  CHECK(run({"parse-check", "--value", "1.000000000000+0.000000000000E+000"}).code == 0);
  CHECK(run({"parse-check", "--value", "1.0+0.0E+000"}).code == 3);
  CHECK(run({"parse-check", "--value", "garbage"}).code == 1);
  CHECK(run({"parse-check"}).code == 1);
}
