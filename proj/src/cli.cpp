#include "blockdet/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "blockdet/block_det.hpp"
#include "blockdet/errors.hpp"
#include "blockdet/lu.hpp"
#include "blockdet/matrix_io.hpp"
#include "blockdet/njl.hpp"
#include "blockdet/random.hpp"

namespace blockdet::cli {

namespace {

struct Partition {
  std::size_t count = 0;
  std::size_t size = 0;
};

Partition parse_partition(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw ParseError("--partition expects N,n");
  try {
    std::size_t used = 0;
    const unsigned long count = std::stoul(text.substr(0, comma), &used);
    if (used != comma) throw ParseError("--partition expects N,n");
    const std::string rest = text.substr(comma + 1);
    const unsigned long size = std::stoul(rest, &used);
    if (used != rest.size() || count == 0 || size == 0) {
      throw ParseError("--partition expects positive N,n");
    }
    return {count, size};
  } catch (const std::logic_error&) {
    throw ParseError("--partition expects N,n, got '" + text + "'");
  }
}

struct CommonInput {
  std::string path;
  std::string partition;
  std::string format;
};

io::MatrixFile load(const CommonInput& in) {
  std::optional<io::MatrixFormat> fmt;
  if (!in.format.empty()) {
    fmt = io::parse_format_name(in.format);
    if (!fmt) throw ParseError("unknown --format '" + in.format + "'");
  }
  io::MatrixFile file = io::read_matrix_file(in.path, fmt);
  if (!file.dense.is_square()) {
    throw DimensionMismatch("matrix is " + std::to_string(file.dense.rows()) + "x" +
                            std::to_string(file.dense.cols()) + ", expected square");
  }
  return file;
}

std::optional<BlockMatrix> block_view(const io::MatrixFile& file, const std::string& partition) {
  if (!partition.empty()) {
    const Partition p = parse_partition(partition);
    return blockdet::partition(file.dense, p.count, p.size);
  }
  return file.blocks;
}

template <class F>
std::int64_t time_ns(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
}

std::int64_t median(std::vector<std::int64_t> v) {
  if (v.empty()) return 0;
  std::sort(v.begin(), v.end());
  return v[v.size() / 2];
}

std::string sci(double v) {
  std::ostringstream s;
  s.imbue(std::locale::classic());
  s << std::scientific << std::setprecision(3) << v;
  return s.str();
}

std::string fixed(double v, int digits = 6) {
  std::ostringstream s;
  s.imbue(std::locale::classic());
  s << std::fixed << std::setprecision(digits) << v;
  return s.str();
}

// Determinant of the loaded file: block engine when a partition is known,
// dense LU otherwise.
ScaledDet evaluate(const io::MatrixFile& file, const std::string& partition, bool fallback) {
  const std::optional<BlockMatrix> bm = block_view(file, partition);
  if (!bm) return det_dense(file.dense);
  try {
    return block_det(*bm).value;
  } catch (const SingularPivotBlock&) {
    if (!fallback) throw;
    return det_dense(file.dense);
  }
}

int cmd_det(const CommonInput& in, const std::string& fallback, std::ostream& out,
            std::ostream& err) {
  if (!fallback.empty() && fallback != "dense") {
    err << "error: --fallback accepts only 'dense'\n";
    return kInputError;
  }
  const io::MatrixFile file = load(in);
  try {
    out << format_scaled(evaluate(file, in.partition, !fallback.empty())) << "\n";
  } catch (const SingularPivotBlock& e) {
    err << "error: " << e.what() << " (level " << e.level() << ", block " << e.index()
        << "); rerun with --fallback dense\n";
    return kSingularPivot;
  }
  return kOk;
}

int cmd_compare(const CommonInput& in, int trials, double tol, std::ostream& out,
                std::ostream& err) {
  const io::MatrixFile file = load(in);
  const std::optional<BlockMatrix> bm = block_view(file, in.partition);
  if (!bm) {
    err << "error: compare needs a partition (--partition N,n or a block-json file)\n";
    return kInputError;
  }
  trials = std::max(trials, 1);

  ScaledDet dense;
  std::vector<std::int64_t> dense_ns;
  for (int t = 0; t < trials; ++t) dense_ns.push_back(time_ns([&] { dense = det_dense(file.dense); }));

  ScaledDet block;
  std::vector<std::int64_t> block_ns;
  std::optional<SingularPivotBlock> failure;
  try {
    for (int t = 0; t < trials; ++t) {
      block_ns.push_back(time_ns([&] {
        block = block_det(*bm, {kDefaultTolerances, kernels::Execution::serial}).value;
      }));
    }
  } catch (const SingularPivotBlock& e) {
    failure = e;
  }

  out << "N=" << bm->block_count() << " n=" << bm->block_size() << " dim=" << bm->dimension()
      << " trials=" << trials << "\n";
  out << "method  value                                 median_ns\n";
  if (failure) {
    out << "block   singular pivot (level " << failure->level() << ", block " << failure->index()
        << ")\n";
  } else {
    out << "block   " << format_scaled(block) << "  " << median(block_ns) << "\n";
  }
  out << "dense   " << format_scaled(dense) << "  " << median(dense_ns) << "\n";

  if (failure) {
    if (dense.is_zero()) {
      out << "relative_error 0 (both paths report a singular matrix)\n";
      return kOk;
    }
    err << "error: block engine hit " << failure->what() << " but the dense determinant is nonzero\n";
    return kSingularPivot;
  }
  const double rel = relative_error(block, dense);
  out << "relative_error " << sci(rel) << " (tol " << sci(tol) << ")\n";
  if (!(rel <= tol)) {
    err << "relative error " << sci(rel) << " exceeds tolerance " << sci(tol) << "\n";
    return kToleranceExceeded;
  }
  return kOk;
}

int cmd_bench(int max_count, int max_size, int trials, std::uint64_t seed, std::ostream& out) {
  Rng rng(seed);
  trials = std::max(trials, 1);
  out << "N,n,method,median_ns,relative_error\n";
  const int first_count = std::min(2, max_count);
  for (int count = first_count; count <= max_count; ++count) {
    for (int size = 1; size <= max_size; ++size) {
      const auto big_n = static_cast<std::size_t>(count);
      const auto n = static_cast<std::size_t>(size);
      std::vector<std::int64_t> block_ns;
      std::vector<std::int64_t> dense_ns;
      double block_err = 0.0;
      double dense_err = 0.0;
      for (int t = 0; t < trials; ++t) {
        KnownDetMatrix sample = random_known_det(rng, big_n * n);
        const BlockMatrix bm = partition(sample.matrix, big_n, n);
        ScaledDet block;
        ScaledDet dense;
        try {
          block_ns.push_back(time_ns([&] {
            block = block_det(bm, {kDefaultTolerances, kernels::Execution::serial}).value;
          }));
        } catch (const SingularPivotBlock&) {
          --t;  // resample
          continue;
        }
        dense_ns.push_back(time_ns([&] { dense = det_dense(sample.matrix); }));
        block_err = std::max(block_err, relative_error(block, sample.det));
        dense_err = std::max(dense_err, relative_error(dense, sample.det));
      }
      out << count << "," << size << ",block," << median(block_ns) << "," << sci(block_err) << "\n";
      out << count << "," << size << ",dense," << median(dense_ns) << "," << sci(dense_err) << "\n";
    }
  }
  return kOk;
}

void print_njl_report(const njl::NjlReport& r, std::ostream& out) {
  const njl::NjlParams& p = r.params;
  out << "NJL propagator (48x48, 6x6 blocks of 8x8)\n";
  out << "  M=" << fixed(p.mass) << " mu=" << fixed(p.chemical_potential) << " Delta="
      << fixed(p.gap.real()) << (p.gap.imag() < 0 ? "" : "+") << fixed(p.gap.imag()) << "i"
      << " k=(" << fixed(p.momentum[0]) << "," << fixed(p.momentum[1]) << ","
      << fixed(p.momentum[2]) << ") E=" << fixed(p.energy.real())
      << (p.energy.imag() < 0 ? "" : "+") << fixed(p.energy.imag()) << "i\n";
  out << "  E_k=" << fixed(p.quasi_energy(), 12) << "\n";
  out << "eigenenergies\n";
  int total = 0;
  for (std::size_t i = 0; i < r.spectrum.size(); ++i) {
    out << "  E" << i + 1 << " = " << fixed(r.spectrum[i].value, 12) << "  multiplicity "
        << r.spectrum[i].multiplicity << "\n";
    total += r.spectrum[i].multiplicity;
  }
  out << "  total multiplicity " << total << "\n";
  out << "determinant\n";
  out << "  block engine  " << format_scaled(r.block_value) << "\n";
  out << "  closed form   " << format_scaled(r.closed_value) << "\n";
  out << "  relative error " << sci(relative_error(r.block_value, r.closed_value)) << "\n";
  out << "root residuals (|det(E*)| / |det(E*+offset)|)\n";
  for (std::size_t i = 0; i < r.roots.size(); ++i) {
    const njl::RootResidual& root = r.roots[i];
    out << "  E" << i + 1 << "  ratio " << sci(root.ratio) << "  via " << root.method
        << (root.passed ? "  ok" : "  FAIL") << "\n";
  }
  out << "checks\n";
  for (const njl::Check& c : r.checks) {
    out << "  [" << (c.passed ? "PASS" : "FAIL") << "] " << c.name << ": " << sci(c.measured)
        << " (limit " << sci(c.threshold) << ")\n";
  }
  out << (r.all_passed() ? "all checks passed\n" : "some checks FAILED\n");
}

int cmd_parse_check(const CommonInput& in, const std::string& value, std::ostream& out,
                    std::ostream& err) {
  std::string text = value;
  ScaledDet original;
  const bool from_file = value.empty();
  if (from_file) {
    if (in.path.empty()) {
      err << "error: parse-check needs a matrix file or --value\n";
      return kInputError;
    }
    original = evaluate(load(in), in.partition, true);
    text = format_scaled(original);
  }
  const ScaledDet parsed = parse_scaled(text);
  const std::string again = format_scaled(parsed);
  if (again != text) {
    err << "round trip changed the text: '" << text << "' -> '" << again << "'\n";
    return kToleranceExceeded;
  }
  if (from_file && relative_error(parsed, original) > 1e-12) {
    err << "parsed value differs from the computed determinant\n";
    return kToleranceExceeded;
  }
  out << "ok " << text << "\n";
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Block-matrix determinants via recursive Schur complements"};
  app.require_subcommand(1);

  CommonInput det_in;
  std::string fallback;
  auto* det = app.add_subcommand("det", "Print the determinant of a matrix file");
  det->add_option("path", det_in.path, "Matrix file")->required();
  det->add_option("--partition", det_in.partition, "Block partition N,n");
  det->add_option("--fallback", fallback, "Fallback when a pivot block is singular (dense)");
  det->add_option("--format", det_in.format, "dense-text or block-json");

  CommonInput cmp_in;
  int cmp_trials = 1;
  double tol = 1e-8;
  auto* compare = app.add_subcommand("compare", "Compare the block engine with dense LU");
  compare->add_option("path", cmp_in.path, "Matrix file")->required();
  compare->add_option("--partition", cmp_in.partition, "Block partition N,n");
  compare->add_option("--trials", cmp_trials, "Timing repetitions");
  compare->add_option("--tol", tol, "Relative error tolerance");
  compare->add_option("--format", cmp_in.format, "dense-text or block-json");

  int max_count = 6;
  int max_size = 8;
  int bench_trials = 5;
  std::uint64_t seed = kDefaultSeed;
  auto* bench = app.add_subcommand("bench", "CSV timing/error sweep over random matrices");
  bench->add_option("--max-N", max_count, "Largest block count")->check(CLI::PositiveNumber);
  bench->add_option("--max-n", max_size, "Largest block size")->check(CLI::PositiveNumber);
  bench->add_option("--trials", bench_trials, "Samples per (N, n)")->check(CLI::PositiveNumber);
  bench->add_option("--seed", seed, "RNG seed");

  njl::NjlParams params;
  double delta_re = params.gap.real();
  double delta_im = params.gap.imag();
  double e_re = params.energy.real();
  double e_im = params.energy.imag();
  auto* njl_cmd = app.add_subcommand("njl", "Verify the 48x48 NJL determinant and eigenenergies");
  njl_cmd->add_option("--M", params.mass, "Effective quark mass");
  njl_cmd->add_option("--mu", params.chemical_potential, "Chemical potential");
  njl_cmd->add_option("--delta-re", delta_re, "Gap, real part");
  njl_cmd->add_option("--delta-im", delta_im, "Gap, imaginary part");
  njl_cmd->add_option("--kx", params.momentum[0], "Momentum x");
  njl_cmd->add_option("--ky", params.momentum[1], "Momentum y");
  njl_cmd->add_option("--kz", params.momentum[2], "Momentum z");
  njl_cmd->add_option("--E-re", e_re, "Probe energy, real part");
  njl_cmd->add_option("--E-im", e_im, "Probe energy, imaginary part");

  CommonInput pc_in;
  std::string value;
  auto* parse_check =
      app.add_subcommand("parse-check", "Check that printed determinants parse back exactly");
  parse_check->add_option("path", pc_in.path, "Matrix file");
  parse_check->add_option("--partition", pc_in.partition, "Block partition N,n");
  parse_check->add_option("--format", pc_in.format, "dense-text or block-json");
  parse_check->add_option("--value", value, "A printed determinant to round-trip");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (*det) return cmd_det(det_in, fallback, out, err);
    if (*compare) return cmd_compare(cmp_in, cmp_trials, tol, out, err);
    if (*bench) return cmd_bench(max_count, max_size, bench_trials, seed, out);
    if (*parse_check) return cmd_parse_check(pc_in, value, out, err);
    if (*njl_cmd) {
      params.gap = {delta_re, delta_im};
      params.energy = {e_re, e_im};
      for (double v : {params.mass, params.chemical_potential, delta_re, delta_im,
                       params.momentum[0], params.momentum[1], params.momentum[2], e_re, e_im}) {
        if (!std::isfinite(v)) {
          err << "error: njl arguments must be finite\n";
          return kInputError;
        }
      }
      const njl::NjlReport report = njl::verify_njl(params);
      print_njl_report(report, out);
      return report.all_passed() ? kOk : kToleranceExceeded;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const DimensionMismatch& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const SingularPivotBlock& e) {
    err << "error: " << e.what() << "\n";
    return kSingularPivot;
  }
  return kInputError;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"blockdet"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace blockdet::cli
