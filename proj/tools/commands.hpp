#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace writhe::cli {

enum class Format { text, csv, json };

struct WritheOptions {
  std::vector<std::string> permutation;  // tokens; empty means read --input or stdin
  std::string input;
  std::optional<std::size_t> size;       // with --identity or a random draw
  bool identity = false;
  std::uint64_t seed = 1;
  std::string algo = "fast";
  Format format = Format::text;
};

struct MomentsOptions {
  std::vector<int> n;
  std::vector<int> k;
  std::string mode = "exact";
  Format format = Format::csv;
};

struct SampleOptions {
  int n = 50;
  std::int64_t samples = 100000;
  std::uint64_t seed = 1;
  std::size_t bins = 161;
  double lo = -4.0;
  double hi = 4.0;
  int threads = 1;
  int streams = 16;
  int k_max = 4;
  std::string algo = "fast";
  Format format = Format::json;
  std::string output;  // prefix; writes <prefix>.csv and <prefix>.json
};

struct LimitOptions {
  double lo = -4.0;
  double hi = 4.0;
  double step = 0.01;
  int terms = 1000;
  Format format = Format::csv;
};

struct BenchOptions {
  int fast_lo = 14;
  int fast_hi = 20;
  int naive_lo = 10;
  int naive_hi = 14;
  int repetitions = 3;
  std::uint64_t seed = 1;
  std::string algo = "both";
  Format format = Format::text;
};

struct CorrOptions {
  std::string input;  // "-" reads stdin
  std::vector<std::string> kernels{"beta:beta", "gamma:gamma"};
  Format format = Format::text;
};

int run_writhe(const WritheOptions& options, std::ostream& out);
int run_moments(const MomentsOptions& options, std::ostream& out);
int run_sample(const SampleOptions& options, std::ostream& out);
int run_limit(const LimitOptions& options, std::ostream& out);
int run_bench(const BenchOptions& options, std::ostream& out);
int run_corr(const CorrOptions& options, std::ostream& out, std::ostream& err);

}  // namespace writhe::cli
