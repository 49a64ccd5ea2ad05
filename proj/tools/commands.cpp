#include "commands.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <numbers>
#include <sstream>

#include "json.hpp"
#include "writhe/bench.hpp"
#include "writhe/circular.hpp"
#include "writhe/errors.hpp"
#include "writhe/fast_writhe.hpp"
#include "writhe/limit_law.hpp"
#include "writhe/moments.hpp"
#include "writhe/monte_carlo.hpp"
#include "writhe/permutation.hpp"
#include "writhe/rational.hpp"

namespace writhe::cli {

using nlohmann::ordered_json;

namespace {

std::string num(double x, int digits = 17) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

std::string read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string read_source(const std::string& path) {
  if (path.empty() || path == "-") return read_all(std::cin);
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  return read_all(in);
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path);
  out << contents;
  if (!out) throw InvalidInput("write failed for " + path);
}

WritheAlgorithm parse_algorithm(const std::string& name) {
  if (name == "fast") return WritheAlgorithm::fast;
  if (name == "naive") return WritheAlgorithm::naive;
  throw DomainError("unknown algorithm '" + name + "'");
}

const char* name_of(WritheAlgorithm a) { return a == WritheAlgorithm::fast ? "fast" : "naive"; }

Permutation load_permutation(const WritheOptions& o) {
  if (o.identity) {
    if (!o.size) throw DomainError("--identity needs --size");
    return Permutation::identity(*o.size);
  }
  if (o.size) {
    SampleStream stream(o.seed, 0);
    return random_permutation(*o.size, stream);
  }
  if (!o.permutation.empty()) {
    std::string text;
    for (const auto& t : o.permutation) text += t + " ";
    return Permutation::parse(text);
  }
  return Permutation::parse(read_source(o.input));
}

}  // namespace

int run_writhe(const WritheOptions& options, std::ostream& out) {
  const auto p = load_permutation(options);
  if (p.size() % 2 == 0) throw SizeParityError("writhe needs an odd number of points, got " + std::to_string(p.size()));

  std::vector<WritheAlgorithm> algos;
  if (options.algo == "both") algos = {WritheAlgorithm::fast, WritheAlgorithm::naive};
  else algos = {parse_algorithm(options.algo)};

  struct Timed {
    WritheAlgorithm algo;
    std::int64_t value;
    double seconds;
  };
  std::vector<Timed> runs;
  for (auto a : algos) {
    const auto start = std::chrono::steady_clock::now();
    const auto w = compute_writhe(p, a);
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
    runs.push_back({a, w, dt.count()});
  }
  for (const auto& r : runs) {
    if (r.value != runs.front().value) {
      throw ContractViolation("fast and naive writhe disagree: " + std::to_string(runs[0].value) + " vs " +
                              std::to_string(r.value));
    }
  }
  const std::int64_t w = runs.front().value;
  const std::size_t n = p.size() / 2;

  if (options.format == Format::json) {
    ordered_json j;
    j["command"] = "writhe";
    j["N"] = p.size();
    j["n"] = n;
    j["writhe"] = w;
    j["normalized"] = n == 0 ? 0.0 : static_cast<double>(w) / static_cast<double>(n);
    j["runs"] = ordered_json::array();
    for (const auto& r : runs) j["runs"].push_back({{"algorithm", name_of(r.algo)}, {"writhe", r.value}, {"seconds", r.seconds}});
    j["agree"] = true;
    out << j.dump(2) << "\n";
  } else {
    out << w << "\n";
    if (runs.size() > 1) {
      for (const auto& r : runs) out << name_of(r.algo) << " " << num(r.seconds, 6) << " s\n";
      out << "agree\n";
    }
  }
  return 0;
}

int run_moments(const MomentsOptions& options, std::ostream& out) {
  struct Row {
    std::optional<int> n;
    int k;
    Rational value;
  };
  std::vector<Row> rows;
  if (options.mode == "limit") {
    std::vector<int> ks = options.k;
    if (ks.empty()) for (int k = 2; k <= 20; k += 2) ks.push_back(k);
    for (int k : ks) {
      if (k < 2 || k > 20 || k % 2) throw DomainError("limit mode takes even k in 2..20, got " + std::to_string(k));
      rows.push_back({std::nullopt, k, mu_k(k)});
    }
  } else if (options.mode == "exact" || options.mode == "enumerate") {
    const std::vector<int> ns = options.n.empty() ? std::vector<int>{1, 2, 3} : options.n;
    const std::vector<int> ks = options.k.empty() ? std::vector<int>{2, 4} : options.k;
    for (int k : ks)
      if (k != 2 && k != 4) throw DomainError(options.mode + " mode takes k = 2 or 4, got " + std::to_string(k));
    for (int n : ns) {
      if (n < 1) throw DomainError("n must be positive");
      if (options.mode == "enumerate" && n > 3) throw DomainError("enumerate mode is limited to n <= 3");
      for (int k : ks) {
        Rational v = options.mode == "exact" ? evaluate(exact_moment_poly(k), Rational(n)) : moment_enumeration(n, k);
        rows.push_back({n, k, v});
      }
    }
  } else {
    throw DomainError("unknown mode '" + options.mode + "'");
  }

  auto normalized = [](const Row& r) {
    Rational scale = 1;
    for (int i = 0; i < r.k; ++i) scale *= *r.n;
    return Rational(r.value / scale);
  };

  if (options.format == Format::json) {
    ordered_json j;
    j["command"] = "moments";
    j["mode"] = options.mode;
    j["rows"] = ordered_json::array();
    for (const auto& r : rows) {
      ordered_json row;
      if (r.n) {
        row["n"] = *r.n;
        row["N"] = 2 * *r.n + 1;
      }
      row["k"] = r.k;
      row["moment"] = to_string(r.value);
      row["moment_decimal"] = to_double(r.value);
      if (r.n) {
        const auto w = normalized(r);
        row["normalized"] = to_string(w);
        row["normalized_decimal"] = to_double(w);
      }
      j["rows"].push_back(row);
    }
    out << j.dump(2) << "\n";
    return 0;
  }
  if (options.mode == "limit") {
    out << "k,moment,moment_decimal\n";
    for (const auto& r : rows) out << r.k << "," << to_string(r.value) << "," << num(to_double(r.value), 12) << "\n";
  } else {
    out << "n,N,k,moment,moment_decimal,normalized,normalized_decimal\n";
    for (const auto& r : rows) {
      const auto w = normalized(r);
      out << *r.n << "," << 2 * *r.n + 1 << "," << r.k << "," << to_string(r.value) << "," << num(to_double(r.value), 12)
          << "," << to_string(w) << "," << num(to_double(w), 12) << "\n";
    }
  }
  return 0;
}

int run_sample(const SampleOptions& options, std::ostream& out) {
  if (options.n < 1) throw DomainError("n must be positive");
  if (options.samples < 1) throw DomainError("samples must be positive");
  if (options.k_max < 2 || options.k_max > 8) throw DomainError("k-max must lie in 2..8");
  if (options.threads < 1 || options.streams < 1) throw DomainError("threads and streams must be positive");
  if (options.bins < 1 || !(options.lo < options.hi)) throw DomainError("need lo < hi and at least one bin");

  SimulationConfig config;
  config.n = options.n;
  config.samples = options.samples;
  config.seed = options.seed;
  config.streams = options.streams;
  config.threads = options.threads;
  config.k_max = options.k_max;
  config.bins = {options.lo, options.hi, options.bins};
  config.algorithm = parse_algorithm(options.algo);
  const auto result = simulate(config);
  const auto diag = compare_to_limit(result.histogram, result.moments);

  std::ostringstream csv;
  csv << "bin_left,bin_right,count,density\n";
  const auto edges = result.histogram.edges();
  for (std::size_t i = 0; i < result.histogram.num_bins(); ++i) {
    csv << num(edges[i]) << "," << num(edges[i + 1]) << "," << result.histogram.counts()[i] << ","
        << num(result.histogram.density(i)) << "\n";
  }

  const double m1 = result.moments[0].value;
  const double m2 = result.moments[1].value;
  const Rational exact_second(2 * options.n * options.n + options.n, 3 * options.n * options.n);

  ordered_json j;
  j["command"] = "sample";
  j["n"] = options.n;
  j["N"] = 2 * options.n + 1;
  j["samples"] = result.samples;
  j["seed"] = options.seed;
  j["streams"] = options.streams;
  j["algorithm"] = options.algo;
  j["bins"] = {{"lo", options.lo}, {"hi", options.hi}, {"count", options.bins}};
  j["moments"] = ordered_json::array();
  for (std::size_t i = 0; i < result.moments.size(); ++i) {
    const auto& m = result.moments[i];
    ordered_json row{{"k", m.k}, {"value", m.value}, {"standard_error", m.standard_error}};
    if (i < diag.moment_gaps.size()) row["limit"] = diag.moment_gaps[i].limit;
    j["moments"].push_back(row);
  }
  j["variance"] = m2 - m1 * m1;
  j["exact_second_moment"] = {{"rational", to_string(exact_second)}, {"decimal", to_double(exact_second)}};
  j["limit_second_moment"] = 2.0 / 3.0;
  j["ks_statistic"] = diag.ks_statistic;
  j["ks_location"] = diag.ks_location;
  j["mean_writhe"] = result.mean_writhe;
  j["mean_writhe_standard_error"] = result.mean_writhe_standard_error;
  j["underflow"] = result.histogram.underflow();
  j["overflow"] = result.histogram.overflow();
  const std::string summary = j.dump(2) + "\n";

  if (!options.output.empty()) {
    write_file(options.output + ".csv", csv.str());
    write_file(options.output + ".json", summary);
  } else if (options.format == Format::csv) {
    out << csv.str();
  } else {
    out << summary;
  }
  return 0;
}

int run_limit(const LimitOptions& options, std::ostream& out) {
  if (!(options.step > 0) || !(options.lo < options.hi)) throw DomainError("need step > 0 and lo < hi");
  const double span = (options.hi - options.lo) / options.step;
  if (span > 1e7) throw DomainError("grid too large");
  const auto count = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;

  const LimitLaw law({.terms = options.terms});
  const double var = 2.0 / 3.0;
  const double sd = std::sqrt(var);
  const double logistic_scale = std::sqrt(3.0 * var) / std::numbers::pi;
  const double sech_scale = 2.0 * sd / std::numbers::pi;  // (1/pi) sech has variance pi^2/4

  struct Row {
    double x, pdf, cdf, gauss_pdf, gauss_cdf, logistic_pdf, logistic_cdf, sech_pdf_v, sech_cdf_v;
  };
  std::vector<Row> rows;
  rows.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    double x = options.lo + static_cast<double>(i) * options.step;
    if (std::fabs(x) < 1e-9 * options.step) x = 0.0;
    const double z = x / sd;
    const double e = std::exp(-std::fabs(x) / logistic_scale);
    const double lcdf = x >= 0 ? 1.0 / (1.0 + e) : e / (1.0 + e);
    rows.push_back({x, law.pdf(x), law.cdf(x), std::exp(-0.5 * z * z) / (sd * std::sqrt(2 * std::numbers::pi)),
                    0.5 * std::erfc(-z / std::numbers::sqrt2), e / (logistic_scale * (1 + e) * (1 + e)), lcdf,
                    sech_pdf(x / sech_scale) / sech_scale, sech_cdf(x / sech_scale)});
  }

  if (options.format == Format::json) {
    ordered_json j;
    j["command"] = "limit";
    j["grid"] = {{"lo", options.lo}, {"hi", options.hi}, {"step", options.step}, {"points", count}};
    j["terms"] = options.terms;
    j["reference_variance"] = var;
    j["rows"] = ordered_json::array();
    for (const auto& r : rows) {
      j["rows"].push_back({{"x", r.x},
                           {"pdf", r.pdf},
                           {"cdf", r.cdf},
                           {"gaussian_pdf", r.gauss_pdf},
                           {"gaussian_cdf", r.gauss_cdf},
                           {"logistic_pdf", r.logistic_pdf},
                           {"logistic_cdf", r.logistic_cdf},
                           {"sech_pdf", r.sech_pdf_v},
                           {"sech_cdf", r.sech_cdf_v}});
    }
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "x,pdf,cdf,gaussian_pdf,gaussian_cdf,logistic_pdf,logistic_cdf,sech_pdf,sech_cdf\n";
  for (const auto& r : rows) {
    out << num(r.x, 12) << "," << num(r.pdf, 12) << "," << num(r.cdf, 12) << "," << num(r.gauss_pdf, 12) << ","
        << num(r.gauss_cdf, 12) << "," << num(r.logistic_pdf, 12) << "," << num(r.logistic_cdf, 12) << ","
        << num(r.sech_pdf_v, 12) << "," << num(r.sech_cdf_v, 12) << "\n";
  }
  return 0;
}

int run_bench(const BenchOptions& options, std::ostream& out) {
  struct Series {
    WritheAlgorithm algo;
    int lo, hi;
    std::vector<BenchPoint> points;
    double exponent;
  };
  std::vector<Series> series;
  const bool fast = options.algo == "fast" || options.algo == "both";
  const bool naive = options.algo == "naive" || options.algo == "both";
  if (!fast && !naive) throw DomainError("unknown algorithm '" + options.algo + "'");
  auto run = [&](WritheAlgorithm a, int lo, int hi) {
    const auto sizes = power_ladder(lo, hi);
    auto points = bench_writhe(sizes, a, options.repetitions, options.seed);
    const double e = fitted_exponent(points);
    series.push_back({a, lo, hi, std::move(points), e});
  };
  if (fast) run(WritheAlgorithm::fast, options.fast_lo, options.fast_hi);
  if (naive) run(WritheAlgorithm::naive, options.naive_lo, options.naive_hi);

  if (options.format == Format::json) {
    ordered_json j;
    j["command"] = "bench";
    j["seed"] = options.seed;
    j["repetitions"] = options.repetitions;
    j["series"] = ordered_json::array();
    for (const auto& s : series) {
      ordered_json pts = ordered_json::array();
      for (const auto& p : s.points) pts.push_back({{"N", p.size}, {"seconds", p.seconds}, {"writhe", p.writhe}});
      j["series"].push_back({{"algorithm", name_of(s.algo)},
                             {"ladder", {{"min_exponent", s.lo}, {"max_exponent", s.hi}}},
                             {"points", pts},
                             {"fitted_exponent", s.exponent}});
    }
    out << j.dump(2) << "\n";
    return 0;
  }
  if (options.format == Format::csv) {
    out << "algorithm,N,seconds,writhe\n";
    for (const auto& s : series)
      for (const auto& p : s.points) out << name_of(s.algo) << "," << p.size << "," << num(p.seconds, 6) << "," << p.writhe << "\n";
    return 0;
  }
  for (const auto& s : series) {
    out << name_of(s.algo) << " (N = 2^k + 1, k = " << s.lo << ".." << s.hi << ")\n";
    for (const auto& p : s.points) out << "  N=" << p.size << "  " << num(p.seconds, 6) << " s\n";
    out << "  fitted exponent " << num(s.exponent, 4) << "\n";
  }
  return 0;
}

namespace {

PeriodicKernel kernel_by_name(const std::string& name) {
  if (name == "alpha") return kernel_alpha();
  if (name == "beta") return kernel_beta();
  if (name == "gamma") return kernel_gamma();
  throw DomainError("unknown kernel '" + name + "' (expected alpha, beta or gamma)");
}

}  // namespace

int run_corr(const CorrOptions& options, std::ostream& out, std::ostream& err) {
  std::istringstream in(read_source(options.input));
  const auto data = read_angles_csv(in);
  const auto& ranks = data.ranks;
  for (const auto& w : data.warnings) err << "warning: " << w << "\n";

  struct Result {
    std::string pair;
    double value;
    std::optional<Rational> exact;
  };
  std::vector<Result> results;
  for (const auto& spec : options.kernels) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) throw DomainError("kernel pair must look like f:g, got '" + spec + "'");
    const auto f = kernel_by_name(spec.substr(0, colon));
    const auto g = kernel_by_name(spec.substr(colon + 1));
    if (f.scaled_exact && g.scaled_exact) {
      const auto exact = r_fg_exact(ranks, f, g);
      results.push_back({spec, to_double(exact), exact});
    } else {
      results.push_back({spec, r_fg(ranks, f, g), std::nullopt});
    }
  }
  const double N = static_cast<double>(ranks.size());
  const double pairs = N * (N - 1) / 2;

  if (options.format == Format::json) {
    ordered_json j;
    j["command"] = "corr";
    j["N"] = ranks.size();
    j["ties"] = data.ties;
    j["warnings"] = data.warnings;
    j["results"] = ordered_json::array();
    for (const auto& r : results) {
      ordered_json row{{"kernels", r.pair}, {"value", r.value}, {"per_pair", pairs > 0 ? r.value / pairs : 0.0}};
      if (r.exact) row["exact"] = to_string(*r.exact);
      j["results"].push_back(row);
    }
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "N " << ranks.size() << "\nties " << data.ties << "\n";
  for (const auto& r : results) {
    out << r.pair << " " << num(r.value, 12);
    if (r.exact) out << " exact " << to_string(*r.exact);
    out << " per_pair " << num(pairs > 0 ? r.value / pairs : 0.0, 6) << "\n";
  }
  return 0;
}

}  // namespace writhe::cli
