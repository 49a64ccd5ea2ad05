#include <iostream>
#include <map>
#include <thread>

#include "CLI11.hpp"
#include "commands.hpp"
#include "writhe/errors.hpp"

namespace {

using writhe::cli::Format;

const std::map<std::string, Format> kFormats{{"text", Format::text}, {"csv", Format::csv}, {"json", Format::json}};

void add_format(CLI::App* cmd, Format& target) {
  cmd->add_option("--format", target, "Output format: text, csv or json")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Writhe of random permutations: exact moments, sampling, limit law and circular correlation"};
  app.require_subcommand(1);

  writhe::cli::WritheOptions wo;
  auto* w = app.add_subcommand("writhe", "Writhe of one permutation of odd size");
  w->add_option("permutation", wo.permutation, "Image list p(0) p(1) ... (0-based)");
  w->add_option("--input", wo.input, "Read the permutation from a file ('-' for stdin)");
  w->add_option("--size", wo.size, "Use a permutation of this size (random unless --identity)");
  w->add_flag("--identity", wo.identity, "With --size, use the identity permutation");
  w->add_option("--seed", wo.seed, "Seed for the random permutation");
  w->add_option("--algo", wo.algo, "fast, naive or both")->check(CLI::IsMember({"fast", "naive", "both"}));
  add_format(w, wo.format);

  writhe::cli::MomentsOptions mo;
  auto* m = app.add_subcommand("moments", "Exact and limiting moments of the writhe");
  m->add_option("--n", mo.n, "Values of n (N = 2n+1), comma separated")->delimiter(',');
  m->add_option("--k", mo.k, "Moment orders, comma separated")->delimiter(',');
  m->add_option("--mode", mo.mode, "exact, enumerate or limit")->check(CLI::IsMember({"exact", "enumerate", "limit"}));
  add_format(m, mo.format);

  writhe::cli::SampleOptions so;
  so.threads = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  auto* s = app.add_subcommand("sample", "Monte Carlo histogram and moments of W = w/n");
  s->add_option("--n", so.n, "Half size; permutations of N = 2n+1 points");
  s->add_option("--samples", so.samples, "Number of random permutations");
  s->add_option("--seed", so.seed, "Master seed");
  s->add_option("--bins", so.bins, "Histogram bin count");
  s->add_option("--lo", so.lo, "Left histogram edge");
  s->add_option("--hi", so.hi, "Right histogram edge");
  s->add_option("--threads", so.threads, "Worker threads (results do not depend on this)");
  s->add_option("--streams", so.streams, "Logical random streams (results depend on this)");
  s->add_option("--k-max", so.k_max, "Highest sample moment, 2..8");
  s->add_option("--algo", so.algo, "fast or naive")->check(CLI::IsMember({"fast", "naive"}));
  s->add_option("--output", so.output, "Write <prefix>.csv and <prefix>.json instead of stdout");
  add_format(s, so.format);

  writhe::cli::LimitOptions lo;
  auto* l = app.add_subcommand("limit", "Tabulate the limit density and CDF with reference curves");
  l->add_option("--lo", lo.lo, "Grid start");
  l->add_option("--hi", lo.hi, "Grid end");
  l->add_option("--step", lo.step, "Grid step");
  l->add_option("--terms", lo.terms, "Product terms in the characteristic function");
  add_format(l, lo.format);

  writhe::cli::BenchOptions bo;
  auto* b = app.add_subcommand("bench", "Time fast and naive writhe and fit scaling exponents");
  b->add_option("--fast-min", bo.fast_lo, "Smallest k for the fast ladder N = 2^k + 1");
  b->add_option("--fast-max", bo.fast_hi, "Largest k for the fast ladder");
  b->add_option("--naive-min", bo.naive_lo, "Smallest k for the naive ladder");
  b->add_option("--naive-max", bo.naive_hi, "Largest k for the naive ladder");
  b->add_option("--repetitions", bo.repetitions, "Timings per size; the best is kept");
  b->add_option("--seed", bo.seed, "Seed for the benchmark permutations");
  b->add_option("--algo", bo.algo, "fast, naive or both")->check(CLI::IsMember({"fast", "naive", "both"}));
  add_format(b, bo.format);

  writhe::cli::CorrOptions co;
  auto* c = app.add_subcommand("corr", "Circular rank correlation of paired angles");
  c->add_option("--input", co.input, "Two-column CSV of angles in radians ('-' for stdin)")->required();
  c->add_option("--kernels", co.kernels, "Kernel pairs f:g from alpha, beta, gamma")->delimiter(',');
  add_format(c, co.format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*w) return writhe::cli::run_writhe(wo, std::cout);
    if (*m) return writhe::cli::run_moments(mo, std::cout);
    if (*s) return writhe::cli::run_sample(so, std::cout);
    if (*l) return writhe::cli::run_limit(lo, std::cout);
    if (*b) return writhe::cli::run_bench(bo, std::cout);
    if (*c) return writhe::cli::run_corr(co, std::cout, std::cerr);
  } catch (const writhe::InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const writhe::ContractViolation& e) {
    std::cerr << "contract violation: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
