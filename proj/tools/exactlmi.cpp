// exactlmi: exact feasibility and low-rank points of linear matrix inequalities.

#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "exactlmi/exactlmi.hpp"

namespace {

enum Exit { kOk = 0, kUsage = 2, kParse = 3, kInternal = 4 };

struct SolveArgs {
  std::string input;
  bool all = false, rnk = false, par = false, deg = false;
  std::vector<std::size_t> ranks;
  unsigned digits = 10;
  std::optional<std::uint64_t> seed;
  std::string format = "text";
  unsigned threads = 1;
};

int write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return kOk;
  }
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot write '" << path << "'\n";
    return kUsage;
  }
  out << text;
  return kOk;
}

int run_solve(const SolveArgs& a) {
  std::optional<exactlmi::LinearPencil> P;
  try {
    P = exactlmi::load_pencil(a.input);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  }
  exactlmi::SolveOptions opts;
  opts.all = a.all;
  opts.rnk = a.rnk;
  opts.par = a.par;
  opts.deg = a.deg;
  opts.ranks = a.ranks;
  opts.digits = a.digits;
  opts.seed = a.seed;
  opts.threads = a.threads;
  try {
    exactlmi::SolveReport rep = exactlmi::solve_lmi(*P, opts);
    for (const auto& f : rep.failures) std::cerr << "warning: " << f << "\n";
    nlohmann::json j = exactlmi::report_to_json(rep, P->names());
    if (a.format == "json") std::cout << j.dump(2) << "\n";
    else std::cout << exactlmi::render_text(j) << "\n";
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solver for linear matrix inequalities"};
  app.require_subcommand(1);

  SolveArgs sa;
  auto* solve = app.add_subcommand("solve", "Find a point of the spectrahedron or certify it empty");
  solve->add_option("input", sa.input, "Pencil file (.lmi text or .json)")->required()->check(CLI::ExistingFile);
  solve->add_flag("--all", sa.all, "Return every certified point of the requested ranks");
  solve->add_flag("--rnk", sa.rnk, "Report the certified rank");
  solve->add_flag("--par", sa.par, "Report the rational univariate parametrization");
  solve->add_flag("--deg", sa.deg, "Report the degree of the parametrization");
  solve->add_option("--ranks", sa.ranks, "Comma separated ranks to try")->delimiter(',');
  solve->add_option("--digits", sa.digits, "Significant digits of the isolating boxes")->check(CLI::Range(1u, 100000u));
  solve->add_option("--seed", sa.seed, "Random seed")->envname("EXACTLMI_SEED");
  solve->add_option("--format", sa.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  solve->add_option("--threads", sa.threads, "Worker threads")->check(CLI::Range(1u, 256u));

  std::size_t gm = 3, gn = 2;
  std::uint64_t gseed = 0;
  std::int64_t gbound = 100;
  std::string gout;
  auto* gen = app.add_subcommand("gen-random", "Write a random dense symmetric pencil");
  gen->add_option("--m", gm, "Matrix size")->check(CLI::PositiveNumber);
  gen->add_option("--n", gn, "Number of variables")->check(CLI::PositiveNumber);
  gen->add_option("--seed", gseed, "Random seed")->envname("EXACTLMI_SEED");
  gen->add_option("--bound", gbound, "Coefficient bound")->check(CLI::NonNegativeNumber);
  gen->add_option("-o,--output", gout, "Output file (default stdout)");

  std::size_t en = 2;
  std::string eout;
  auto* exp = app.add_subcommand("gen-expbits", "Write the block-diagonal family with doubly exponential coordinates");
  exp->add_option("n", en, "Number of blocks")->required()->check(CLI::PositiveNumber);
  exp->add_option("-o,--output", eout, "Output file (default stdout)");

  std::string bfamily = "random";
  std::size_t bm = 3, bn = 2, bcount = 5;
  std::uint64_t bseed = 1;
  unsigned bthreads = 1;
  auto* bench = app.add_subcommand("bench", "Time the solver on generated pencils");
  bench->add_option("--family", bfamily, "random or expbits")->check(CLI::IsMember({"random", "expbits"}));
  bench->add_option("--m", bm, "Matrix size (random)")->check(CLI::PositiveNumber);
  bench->add_option("--n", bn, "Variables (random) or blocks (expbits)")->check(CLI::PositiveNumber);
  bench->add_option("--count", bcount, "Number of random instances")->check(CLI::PositiveNumber);
  bench->add_option("--seed", bseed, "Random seed")->envname("EXACTLMI_SEED");
  bench->add_option("--threads", bthreads, "Worker threads")->check(CLI::Range(1u, 256u));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*solve) return run_solve(sa);
    if (*gen) return write_output(exactlmi::write_pencil(exactlmi::gen_random_pencil(gm, gn, gseed, gbound)), gout);
    if (*exp) return write_output(exactlmi::write_pencil(exactlmi::gen_expbits_pencil(en)), eout);
    if (*bench) {
      std::vector<std::pair<std::string, exactlmi::LinearPencil>> cases;
      if (bfamily == "expbits") {
        cases.emplace_back("expbits n=" + std::to_string(bn), exactlmi::gen_expbits_pencil(bn));
      } else {
        for (std::size_t k = 0; k < bcount; ++k)
          cases.emplace_back("random m=" + std::to_string(bm) + " n=" + std::to_string(bn) + " #" + std::to_string(k),
                             exactlmi::gen_random_pencil(bm, bn, exactlmi::derive_seed(bseed, 0, k)));
      }
      for (const auto& [label, P] : cases) {
        exactlmi::SolveOptions opts;
        opts.rnk = true;
        opts.seed = bseed;
        opts.threads = bthreads;
        if (bfamily == "expbits") opts.ranks = {bn};
        auto t0 = std::chrono::steady_clock::now();
        auto rep = exactlmi::solve_lmi(P, opts);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << label << "  " << (rep.solutions.empty() ? "empty" : "feasible");
        if (!rep.solutions.empty()) std::cout << " rank " << *rep.solutions.front().rank;
        std::cout << "  " << secs << " s\n";
      }
      return kOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
