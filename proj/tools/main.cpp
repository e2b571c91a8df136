#include <CLI11.hpp>

#include <cstdio>
#include <fstream>

#include "commands.hpp"
#include "spectrank/error.hpp"
#include "spectrank/io.hpp"

namespace spectrank::cli {

int run_compare(const std::string& path_a, const std::string& path_b) {
  auto parse = [](const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::IoError, "cannot open '" + path + "'");
    return parse_ranking(in);
  };
  double tau = kendall_tau_labeled(parse(path_a), parse(path_b));
  std::printf("%.6f\n", tau);
  return 0;
}

}  // namespace spectrank::cli

int main(int argc, char** argv) {
  using namespace spectrank;
  using namespace spectrank::cli;

  CLI::App app{"spectral ranking toolkit"};
  app.require_subcommand(1);

  RankOptions rank_options;
  CLI::App* rank = app.add_subcommand("rank", "rank the nodes of a graph");
  rank->add_option("--method", rank_options.method,
                   "seeley|wei|katz|katz-classic|hubbell|damped|pagerank|markovian|hits|"
                   "eigenfactor|pinski-narin|geller|hoede|ahp|surfer")
      ->required();
  rank->add_option("--input", rank_options.input.path, "graph file")->required();
  rank->add_option("--format", rank_options.input.format, "edgelist|mm (default edgelist)");
  rank->add_option("--normalize", rank_options.input.normalize,
                   "strict|dangling-uniform|dangling-zero|none (default depends on method)");
  rank->add_option("--alpha", rank_options.alpha, "damping factor (default 0.85)");
  rank->add_option("--lambda0", rank_options.lambda0, "pin the dominant eigenvalue");
  rank->add_option("--pref", rank_options.pref_path, "preference/boundary vector TSV");
  rank->add_option("--weights", rank_options.weights_path, "surfing-time weights (surfer)");
  rank->add_option("--tol", rank_options.tol, "convergence tolerance (default 1e-9)");
  rank->add_option("--max-iter", rank_options.max_iter, "iteration cap (default 100000)");
  rank->add_option("--tie-tol", rank_options.tie_tol, "tie tolerance for ranks (default 1e-9)");
  rank->add_option("--variant", rank_options.variant, "katz series method: solve|neumann");
  rank->add_option("--output", rank_options.output, "output TSV (stdout when omitted)");

  std::string compare_a, compare_b;
  CLI::App* compare = app.add_subcommand("compare", "Kendall tau-b of two ranking files");
  compare->add_option("a", compare_a, "first ranking TSV")->required();
  compare->add_option("b", compare_b, "second ranking TSV")->required();

  VerifyOptions verify_options;
  CLI::App* verify = app.add_subcommand("verify", "dense brute-force identity checks");
  verify->add_option("mode", verify_options.mode, "brauer|cesaro|resolvent|limit-sweep")
      ->required();
  verify->add_option("--input", verify_options.input.path, "graph file")->required();
  verify->add_option("--format", verify_options.input.format, "edgelist|mm (default edgelist)");
  verify->add_option("--normalize", verify_options.input.normalize,
                     "strict|dangling-uniform|dangling-zero|none");
  verify->add_option("--alpha", verify_options.alpha, "perturbation weight (brauer, default 0.5)");
  verify->add_option("--alphas", verify_options.alphas,
                     "comma-separated damping list (resolvent, limit-sweep)");
  verify->add_option("--tol", verify_options.tol, "override the per-mode tolerance");
  verify->add_option("--pref", verify_options.pref_path, "boundary vector TSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;  // usage problems are input errors
  }

  try {
    if (rank->parsed()) return run_rank(rank_options);
    if (compare->parsed()) return run_compare(compare_a, compare_b);
    return run_verify(verify_options);
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return is_numerical(e.kind()) ? 2 : 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
