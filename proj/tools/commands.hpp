#pragma once

#include <string>

#include "cli_util.hpp"

namespace spectrank::cli {

struct RankOptions {
  std::string method;
  InputOptions input;
  double alpha = 0.85;
  double lambda0 = 0.0;  // 0 = unset
  std::string pref_path;
  std::string weights_path;
  double tol = 1e-9;
  std::size_t max_iter = 100000;
  double tie_tol = 1e-9;
  std::string variant = "solve";  // katz series method: solve | neumann
  std::string output;
};

int run_rank(const RankOptions& options);

int run_compare(const std::string& path_a, const std::string& path_b);

struct VerifyOptions {
  std::string mode;  // brauer | cesaro | resolvent | limit-sweep
  InputOptions input;
  double alpha = 0.5;
  std::string alphas;  // comma-separated; empty = per-mode default
  double tol = 0.0;    // 0 = per-mode default
  std::string pref_path;
};

int run_verify(const VerifyOptions& options);

}  // namespace spectrank::cli
