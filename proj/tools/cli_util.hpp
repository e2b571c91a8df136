#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "spectrank/io.hpp"
#include "spectrank/matrix_ops.hpp"
#include "spectrank/score_vector.hpp"

namespace spectrank::cli {

struct InputOptions {
  std::string path;
  std::string format = "edgelist";    // edgelist | mm
  std::string normalize = "auto";     // auto | strict | dangling-uniform | dangling-zero | none
};

// Loads a graph and applies the requested normalization; "auto" resolves to
// `fallback`. MatrixMarket inputs get synthetic labels "0".."n-1".
LabeledGraph load_graph(const InputOptions& options, const std::string& fallback);

// Preference vector from a TSV "label<TAB>weight" file; labels absent from
// the file get weight 0, unknown labels are reported on stderr and skipped.
// With as_distribution the result is renormalized to unit sum.
ScoreVector load_pref(const std::string& path, const std::vector<std::string>& labels,
                      bool as_distribution);

// One weight per line, '#' comments; index = surfing time starting at 0.
std::vector<double> load_weights(const std::string& path);

// Comma-separated list of reals.
std::vector<double> parse_alpha_list(const std::string& text);

// SPECTRANK_ORACLE_CAP override, default cap otherwise.
std::size_t oracle_cap_from_env();

void write_ranking_file(const ScoreVector& scores, double tie_tol,
                        const std::vector<std::string>& labels, const std::string& path_or_empty,
                        const std::string& stdout_header);

}  // namespace spectrank::cli
