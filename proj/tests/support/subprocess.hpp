#pragma once

// Runs the installed CLI as a subprocess; used by the CLI integration tests
// and the end-to-end acceptance criterion. The binary path comes from the
// SPECTRANK_BIN environment variable (set by ctest).

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace testsupport {

struct CommandResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

inline const std::string& cli_binary() {
  static const std::string path = [] {
    const char* env = std::getenv("SPECTRANK_BIN");
    if (env == nullptr || *env == '\0') {
      throw std::runtime_error("SPECTRANK_BIN is not set; run through ctest or export it");
    }
    return std::string(env);
  }();
  return path;
}

inline std::filesystem::path scratch_dir() {
  static const std::filesystem::path dir = [] {
    auto base = std::filesystem::temp_directory_path() /
                ("spectrank_t" + std::to_string(static_cast<long>(::getpid())));
    std::filesystem::create_directories(base);
    return base;
  }();
  return dir;
}

inline std::filesystem::path scratch_file(const std::string& name) {
  return scratch_dir() / name;
}

inline void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path);
  out << content;
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// args is the raw argument string, e.g. "rank --method pagerank --input g.tsv".
inline CommandResult run_cli(const std::string& args, const std::string& extra_env = "") {
  static int counter = 0;
  auto out_path = scratch_file("stdout_" + std::to_string(counter) + ".txt");
  auto err_path = scratch_file("stderr_" + std::to_string(counter) + ".txt");
  ++counter;

  std::string command = extra_env + (extra_env.empty() ? "" : " ") + "'" + cli_binary() + "' " +
                        args + " > '" + out_path.string() + "' 2> '" + err_path.string() + "'";
  int status = std::system(command.c_str());

  CommandResult result;
  if (status == -1) {
    result.exit_code = -1;
  } else if (WIFEXITED(status)) {
    result.exit_code = WEXITSTATUS(status);
  } else {
    result.exit_code = 128;
  }
  result.out = read_file(out_path);
  result.err = read_file(err_path);
  return result;
}

}  // namespace testsupport
