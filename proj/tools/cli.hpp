#pragma once

// Command-line front end for the riesz-eig solver. Each subcommand renders
// its artifact to a string first, so a failed run never leaves a partial file.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace riesz::cli {

inline constexpr const char* kSchema = "riesz-eig/1";

enum class Format { csv, json };

/// Bad parameters; the front end maps these to exit status 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  double two_alpha = 0.0;
  int n = 64;
  std::vector<int> n_list;
  std::optional<int> reference_n;
  std::optional<int> fine_n;
  std::string output;  // empty or "-" writes to stdout
  Format format = Format::csv;
  bool vectors = false;
  bool verify_oracle = false;
  int k = 1;
  int samples = 257;
  double tol = 1.2e-4;
};

/// 17 significant digits, shortest form; zero is always "0".
std::string format_number(double v);

std::string render_eig(const RunConfig& config);
std::string render_convergence(const RunConfig& config);
std::string render_weyl(const RunConfig& config);
std::string render_condition(const RunConfig& config);
std::string render_eigfun(const RunConfig& config);
std::string render_mass(const RunConfig& config);

/// Writes to a temporary sibling file and renames it over path.
void write_output(const std::string& path, const std::string& content);

/// Full front end: parse, render, write. Returns the process exit status.
int run(int argc, char** argv);

}  // namespace riesz::cli
