#include "cli.hpp"

#include <unistd.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <system_error>

#include "CLI11.hpp"
#include "riesz/analysis.hpp"
#include "riesz/parallel.hpp"
#include "riesz/quadrature.hpp"

namespace riesz::cli {

namespace {

FractionalOrder checked_order(double two_alpha) {
  if (!std::isfinite(two_alpha) || two_alpha <= 0.0) throw UsageError("--two-alpha must be a positive number");
  return FractionalOrder::from_two_alpha(two_alpha);
}

void check_n(int n, const char* flag) {
  if (n < 0) throw UsageError(std::string(flag) + " must be nonnegative");
}

void check_n_list(const std::vector<int>& ns) {
  if (ns.empty()) throw UsageError("--n-list must not be empty");
  for (std::size_t i = 0; i < ns.size(); ++i) {
    check_n(ns[i], "--n-list");
    if (i > 0 && ns[i] <= ns[i - 1]) throw UsageError("--n-list must be strictly ascending");
  }
}

std::string format_integer(long long v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

// Column-oriented table; the same data serializes to CSV or JSON.
struct Column {
  std::string name;
  std::vector<double> values;
  bool integral = false;
};

class JsonWriter {
 public:
  void begin_object() { open('{'); }
  void end_object() { close('}'); }
  void begin_array() { open('['); }
  void end_array() { close(']'); }

  void key(const std::string& k) {
    separator();
    string_literal(k);
    out_ << ':';
    after_key_ = true;
  }
  void number(double v) {
    separator();
    if (!std::isfinite(v)) throw std::runtime_error("non-finite value in output");
    out_ << format_number(v);
  }
  void integer(long long v) {
    separator();
    out_ << format_integer(v);
  }
  void string(const std::string& s) {
    separator();
    string_literal(s);
  }
  void numbers(const std::vector<double>& vs, bool integral = false) {
    begin_array();
    for (double v : vs) integral ? integer(std::llround(v)) : number(v);
    end_array();
  }

  std::string str() const { return out_.str() + "\n"; }

 private:
  void open(char c) {
    separator();
    out_ << c;
    first_ = true;
  }
  void close(char c) {
    out_ << c;
    first_ = false;
  }
  void separator() {
    if (after_key_) {
      after_key_ = false;
      return;
    }
    if (!first_) out_ << ',';
    first_ = false;
  }
  void string_literal(const std::string& s) {
    out_ << '"';
    for (char c : s) {
      if (c == '"' || c == '\\') out_ << '\\';
      out_ << c;
    }
    out_ << '"';
  }

  std::ostringstream out_;
  bool first_ = true;
  bool after_key_ = false;
};

struct Summary {
  std::string name;
  double value = 0.0;
  bool integral = false;
};

void write_summary(JsonWriter& json, const std::vector<Summary>& summary) {
  json.key("schema");
  json.string(kSchema);
  for (const Summary& s : summary) {
    json.key(s.name);
    s.integral ? json.integer(std::llround(s.value)) : json.number(s.value);
  }
}

std::string summary_json(const std::vector<Summary>& summary) {
  JsonWriter json;
  json.begin_object();
  write_summary(json, summary);
  json.end_object();
  return json.str();
}

std::string cell(double v, bool integral) {
  if (integral) return format_integer(std::llround(v));
  if (!std::isfinite(v)) throw std::runtime_error("non-finite value in output");
  return format_number(v);
}

std::string to_csv(const std::vector<Column>& columns) {
  std::string out;
  for (std::size_t c = 0; c < columns.size(); ++c) out += (c ? "," : "") + columns[c].name;
  out += '\n';
  const std::size_t rows = columns.empty() ? 0 : columns.front().values.size();
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (c) out += ',';
      out += cell(columns[c].values[r], columns[c].integral);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const std::vector<Summary>& summary, const std::vector<Column>& columns) {
  JsonWriter json;
  json.begin_object();
  write_summary(json, summary);
  for (const Column& c : columns) {
    json.key(c.name);
    json.numbers(c.values, c.integral);
  }
  json.end_object();
  return json.str();
}

// CSV gets the summary as a trailing "# {json}" line when there is one.
std::string emit(Format format, const std::vector<Summary>& summary, const std::vector<Column>& columns,
                 bool csv_summary) {
  if (format == Format::json) return to_json(summary, columns);
  std::string out = to_csv(columns);
  if (csv_summary) out += "# " + summary_json(summary);
  return out;
}

std::vector<double> counting(std::size_t count, int first) {
  std::vector<double> v(count);
  for (std::size_t i = 0; i < count; ++i) v[i] = static_cast<double>(first + static_cast<int>(i));
  return v;
}

}  // namespace

std::string format_number(double v) {
  if (v == 0.0) return "0";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string render_eig(const RunConfig& config) {
  const FractionalOrder order = checked_order(config.two_alpha);
  check_n(config.n, "--n");
  const EigenSolution sol = solve(order, config.n);
  const double chi = condition_number(sol);

  if (config.format == Format::json) {
    JsonWriter json;
    json.begin_object();
    write_summary(json, {{"two_alpha", config.two_alpha}, {"N", static_cast<double>(config.n), true}});
    json.key("lambdas");
    json.numbers(sol.lambdas);
    json.key("condition_number");
    json.number(chi);
    json.key("poincare_bound");
    json.number(poincare_bound(order));
    json.key("minmax_upper");
    json.number(minmax_upper_bound(order));
    if (config.vectors) {
      json.key("vectors");
      json.begin_array();
      for (const std::vector<double>& u : sol.vectors) json.numbers(u);
      json.end_array();
    }
    json.end_object();
    return json.str();
  }

  std::vector<Column> columns{{"n", counting(sol.size(), 1), true}, {"lambda", sol.lambdas}};
  if (config.vectors) {
    for (std::size_t j = 0; j < sol.size(); ++j) {
      Column c{"c_" + std::to_string(j), std::vector<double>(sol.size())};
      for (std::size_t i = 0; i < sol.size(); ++i) c.values[i] = sol.vectors[i][j];
      columns.push_back(std::move(c));
    }
  }
  return to_csv(columns);
}

std::string render_convergence(const RunConfig& config) {
  const FractionalOrder order = checked_order(config.two_alpha);
  check_n_list(config.n_list);
  if (!config.reference_n) throw UsageError("--reference-n is required");
  if (*config.reference_n <= config.n_list.back()) throw UsageError("--reference-n must exceed every entry of --n-list");

  const ConvergenceTable table = convergence_table(order, config.n_list, *config.reference_n);
  Column n{"N", {}, true};
  Column lambda1{"lambda1", {}};
  Column error{"error", {}};
  for (const ConvergenceRow& row : table.rows) {
    n.values.push_back(row.n);
    lambda1.values.push_back(row.lambda1);
    error.values.push_back(row.error);
  }
  const std::vector<Summary> summary{{"two_alpha", config.two_alpha},
                                     {"reference_N", static_cast<double>(table.reference_n), true},
                                     {"reference_lambda1", table.reference_lambda1}};
  return emit(config.format, summary, {n, lambda1, error}, false);
}

std::string render_weyl(const RunConfig& config) {
  const FractionalOrder order = checked_order(config.two_alpha);
  check_n(config.n, "--n");
  if (!(config.tol >= 0.0)) throw UsageError("--tol must be nonnegative");
  if (config.fine_n && *config.fine_n <= config.n) throw UsageError("--fine-n must exceed --n");

  const EigenSolution sol = solve(order, config.n);
  int reliable = expected_reliable_count(config.n);
  if (config.fine_n) reliable = reliable_eigenvalues(sol, solve(order, *config.fine_n), config.tol);

  Column flag{"reliable_flag", std::vector<double>(sol.size()), true};
  for (std::size_t i = 0; i < sol.size(); ++i) flag.values[i] = static_cast<int>(i) < reliable ? 1.0 : 0.0;
  const std::vector<Column> columns{
      {"n", counting(sol.size(), 1), true}, {"lambda_n", sol.lambdas}, {"weyl_ratio", weyl_ratios(sol)}, flag};
  const std::vector<Summary> summary{{"two_alpha", config.two_alpha},
                                     {"N", static_cast<double>(config.n), true},
                                     {"reliable_count", static_cast<double>(reliable), true}};
  return emit(config.format, summary, columns, false);
}

std::string render_condition(const RunConfig& config) {
  const FractionalOrder order = checked_order(config.two_alpha);
  check_n_list(config.n_list);

  const std::vector<int>& ns = config.n_list;
  std::vector<double> chi(ns.size());
  parallel_for(ns.size(), [&](std::size_t i) { chi[i] = condition_number(solve(order, ns[i])); });

  std::vector<Summary> summary{{"two_alpha", config.two_alpha}};
  if (ns.size() >= 2) {
    std::vector<double> log_n;
    std::vector<double> log_chi;
    for (std::size_t i = 0; i < ns.size(); ++i) {
      if (ns[i] == 0) continue;
      log_n.push_back(std::log(ns[i]));
      log_chi.push_back(std::log(chi[i]));
    }
    if (log_n.size() >= 2) {
      summary.push_back({"slope", least_squares_slope(log_n, log_chi)});
      summary.push_back({"expected_slope", 2.0 * config.two_alpha});
    }
  }
  std::vector<double> nvals(ns.begin(), ns.end());
  const std::vector<Column> columns{{"N", nvals, true}, {"chi_N", chi}};
  return emit(config.format, summary, columns, true);
}

std::string render_eigfun(const RunConfig& config) {
  const FractionalOrder order = checked_order(config.two_alpha);
  check_n(config.n, "--n");
  if (config.k < 1 || config.k > config.n + 1) throw UsageError("--k must lie in [1, N+1]");
  if (config.samples < 2) throw UsageError("--samples must be at least 2");

  const EigenSolution sol = solve(order, config.n);
  // symmetric grid: x_{S-1-i} == -x_i exactly, with both endpoints included
  const int last = config.samples - 1;
  std::vector<double> xs(config.samples);
  for (int i = 0; i <= last; ++i) xs[i] = static_cast<double>(2 * i - last) / last;

  std::vector<Column> columns{{"x", xs}};
  for (int idx = 1; idx <= config.k; ++idx) columns.push_back({"u_" + std::to_string(idx), eval_eigenfunction(sol, idx, xs)});
  const std::vector<Summary> summary{{"two_alpha", config.two_alpha}, {"N", static_cast<double>(config.n), true}};
  return emit(config.format, summary, columns, false);
}

std::string render_mass(const RunConfig& config) {
  const FractionalOrder order = checked_order(config.two_alpha);
  check_n(config.n, "--n");

  const MassMatrix mass = assemble_mass(order, config.n);
  const Matrix& m = mass.entries();
  std::vector<Column> columns{{"i", counting(m.rows(), 0), true}};
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Column c{"m_" + std::to_string(j), std::vector<double>(m.rows())};
    for (std::size_t i = 0; i < m.rows(); ++i) c.values[i] = m(i, j);
    columns.push_back(std::move(c));
  }

  std::vector<Summary> summary{{"two_alpha", config.two_alpha}, {"N", static_cast<double>(config.n), true}};
  if (config.verify_oracle) {
    const Matrix oracle = oracle_mass_matrix(order, config.n);
    double worst = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) worst = std::max(worst, std::fabs(m(i, j) - oracle(i, j)));
    }
    summary.push_back({"max_deviation", worst});
    summary.push_back({"relative_deviation", worst / m.max_abs()});
  }
  return emit(config.format, summary, columns, config.verify_oracle);
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content << std::flush;
    if (!std::cout) throw std::runtime_error("failed to write to stdout");
    return;
  }
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string());
    out << content;
    out.flush();
    if (!out) {
      out.close();
      std::filesystem::remove(tmp);
      throw std::runtime_error("failed writing " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("cannot rename to " + path + ": " + ec.message());
  }
}

int run(int argc, char** argv) {
  CLI::App app{"Eigenvalues of the Riesz fractional derivative on (-1, 1) with Dirichlet data"};
  app.require_subcommand(1);

  RunConfig config;
  std::string format = "csv";

  auto common = [&](CLI::App* sub) {
    sub->add_option("--two-alpha", config.two_alpha, "Order 2a of the operator")->required();
    sub->add_option("-o,--output", config.output, "Output file (default stdout)");
    sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  };
  auto n_option = [&](CLI::App* sub) { sub->add_option("--n", config.n, "Polynomial degree N")->capture_default_str(); };
  auto n_list_option = [&](CLI::App* sub) {
    sub->add_option("--n-list", config.n_list, "Ascending list of N, comma separated")->delimiter(',')->required();
  };

  CLI::App* eig = app.add_subcommand("eig", "Discrete eigenvalues for one (2a, N)");
  common(eig);
  n_option(eig);
  eig->add_flag("--vectors", config.vectors, "Also emit coefficient vectors");

  CLI::App* conv = app.add_subcommand("convergence", "lambda_1 error against a reference degree");
  common(conv);
  n_list_option(conv);
  conv->add_option("--reference-n", config.reference_n, "Reference degree")->required();

  CLI::App* weyl = app.add_subcommand("weyl", "Eigenvalues and Weyl ratios");
  common(weyl);
  n_option(weyl);
  weyl->add_option("--fine-n", config.fine_n, "Flag reliability by comparison with this degree");
  weyl->add_option("--tol", config.tol, "Relative tolerance used with --fine-n")->capture_default_str();

  CLI::App* cond = app.add_subcommand("condition", "Condition numbers and fitted growth slope");
  common(cond);
  n_list_option(cond);

  CLI::App* eigfun = app.add_subcommand("eigfun", "Sampled eigenfunctions");
  common(eigfun);
  n_option(eigfun);
  eigfun->add_option("--k", config.k, "Number of leading eigenfunctions")->capture_default_str();
  eigfun->add_option("--samples", config.samples, "Uniform grid size including endpoints")->capture_default_str();

  CLI::App* mass = app.add_subcommand("mass", "Dump the mass matrix");
  common(mass);
  n_option(mass);
  mass->add_flag("--verify-oracle", config.verify_oracle, "Compare against Gauss-Jacobi quadrature");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  config.format = format == "json" ? Format::json : Format::csv;

  try {
    std::string content;
    if (eig->parsed()) content = render_eig(config);
    else if (conv->parsed()) content = render_convergence(config);
    else if (weyl->parsed()) content = render_weyl(config);
    else if (cond->parsed()) content = render_condition(config);
    else if (eigfun->parsed()) content = render_eigfun(config);
    else content = render_mass(config);
    write_output(config.output, content);
  } catch (const std::invalid_argument& e) {
    std::cerr << "riesz-eig: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "riesz-eig: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "riesz-eig: error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace riesz::cli
