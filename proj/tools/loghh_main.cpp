#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "loghh/problem.hpp"

namespace {

int run_command(const std::string& path, const std::string& out_path, bool with_oracle,
                long threads, const std::vector<std::string>& budget_flags) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "cannot read " << path << "\n";
    return 1;
  }
  std::ostringstream buf;
  buf << in.rdbuf();

  loghh::Report rep;
  try {
    loghh::ProblemFile p = loghh::parse_problem(buf.str());
    for (const std::string& kv : budget_flags) {
      size_t eq = kv.find('=');
      std::string key = eq == std::string::npos ? kv : kv.substr(0, eq);
      long value = eq == std::string::npos ? 0 : std::atol(kv.c_str() + eq + 1);
      if (eq == std::string::npos || value < 0) {
        std::cerr << "--budget expects key=value with a nonnegative integer\n";
        return 1;
      }
      if (key == "max_spairs")
        p.budget.max_spairs = value;
      else if (key == "max_terms")
        p.budget.max_terms = value;
      else if (key == "max_degree")
        p.budget.max_degree = value;
      else {
        std::cerr << "unknown budget key \"" << key
                  << "\" (known: max_spairs, max_terms, max_degree)\n";
        return 1;
      }
    }
    rep = loghh::run_problem(p, with_oracle, threads);
  } catch (const loghh::Error& e) {
    std::cerr << loghh::error_kind_name(e.kind) << ": " << e.what() << "\n";
    return 1;
  }

  std::string text = loghh::report_json(rep);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << out_path << "\n";
      return 1;
    }
    out << text;
  }
  return rep.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact log Hochschild/cyclic homology runner"};
  app.require_subcommand(1);

  std::string file, out_path;
  bool with_oracle = false;
  long threads = 1;
  std::vector<std::string> budget_flags;

  CLI::App* run = app.add_subcommand("run", "execute every task in a problem file");
  run->add_option("file", file, "problem file (JSON)")->required();
  run->add_option("--out", out_path, "write the report here instead of stdout");
  run->add_flag("--oracle", with_oracle, "append an independent dense recomputation");
  run->add_option("--threads", threads, "recorded in the report; tasks run sequentially");
  run->add_option("--budget", budget_flags, "override a budget, e.g. max_spairs=5000");

  CLI11_PARSE(app, argc, argv);
  return run_command(file, out_path, with_oracle, threads, budget_flags);
}
