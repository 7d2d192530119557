// Command-line front end: run one script, or sweep a corpus directory.
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "linklab/kernels.hpp"
#include "linklab/session.hpp"

namespace fs = std::filesystem;

namespace {

struct Flags {
  linklab::SessionOptions opt;
  bool serial = false;
  std::string json_out;
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--nmax", f.opt.n_max, "reduction-number search cap");
  cmd->add_option("--smax", f.opt.s_budget, "multiplicity sample-row budget");
  cmd->add_option("--jdepth", f.opt.j_depth, "canonical truncation depth (0 = default)");
  cmd->add_option("--kmax", f.opt.k_max, "canonical components compared (0 = default)");
  cmd->add_option("--field", [&f](const std::vector<std::string>& vals) {
        f.opt.field_override = vals.at(0);
        return true;
      },
      "override every ring's field (QQ or FF(p))");
  cmd->add_flag("--timings", f.opt.timings, "append wall-clock timings to the report");
  cmd->add_flag("--serial", f.serial, "disable the parallel kernels");
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Exit 2 on engine/parse errors, else 1 if any check failed, else 0.
int run_one(const std::string& path, const Flags& f, bool banner) {
  if (banner) std::cout << "== " << path << "\n";
  std::string text;
  try {
    text = slurp(path);
  } catch (const std::exception& e) {
    std::cout << "error: " << e.what() << "\n";
    return 2;
  }
  linklab::SessionResult r;
  try {
    r = linklab::run_session_text(text, f.opt);
  } catch (const linklab::ParseError& e) {
    std::cout << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const linklab::Error& e) {
    std::cout << "error: " << e.what() << "\n";
    return 2;
  }
  std::cout << linklab::render_text(r.report);
  if (!f.json_out.empty()) {
    std::ofstream out(f.json_out, std::ios::binary);
    if (!out) {
      std::cout << "error: cannot write " << f.json_out << "\n";
      return 2;
    }
    out << r.report.dump(2) << "\n";
  }
  return r.exit_code;
}

int check_all(const std::string& dir, const Flags& f) {
  std::vector<std::string> scripts;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(dir, ec))
    if (entry.is_regular_file() && entry.path().extension() == ".lnk")
      scripts.push_back(entry.path().string());
  if (ec) {
    std::cout << "error: cannot read directory " << dir << "\n";
    return 2;
  }
  if (scripts.empty()) {
    std::cout << "error: no .lnk scripts in " << dir << "\n";
    return 2;
  }
  std::sort(scripts.begin(), scripts.end());
  int worst = 0;
  for (const std::string& path : scripts) {
    int rc = run_one(path, f, true);
    std::cout << "== " << path << " -> exit " << rc << "\n";
    worst = std::max(worst, rc);
  }
  std::cout << scripts.size() << " scripts, worst exit " << worst << "\n";
  return worst;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"linkage-lab: exact linkage and blowup-algebra workbench"};
  app.require_subcommand(1);

  Flags rf, cf;
  std::string script, corpus;

  CLI::App* run = app.add_subcommand("run", "execute one script");
  run->add_option("file", script, "script file")->required();
  run->add_option("--json", rf.json_out, "write the JSON report here");
  add_common(run, rf);

  CLI::App* all = app.add_subcommand("check-all", "run every .lnk script in a directory");
  all->add_option("dir", corpus, "corpus directory")->required();
  add_common(all, cf);

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) {
    linklab::set_parallel(!rf.serial);
    return run_one(script, rf, false);
  }
  linklab::set_parallel(!cf.serial);
  return check_all(corpus, cf);
}
