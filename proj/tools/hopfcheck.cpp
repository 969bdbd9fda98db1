// hopfcheck: exact verification of finite-dimensional and degree-capped
// braided Hopf algebra data given by structure constants.
//
// Subcommands:
//   check <file|zoo:NAME> [--suite NAME]... [--out PATH]
//   zoo list
//   zoo dump <NAME> [--out PATH]
//
// Exit codes: 0 all selected checks pass, 1 some check failed, 2 usage or
// input error. Relative --out paths resolve under $HOPFCHECK_OUT_DIR when
// that variable is set; with no --out, reports go to stdout unless
// $HOPFCHECK_OUT_DIR picks a default file.

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hopf/runner.hpp"

namespace fs = std::filesystem;

namespace {

std::string sanitize(const std::string& s) {
  std::string out;
  for (char c : s)
    out += (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '.' || c == '_')
               ? c
               : '_';
  return out;
}

std::string resolve_out(const std::string& out, const std::string& fallback) {
  const char* env = std::getenv("HOPFCHECK_OUT_DIR");
  if (!out.empty()) {
    if (fs::path(out).is_absolute() || !env) return out;
    return (fs::path(env) / out).string();
  }
  if (env) return (fs::path(env) / fallback).string();
  return "";
}

void write_file(const std::string& path, const std::string& text) {
  fs::path p(path);
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream f(p, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write '" + path + "'");
  f << text;
}

struct LoadedInput {
  hopf::ZooObject obj;
  std::string digest;
};

LoadedInput load_input(const std::string& arg) {
  if (arg.rfind("zoo:", 0) == 0) {
    hopf::ZooObject z = hopf::zoo_build(arg.substr(4));
    std::string digest = hopf::fnv1a64_hex(hopf::dump_spec(z));
    return {std::move(z), std::move(digest)};
  }
  std::ifstream in(arg, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + arg + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  std::string bytes = ss.str();
  std::string digest = hopf::fnv1a64_hex(bytes);
  return {hopf::parse_spec_text(bytes), std::move(digest)};
}

int cmd_zoo_list() {
  std::size_t width = 0;
  for (const hopf::ZooEntry& e : hopf::zoo_list()) width = std::max(width, e.name.size());
  for (const hopf::ZooEntry& e : hopf::zoo_list())
    std::cout << std::left << std::setw(static_cast<int>(width) + 2) << e.name << e.summary
              << "\n";
  return 0;
}

int cmd_zoo_dump(const std::string& name, const std::string& out) {
  hopf::ZooObject z = hopf::zoo_build(name);
  std::string text = hopf::dump_spec(z);
  std::string path = resolve_out(out, sanitize(name) + ".hopf");
  if (path.empty()) {
    std::cout << text;
    return 0;
  }
  write_file(path, text);
  std::cout << "wrote " << path << "\n";
  return 0;
}

int cmd_check(const std::string& input, const std::vector<std::string>& suites,
              const std::string& out) {
  for (const std::string& s : suites)
    if (!hopf::suite_known(s)) {
      std::cerr << "hopfcheck: unknown suite '" << s << "' (known:";
      for (const std::string& n : hopf::all_suites()) std::cerr << " " << n;
      std::cerr << ")\n";
      return 2;
    }
  LoadedInput in = load_input(input);
  const std::vector<std::string>& sel = suites.empty() ? hopf::all_suites() : suites;
  hopf::RunReport rep = hopf::run_report(in.obj, input, in.digest, sel);
  std::string text = hopf::report_text(rep);

  std::string fallback =
      (input.rfind("zoo:", 0) == 0 ? sanitize(input)
                                   : sanitize(fs::path(input).filename().string())) +
      ".report.json";
  std::string path = resolve_out(out, fallback);
  if (path.empty()) {
    std::cout << text;
  } else {
    write_file(path, text);
    std::cout << "hopfcheck " << hopf::hopfcheck_version << "\n";
    std::cout << "input: " << input << " (digest " << in.digest << ")\n";
    for (const hopf::RunSuite& s : rep.suites) {
      if (!s.applicable) {
        std::cout << s.name << ": skipped (" << s.note << ")\n";
        continue;
      }
      std::size_t failed = 0;
      for (const hopf::RunCheck& c : s.checks)
        if (!c.pass) ++failed;
      std::cout << s.name << ": " << s.checks.size() << " checks, " << failed << " failed\n";
      for (const hopf::RunCheck& c : s.checks)
        if (!c.pass)
          std::cout << "  FAIL " << c.name << (c.witness.empty() ? "" : " -- " + c.witness)
                    << "\n";
    }
    std::cout << "total: " << rep.checks_total << " checks, " << rep.checks_failed << " failed\n";
    std::cout << "report: " << path << "\n";
  }
  return rep.checks_failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of braided Hopf algebra structure constants"};
  app.set_version_flag("--version", std::string("hopfcheck ") + hopf::hopfcheck_version);
  app.require_subcommand(1);

  auto* check = app.add_subcommand("check", "run verification suites against an input");
  std::string input;
  std::vector<std::string> suites;
  std::string check_out;
  check->add_option("input", input, "structure-constant file, or zoo:NAME for a built-in")
      ->required();
  check->add_option("--suite", suites,
                    "suite to run (repeatable): axioms quasidual hopfmodule structure integrals "
                    "maschke bosonization graded; default: all");
  check->add_option("--out", check_out, "write the JSON report to this file");

  auto* zoo = app.add_subcommand("zoo", "built-in example objects");
  zoo->require_subcommand(1);
  zoo->add_subcommand("list", "list built-in objects with one-line summaries");
  auto* dump = zoo->add_subcommand("dump", "write a built-in object as a structure-constant file");
  std::string dump_name, dump_out;
  dump->add_option("name", dump_name, "zoo key, e.g. taft:3")->required();
  dump->add_option("--out", dump_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand("zoo")) {
      if (zoo->got_subcommand("list")) return cmd_zoo_list();
      return cmd_zoo_dump(dump_name, dump_out);
    }
    return cmd_check(input, suites, check_out);
  } catch (const hopf::SpecError& e) {
    std::cerr << "hopfcheck: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "hopfcheck: " << e.what() << "\n";
    return 2;
  }
}
