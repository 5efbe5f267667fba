// Command-line front-end for the finite-set theory kernel. Parses flags,
// reads a script (file or stdin), drives the kernel through the C API and
// prints reports to stdout, diagnostics to stderr.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "etcs.h"

namespace {

struct SessionDeleter {
  void operator()(etcs_session* s) const { etcs_session_free(s); }
};
struct ResultDeleter {
  void operator()(etcs_result* r) const { etcs_result_free(r); }
};
using SessionPtr = std::unique_ptr<etcs_session, SessionDeleter>;
using ResultPtr = std::unique_ptr<etcs_result, ResultDeleter>;

std::string read_source(const std::string& path, bool& ok) {
  ok = true;
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    ok = false;
    return {};
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void print_rendered(const etcs_result* result, etcs_format format) {
  if (etcs_result_report_count(result) == 0) return;
  char* rendered = etcs_result_render(result, format);
  if (rendered) {
    std::cout << rendered;
    etcs_string_free(rendered);
  }
}

void print_diagnostics(const etcs_result* result) {
  char* text = etcs_result_diagnostics(result);
  if (text) {
    std::cerr << text;
    etcs_string_free(text);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification kernel for the elementary theory of the "
               "category of sets, over finite sets"};
  app.name("etcs");

  std::string script_path;
  bool check_axioms = false;
  int size_limit = -1;
  std::uint64_t nat_bound = 0;
  std::uint64_t seed = 0;
  bool has_seed = false;
  bool timing = false;
  std::string format_name = "text";

  app.add_option("script", script_path,
                 "script to run ('-' reads standard input)");
  app.add_flag("--check-axioms", check_axioms,
               "run the full axiom suite (after the script, if one is given)");
  app.add_option("--size", size_limit, "verification size limit");
  app.add_option("--nat-bound", nat_bound,
                 "bound for the natural number system (default 10000)");
  app.add_option("--format", format_name, "report format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", seed,
                 "enable randomized sampling above exhaustive limits")
      ->each([&](const std::string&) { has_seed = true; });
  app.add_flag("--timing", timing, "measure elapsed time per report");

  CLI11_PARSE(app, argc, argv);

  if (script_path.empty() && !check_axioms) {
    std::cerr << "etcs: nothing to do: give a script or --check-axioms\n";
    return 2;
  }

  SessionPtr session(etcs_session_new());
  if (!session) {
    std::cerr << "etcs: " << etcs_last_error() << "\n";
    return 2;
  }
  if (nat_bound > 0 &&
      etcs_session_set_nat_bound(session.get(), nat_bound) != ETCS_OK) {
    std::cerr << "etcs: " << etcs_last_error() << "\n";
    return 2;
  }
  if (size_limit >= 0 &&
      etcs_session_set_size_limit(session.get(), size_limit) != ETCS_OK) {
    std::cerr << "etcs: " << etcs_last_error() << "\n";
    return 2;
  }
  if (has_seed) etcs_session_set_seed(session.get(), seed);
  etcs_session_set_timing(session.get(), timing ? 1 : 0);

  etcs_format format =
      format_name == "json" ? ETCS_FORMAT_JSON : ETCS_FORMAT_TEXT;

  ResultPtr combined;
  if (!script_path.empty()) {
    bool ok = false;
    std::string source = read_source(script_path, ok);
    if (!ok) {
      std::cerr << "etcs: cannot read '" << script_path << "'\n";
      return 2;
    }
    // Diagnostics carry the file name only, keeping output independent of
    // where the script lives.
    std::string name = script_path == "-"
                           ? "<stdin>"
                           : std::filesystem::path(script_path)
                                 .filename()
                                 .string();
    combined.reset(
        etcs_run_script(session.get(), source.c_str(), name.c_str()));
    if (!combined) {
      std::cerr << "etcs: " << etcs_last_error() << "\n";
      return 2;
    }
  }
  if (check_axioms) {
    ResultPtr axioms(etcs_check_axioms(session.get(), 0));
    if (!axioms) {
      std::cerr << "etcs: " << etcs_last_error() << "\n";
      return 2;
    }
    if (combined) {
      ResultPtr merged(etcs_result_merge(combined.get(), axioms.get()));
      if (!merged) {
        std::cerr << "etcs: " << etcs_last_error() << "\n";
        return 2;
      }
      combined = std::move(merged);
    } else {
      combined = std::move(axioms);
    }
  }

  print_rendered(combined.get(), format);
  print_diagnostics(combined.get());
  return etcs_result_status(combined.get());
}
