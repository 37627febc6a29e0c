// bcm command-line frontend. Talks to the library exclusively through the
// public C interface.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bcm/bcm.h"

namespace {

int exit_code(bcm_status status) {
  switch (status) {
    case BCM_OK: return 0;
    case BCM_INCOMPATIBLE: return 2;
    case BCM_PARSE_ERROR: return 3;
    case BCM_BOUND_ERROR: return 4;
    case BCM_USAGE_ERROR: return 1;
  }
  return 1;
}

int report_error(bcm_status status, char* error) {
  std::cerr << "error: " << (error ? error : "unknown") << "\n";
  bcm_free(error);
  return exit_code(status);
}

struct SystemGuard {
  bcm_system* handle = nullptr;
  ~SystemGuard() { bcm_system_destroy(handle); }
};

struct ReportGuard {
  bcm_report* handle = nullptr;
  ~ReportGuard() { bcm_report_destroy(handle); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bcm — belief change on finite bases, with models as input"};
  app.set_help_all_flag("--help-all");

  std::string logic, command;
  std::string atoms, theta, base_file, models_spec, highlight, dot_file;
  std::string policy = "lex-min";
  std::string on_incompatible = "error";
  bool as_json = false;

  app.add_option("logic", logic,
                 "prop | prop-t | prop-p | horn | k3 | p3 | goedel | ltlx | qint")
      ->required();
  app.add_option("command", command, "evict | receive | compat | postulates | lattice")
      ->required();
  app.add_option("--atoms", atoms, "signature, e.g. p,q");
  app.add_option("--theta", theta, "goedel threshold, rational in (0,1]");
  app.add_option("--base", base_file, "base file: one formula per line, # comments");
  app.add_option("--models", models_spec, "model-set spec (see README)");
  app.add_option("--policy", policy, "lex-min (default) | lex-max");
  app.add_option("--on-incompatible", on_incompatible, "error (default) | keep");
  app.add_option("--highlight", highlight, "lattice: model-set spec to highlight");
  app.add_option("--dot", dot_file, "lattice: write DOT here instead of stdout");
  app.add_flag("--json", as_json, "emit one JSON object per command");

  CLI11_PARSE(app, argc, argv);

  if (on_incompatible != "error" && on_incompatible != "keep") {
    std::cerr << "error: --on-incompatible must be 'error' or 'keep'\n";
    return 1;
  }

  char* error = nullptr;
  SystemGuard system;
  bcm_status status = bcm_system_create(logic.c_str(), atoms.empty() ? nullptr : atoms.c_str(),
                                        theta.empty() ? nullptr : theta.c_str(),
                                        &system.handle, &error);
  if (status != BCM_OK) return report_error(status, error);

  ReportGuard report;
  if (command == "evict" || command == "receive") {
    if (base_file.empty()) {
      std::cerr << "error: " << command << " needs --base\n";
      return 1;
    }
    if (models_spec.empty()) {
      std::cerr << "error: " << command << " needs --models\n";
      return 1;
    }
    std::ifstream in(base_file);
    if (!in) {
      std::cerr << "error: cannot read base file '" << base_file << "'\n";
      return 3;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::string base_text = buffer.str();
    int keep = on_incompatible == "keep" ? 1 : 0;
    status = command == "evict"
                 ? bcm_evict(system.handle, base_text.c_str(), models_spec.c_str(),
                             policy.c_str(), keep, &report.handle, &error)
                 : bcm_receive(system.handle, base_text.c_str(), models_spec.c_str(),
                               policy.c_str(), keep, &report.handle, &error);
  } else if (command == "compat") {
    status = bcm_compat(system.handle, &report.handle, &error);
  } else if (command == "postulates") {
    status = bcm_postulates(system.handle, &report.handle, &error);
  } else if (command == "lattice") {
    status = bcm_lattice(system.handle, highlight.empty() ? nullptr : highlight.c_str(),
                         &report.handle, &error);
  } else {
    std::cerr << "error: unknown command '" << command << "'\n";
    return 1;
  }

  if (status != BCM_OK) return report_error(status, error);

  if (command == "lattice" && !dot_file.empty()) {
    std::ofstream out(dot_file);
    if (!out) {
      std::cerr << "error: cannot write '" << dot_file << "'\n";
      return 1;
    }
    out << bcm_report_text(report.handle);
    if (as_json) std::cout << bcm_report_json(report.handle) << "\n";
    return 0;
  }

  if (as_json)
    std::cout << bcm_report_json(report.handle) << "\n";
  else
    std::cout << bcm_report_text(report.handle);
  return 0;
}
