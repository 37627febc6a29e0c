#include "bcm/bcm.h"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <memory>
#include <sstream>

#include <json.hpp>

#include "bcm/change.hpp"
#include "bcm/goedel.hpp"
#include "bcm/horn.hpp"
#include "bcm/lattice.hpp"
#include "bcm/ltlx.hpp"
#include "bcm/model_spec.hpp"
#include "bcm/poset.hpp"
#include "bcm/postulates.hpp"
#include "bcm/prop.hpp"
#include "bcm/qintervals.hpp"
#include "bcm/threeval.hpp"

using ordered_json = nlohmann::ordered_json;

struct bcm_system {
  std::string logic;
  std::unique_ptr<bcm::FiniteSystem> finite;  // valuation logics
  std::vector<std::string> ltlx_atoms;        // ltlx; may be empty
};

struct bcm_report {
  std::string text;
  std::string json;
};

namespace {

char* copy_string(const std::string& text) {
  char* out = new char[text.size() + 1];
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

bcm_status fail(char** error, bcm_status status, const std::string& message) {
  if (error) *error = copy_string(message);
  return status;
}

// Runs `body`, translating library exceptions to statuses.
template <typename Fn>
bcm_status guarded(char** error, Fn&& body) {
  try {
    return body();
  } catch (const bcm::ParseError& e) {
    std::string where;
    if (e.line() > 0) where += "line " + std::to_string(e.line()) + ": ";
    if (e.column() > 0) where += "column " + std::to_string(e.column()) + ": ";
    return fail(error, BCM_PARSE_ERROR, where + e.what());
  } catch (const bcm::BoundError& e) {
    return fail(error, BCM_BOUND_ERROR, e.what());
  } catch (const bcm::IncompatibleError& e) {
    std::string message = e.what();
    if (!e.witness().empty()) message += "\nwitness:\n" + e.witness();
    return fail(error, BCM_INCOMPATIBLE, message);
  } catch (const bcm::Error& e) {
    return fail(error, BCM_USAGE_ERROR, e.what());
  } catch (const std::exception& e) {
    return fail(error, BCM_USAGE_ERROR, e.what());
  }
}

bcm_report* make_report(std::string text, const ordered_json& json) {
  auto* report = new bcm_report;
  report->text = std::move(text);
  report->json = json.dump();
  return report;
}

std::vector<std::string> collect_ltlx_atoms(const bcm_system& system, const bcm::XBase& base) {
  if (!system.ltlx_atoms.empty()) return system.ltlx_atoms;
  std::vector<std::string> atoms;
  for (const bcm::XFormula& formula : base)
    if (std::find(atoms.begin(), atoms.end(), formula.atom) == atoms.end())
      atoms.push_back(formula.atom);
  std::sort(atoms.begin(), atoms.end());
  if (atoms.empty()) atoms.push_back("p");
  return atoms;
}

bcm::XBase parse_xbase(const std::string& text) {
  bcm::XBase base;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::size_t end = line.find_last_not_of(" \t\r");
    try {
      bcm::XFormula formula = bcm::parse_xformula(line.substr(start, end - start + 1));
      if (std::find(base.begin(), base.end(), formula) == base.end())
        base.push_back(formula);
    } catch (const bcm::ParseError& e) {
      throw e.at_line(line_no);
    }
  }
  return base;
}

std::vector<bcm::PointedKripke> load_kripke_files(const std::string& spec) {
  std::vector<bcm::PointedKripke> models;
  std::string path;
  std::istringstream in(spec);
  while (std::getline(in, path, ',')) {
    std::ifstream file(path);
    if (!file) throw bcm::ParseError("cannot read model file '" + path + "'", -1);
    std::stringstream buffer;
    buffer << file.rdbuf();
    models.push_back(bcm::PointedKripke::parse(buffer.str()));
  }
  if (models.empty()) throw bcm::ParseError("no model files given", -1);
  return models;
}

bcm::QBase parse_qbase(const std::string& text) {
  bcm::QBase base;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::size_t end = line.find_last_not_of(" \t\r");
    try {
      base.push_back(bcm::parse_qinterval(line.substr(start, end - start + 1)));
    } catch (const bcm::ParseError& e) {
      throw e.at_line(line_no);
    }
  }
  return base;
}

bcm::SelectionPolicy parse_policy(const char* policy) {
  if (policy == nullptr || std::string_view(policy) == "lex-min")
    return bcm::SelectionPolicy::lex_min();
  if (std::string_view(policy) == "lex-max") return bcm::SelectionPolicy::lex_max();
  throw bcm::PreconditionError("unknown selection policy '" + std::string(policy) +
                               "' (expected lex-min or lex-max)");
}

// Change-operation report for the finite systems.
bcm_report* finite_change_report(const bcm_system& system, const char* op,
                                 const bcm::ChangeReport& result) {
  const auto& names = system.finite->model_names();
  std::ostringstream text;
  text << "result base:\n";
  for (const bcm::BaseFormula& formula : result.result_base)
    text << "  " << formula.text << "\n";
  text << "models: " << result.result_models.render(names) << "\n";
  text << "chosen: " << result.chosen.render(names) << "\n";
  text << "candidates: " << result.candidates.size() << "\n";

  ordered_json json;
  json["op"] = op;
  json["logic"] = system.logic;
  json["status"] = "ok";
  json["result_base"] = ordered_json::array();
  for (const bcm::BaseFormula& formula : result.result_base)
    json["result_base"].push_back(formula.text);
  json["models"] = result.result_models.render(names);
  json["chosen"] = result.chosen.render(names);
  json["candidates"] = result.candidates.size();
  return make_report(text.str(), json);
}

bcm_report* kept_base_report(const bcm_system& system, const char* op,
                             const std::vector<std::string>& base_lines,
                             const std::string& reason) {
  std::ostringstream text;
  text << "change rejected, base kept:\n";
  for (const std::string& line : base_lines) text << "  " << line << "\n";
  text << "reason: " << reason << "\n";
  ordered_json json;
  json["op"] = op;
  json["logic"] = system.logic;
  json["status"] = "kept";
  json["result_base"] = base_lines;
  json["reason"] = reason;
  return make_report(text.str(), json);
}

struct CompatLine {
  bool verdict;
  std::string reason;  // empty when none
};

void compat_lines(const bcm_system& system, CompatLine& eviction, CompatLine& reception) {
  const std::string& logic = system.logic;
  if (logic == "ltlx") {
    eviction = {false, "universal model witness"};
    reception = {true, "rcp_X construction"};
    return;
  }
  if (logic == "qint") {
    eviction = {false, "open-ended targets admit ever larger closed subintervals"};
    reception = {false, "open-ended targets admit ever smaller closed superintervals"};
    return;
  }
  bcm::CompatVerdict verdict = bcm::compat_finite(system.finite->catalog());
  eviction = {verdict.eviction, ""};
  reception = {verdict.reception, ""};
  if (!verdict.eviction) {
    eviction.reason = logic == "p3" ? "all-u model in every representable set"
                                    : "empty set not representable";
  }
  if (!verdict.reception) reception.reason = "universe not representable";
}

}  // namespace

extern "C" {

bcm_status bcm_system_create(const char* logic, const char* atoms_csv, const char* theta,
                             bcm_system** out, char** error) {
  if (out == nullptr) return BCM_USAGE_ERROR;
  *out = nullptr;
  return guarded(error, [&]() -> bcm_status {
    if (logic == nullptr) return fail(error, BCM_USAGE_ERROR, "logic is required");
    std::string id = logic;
    auto system = std::make_unique<bcm_system>();
    system->logic = id;
    auto need_atoms = [&]() -> bcm::Signature {
      if (atoms_csv == nullptr || *atoms_csv == '\0')
        throw bcm::PreconditionError("logic '" + id + "' needs a signature (--atoms)");
      return bcm::parse_signature(atoms_csv);
    };
    if (id == "prop") {
      system->finite = std::make_unique<bcm::PropSystem>(need_atoms(), bcm::Fragment::Full);
    } else if (id == "prop-t") {
      system->finite = std::make_unique<bcm::PropSystem>(need_atoms(), bcm::Fragment::AtomsOnly);
    } else if (id == "prop-p") {
      system->finite =
          std::make_unique<bcm::PropSystem>(need_atoms(), bcm::Fragment::AtomsPlusFalsum);
    } else if (id == "horn") {
      system->finite = std::make_unique<bcm::HornSystem>(need_atoms());
    } else if (id == "k3") {
      system->finite =
          std::make_unique<bcm::ThreeValSystem>(need_atoms(), bcm::ThreeValVariant::K3);
    } else if (id == "p3") {
      system->finite =
          std::make_unique<bcm::ThreeValSystem>(need_atoms(), bcm::ThreeValVariant::P3);
    } else if (id == "goedel") {
      bcm::Rational t = bcm::parse_rational(theta == nullptr || *theta == '\0' ? "1/2" : theta);
      if (t <= 0 || t > 1 || !t.get_num().fits_slong_p() || !t.get_den().fits_slong_p())
        return fail(error, BCM_USAGE_ERROR, "theta must be a rational in (0, 1]");
      system->finite = std::make_unique<bcm::GoedelSystem>(
          need_atoms(), static_cast<std::int64_t>(t.get_num().get_si()),
          static_cast<std::int64_t>(t.get_den().get_si()));
    } else if (id == "ltlx") {
      if (atoms_csv != nullptr && *atoms_csv != '\0') {
        bcm::Signature signature = bcm::parse_signature(atoms_csv);
        system->ltlx_atoms = signature.atoms;
      }
    } else if (id == "qint") {
      // No configuration.
    } else {
      return fail(error, BCM_USAGE_ERROR, "unknown logic '" + id + "'");
    }
    if (theta != nullptr && *theta != '\0' && id != "goedel")
      return fail(error, BCM_USAGE_ERROR, "theta only applies to goedel");
    *out = system.release();
    return BCM_OK;
  });
}

void bcm_system_destroy(bcm_system* system) { delete system; }

}  // extern "C"

namespace {

bcm_status change_op(bcm_system* system, const char* base_text, const char* models_spec,
                     const char* policy, int keep_on_incompatible, bool eviction,
                     bcm_report** out, char** error) {
  if (system == nullptr || out == nullptr) return BCM_USAGE_ERROR;
  *out = nullptr;
  const char* op = eviction ? "evict" : "receive";
  return guarded(error, [&]() -> bcm_status {
    std::string base_string = base_text == nullptr ? "" : base_text;
    std::string spec = models_spec == nullptr ? "" : models_spec;
    bcm::SelectionPolicy chosen_policy = parse_policy(policy);

    if (system->finite) {
      bcm::Base base = system->finite->parse_base_text(base_string);
      bcm::ModelSet input = bcm::parse_model_spec(spec, *system->finite);
      try {
        bcm::ChangeReport result =
            eviction ? bcm::evict(*system->finite, base, input, chosen_policy)
                     : bcm::receive(*system->finite, base, input, chosen_policy);
        *out = finite_change_report(*system, op, result);
        return BCM_OK;
      } catch (const bcm::IncompatibleError& e) {
        if (!keep_on_incompatible) throw;
        std::vector<std::string> lines;
        for (const bcm::BaseFormula& formula : base) lines.push_back(formula.text);
        *out = kept_base_report(*system, op, lines, e.what());
        return BCM_OK;
      }
    }

    if (system->logic == "ltlx") {
      bcm::XBase base = parse_xbase(base_string);
      std::vector<std::string> atoms = collect_ltlx_atoms(*system, base);
      bool intension = spec == "mod-of-base";
      std::vector<bcm::PointedKripke> input;
      if (!intension) input = load_kripke_files(spec);

      if (eviction) {
        // The intensional input is the base's own models, which are never
        // disjoint from it; explicit inputs are vacuous when none of their
        // models satisfies the base.
        bool vacuous = !intension;
        for (const bcm::PointedKripke& model : input)
          if (bcm::sat_x_base(model, base)) vacuous = false;
        if (!vacuous) {
          bcm::IncompatibleError incompatible(
              "eviction is not available in ltlx: the empty model set is not "
              "representable, so maximal representable subsets need not exist",
              bcm::universal_model(atoms).render() +
                  "(this single-state model satisfies every base)");
          if (!keep_on_incompatible) throw incompatible;
          std::vector<std::string> lines;
          for (const bcm::XFormula& formula : base) lines.push_back(bcm::print_xformula(formula));
          *out = kept_base_report(*system, op, lines, incompatible.what());
          return BCM_OK;
        }
        // No input model satisfies the base: nothing to remove.
        std::ostringstream text;
        text << "result base:\n";
        for (const bcm::XFormula& formula : base)
          text << "  " << bcm::print_xformula(formula) << "\n";
        text << "note: no input model satisfies the base; models unchanged\n";
        ordered_json json;
        json["op"] = op;
        json["logic"] = system->logic;
        json["status"] = "ok";
        json["result_base"] = ordered_json::array();
        for (const bcm::XFormula& formula : base)
          json["result_base"].push_back(bcm::print_xformula(formula));
        json["note"] = "vacuous";
        *out = make_report(text.str(), json);
        return BCM_OK;
      }

      bcm::XBase result = intension ? base : bcm::rcp_x(base, input);
      std::ostringstream text;
      text << "result base:\n";
      for (const bcm::XFormula& formula : result)
        text << "  " << bcm::print_xformula(formula) << "\n";
      text << "kept " << result.size() << " of " << base.size() << " formulas\n";
      ordered_json json;
      json["op"] = op;
      json["logic"] = system->logic;
      json["status"] = "ok";
      json["result_base"] = ordered_json::array();
      for (const bcm::XFormula& formula : result)
        json["result_base"].push_back(bcm::print_xformula(formula));
      json["kept"] = result.size();
      json["of"] = base.size();
      *out = make_report(text.str(), json);
      return BCM_OK;
    }

    if (system->logic == "qint") {
      bcm::QBase base = parse_qbase(base_string);
      bcm::IntervalTarget input = bcm::parse_interval_target(spec);
      try {
        bcm::QChangeReport result =
            eviction ? bcm::evict_q(base, input) : bcm::receive_q(base, input);
        std::ostringstream text;
        text << "result base:\n";
        for (const bcm::RatInterval& interval : result.result_base)
          text << "  " << interval.render() << "\n";
        text << "models: " << result.result_models.render() << "\n";
        ordered_json json;
        json["op"] = op;
        json["logic"] = system->logic;
        json["status"] = "ok";
        json["result_base"] = ordered_json::array();
        for (const bcm::RatInterval& interval : result.result_base)
          json["result_base"].push_back(interval.render());
        json["models"] = result.result_models.render();
        *out = make_report(text.str(), json);
        return BCM_OK;
      } catch (const bcm::IncompatibleError& e) {
        if (!keep_on_incompatible) throw;
        std::vector<std::string> lines;
        for (const bcm::RatInterval& interval : base) lines.push_back(interval.render());
        *out = kept_base_report(*system, op, lines, e.what());
        return BCM_OK;
      }
    }

    return fail(error, BCM_USAGE_ERROR, "unsupported logic");
  });
}

}  // namespace

extern "C" {

bcm_status bcm_evict(bcm_system* system, const char* base_text, const char* models_spec,
                     const char* policy, int keep_on_incompatible, bcm_report** out,
                     char** error) {
  return change_op(system, base_text, models_spec, policy, keep_on_incompatible, true, out,
                   error);
}

bcm_status bcm_receive(bcm_system* system, const char* base_text, const char* models_spec,
                       const char* policy, int keep_on_incompatible, bcm_report** out,
                       char** error) {
  return change_op(system, base_text, models_spec, policy, keep_on_incompatible, false, out,
                   error);
}

bcm_status bcm_compat(bcm_system* system, bcm_report** out, char** error) {
  if (system == nullptr || out == nullptr) return BCM_USAGE_ERROR;
  *out = nullptr;
  return guarded(error, [&]() -> bcm_status {
    CompatLine eviction{}, reception{};
    compat_lines(*system, eviction, reception);
    auto line = [](const char* kind, const CompatLine& verdict) {
      std::string text = std::string(kind) + ": " + (verdict.verdict ? "yes" : "no");
      if (!verdict.reason.empty()) text += " (" + verdict.reason + ")";
      return text;
    };
    std::string text = line("eviction", eviction) + "\n" + line("reception", reception) + "\n";
    ordered_json json;
    json["op"] = "compat";
    json["logic"] = system->logic;
    json["eviction"] = eviction.verdict;
    if (!eviction.reason.empty()) json["eviction_reason"] = eviction.reason;
    json["reception"] = reception.verdict;
    if (!reception.reason.empty()) json["reception_reason"] = reception.reason;
    *out = make_report(text, json);
    return BCM_OK;
  });
}

bcm_status bcm_postulates(bcm_system* system, bcm_report** out, char** error) {
  if (system == nullptr || out == nullptr) return BCM_USAGE_ERROR;
  *out = nullptr;
  return guarded(error, [&]() -> bcm_status {
    if (!system->finite)
      throw bcm::BoundError("postulate grids need a finite catalog; '" + system->logic +
                            "' has none");
    const bcm::FiniteSystem& finite = *system->finite;
    if (finite.universe_size() > 9 || finite.catalog().size() > 512)
      throw bcm::BoundError("postulate grid too large for this system");
    bcm::SelectionPolicy policy = bcm::SelectionPolicy::lex_min();
    std::vector<bcm::PostulateCase> cases = bcm::exhaustive_cases(finite);
    bcm::ChangeFn evict_fn = [&](const bcm::Base& base, const bcm::ModelSet& input) {
      return bcm::evict(finite, base, input, policy).result_base;
    };
    bcm::ChangeFn receive_fn = [&](const bcm::Base& base, const bcm::ModelSet& input) {
      return bcm::receive(finite, base, input, policy).result_base;
    };
    bcm::PostulateReport eviction = bcm::check_eviction_postulates(finite, evict_fn, cases);
    bcm::PostulateReport reception = bcm::check_reception_postulates(finite, receive_fn, cases);

    std::size_t passed = 0, total = 0;
    for (const auto* report : {&eviction, &reception})
      for (const bcm::PostulateCheck& check : report->checks) {
        ++total;
        if (check.pass()) ++passed;
      }
    std::ostringstream text;
    text << eviction.render();
    text << reception.render();
    text << passed << "/" << total << " postulates pass\n";

    ordered_json json;
    json["op"] = "postulates";
    json["logic"] = system->logic;
    json["cases"] = eviction.cases;
    for (const auto* report : {&eviction, &reception}) {
      ordered_json block;
      block["incompatible_skipped"] = report->incompatible;
      for (const bcm::PostulateCheck& check : report->checks)
        block[check.name] = check.pass() ? "pass" : "fail";
      json[report->flavour] = block;
    }
    json["passed"] = passed;
    json["total"] = total;
    *out = make_report(text.str(), json);
    return BCM_OK;
  });
}

bcm_status bcm_lattice(bcm_system* system, const char* highlight_spec, bcm_report** out,
                       char** error) {
  if (system == nullptr || out == nullptr) return BCM_USAGE_ERROR;
  *out = nullptr;
  return guarded(error, [&]() -> bcm_status {
    if (!system->finite)
      throw bcm::BoundError("lattice export needs a finite catalog; '" + system->logic +
                            "' has none");
    std::optional<bcm::ModelSet> highlight;
    if (highlight_spec != nullptr && *highlight_spec != '\0')
      highlight = bcm::parse_model_spec(highlight_spec, *system->finite);
    std::string dot =
        bcm::lattice_dot(system->finite->catalog(), highlight, system->finite->model_names());
    ordered_json json;
    json["op"] = "lattice";
    json["logic"] = system->logic;
    json["dot"] = dot;
    *out = make_report(dot, json);
    return BCM_OK;
  });
}

const char* bcm_report_text(const bcm_report* report) {
  return report == nullptr ? "" : report->text.c_str();
}

const char* bcm_report_json(const bcm_report* report) {
  return report == nullptr ? "" : report->json.c_str();
}

void bcm_report_destroy(bcm_report* report) { delete report; }

void bcm_free(char* owned) { delete[] owned; }

const char* bcm_version(void) { return "1.0.0"; }

}  // extern "C"
