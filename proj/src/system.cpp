#include "bcm/system.hpp"

#include <sstream>

namespace bcm {

ModelSet FiniteSystem::models_of(const Base& base) const {
  ModelSet result = ModelSet::full(universe_size());
  for (const BaseFormula& formula : base) result = result.set_intersection(formula.models);
  return result;
}

Base FiniteSystem::parse_base_text(std::string_view text) const {
  Base base;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::size_t end = line.find_last_not_of(" \t\r");
    std::string trimmed = line.substr(start, end - start + 1);
    try {
      base.push_back(parse_formula(trimmed));
    } catch (const ParseError& e) {
      throw e.at_line(line_no);
    }
  }
  if (base.size() > max_base_size())
    throw ParseError("base has " + std::to_string(base.size()) + " formulas but " +
                         std::string(id()) + " admits at most " +
                         std::to_string(max_base_size()),
                     -1);
  return base;
}

int FiniteSystem::model_index(std::string_view name) const {
  const auto& names = model_names();
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  return -1;
}

std::vector<Base> FiniteSystem::witness_bases() const {
  std::vector<Base> bases;
  bases.reserve(catalog().size());
  for (const CatalogEntry& entry : catalog().entries()) {
    Base base;
    for (const std::string& formula : entry.witness) base.push_back(parse_formula(formula));
    bases.push_back(std::move(base));
  }
  return bases;
}

std::vector<std::string> base_lines(const Base& base) {
  std::vector<std::string> lines;
  lines.reserve(base.size());
  for (const BaseFormula& formula : base) lines.push_back(formula.text);
  return lines;
}

}  // namespace bcm
