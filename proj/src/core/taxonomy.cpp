#include <algorithm>
#include <cctype>

#include "das/core.hpp"

namespace das::core {

namespace {

bool iequals(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(a[i])) !=
        std::tolower(static_cast<unsigned char>(b[i])))
      return false;
  }
  return true;
}

}  // namespace

bool Taxonomy::contains(std::string_view label) const { return find(label) != nullptr; }

const ActDefinition* Taxonomy::find(std::string_view label) const {
  for (const ActDefinition& a : acts) {
    if (iequals(a.name, label)) return &a;
  }
  return nullptr;
}

int ValidationReport::error_count() const {
  return static_cast<int>(std::count_if(issues.begin(), issues.end(), [](const ValidationIssue& i) {
    return i.severity == ValidationIssue::Severity::Error;
  }));
}

int ValidationReport::warning_count() const {
  return static_cast<int>(issues.size()) - error_count();
}

}  // namespace das::core
