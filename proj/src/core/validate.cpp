#include <set>
#include <string>

#include "das/core.hpp"

namespace das::core {

ValidationReport validate(const DasDialogue& dialogue, const Taxonomy& taxonomy) {
  ValidationReport report;
  using Severity = ValidationIssue::Severity;

  if (dialogue.turns.empty()) {
    report.issues.push_back({Severity::Error, -1, -1, "dialogue has no turns"});
    return report;
  }

  for (std::size_t t = 0; t < dialogue.turns.size(); ++t) {
    const DasTurn& turn = dialogue.turns[t];
    int ti = static_cast<int>(t);
    if (turn.acts.empty()) {
      report.issues.push_back({Severity::Error, ti, -1, "turn has no acts"});
      continue;
    }
    for (std::size_t a = 0; a < turn.acts.size(); ++a) {
      const ActInstance& act = turn.acts[a];
      int ai = static_cast<int>(a);
      if (!taxonomy.contains(act.label)) {
        Severity sev = taxonomy.open_extension ? Severity::Warning : Severity::Error;
        report.issues.push_back({sev, ti, ai, "unknown act '" + act.label + "'"});
      }
      std::set<std::string> seen;
      for (const Param& p : act.params) {
        if (p.key && !seen.insert(*p.key).second) {
          report.issues.push_back(
              {Severity::Error, ti, ai, "duplicate keyed param '" + *p.key + "'"});
        }
      }
    }
  }
  return report;
}

}  // namespace das::core
