// Slot-level diff between a dialogue and its localization. Localization is
// required to be structure-preserving: same turns, same acts, same labels,
// same key sets and bare-param arity. Only values may differ.

#include <map>
#include <string>

#include "das/core.hpp"

namespace das::core {

namespace {

[[noreturn]] void mismatch(const std::string& what, std::size_t turn, std::size_t act = SIZE_MAX) {
  std::string msg = what + " at turn " + std::to_string(turn);
  if (act != SIZE_MAX) msg += ", act " + std::to_string(act);
  throw StructureMismatch(msg);
}

}  // namespace

std::vector<SlotChange> diff_slots(const DasDialogue& original, const DasDialogue& localized) {
  if (original.turns.size() != localized.turns.size())
    throw StructureMismatch("turn count differs: " + std::to_string(original.turns.size()) +
                            " vs " + std::to_string(localized.turns.size()));

  std::vector<SlotChange> changes;
  for (std::size_t t = 0; t < original.turns.size(); ++t) {
    const DasTurn& ot = original.turns[t];
    const DasTurn& lt = localized.turns[t];
    if (ot.acts.size() != lt.acts.size()) mismatch("act count differs", t);

    for (std::size_t a = 0; a < ot.acts.size(); ++a) {
      const ActInstance& oa = ot.acts[a];
      const ActInstance& la = lt.acts[a];
      if (oa.label != la.label) mismatch("act label differs ('" + oa.label + "' vs '" + la.label + "')", t, a);

      std::map<std::string, const std::string*> localized_by_key;
      std::vector<const std::string*> localized_bare;
      for (const Param& p : la.params) {
        if (p.key) {
          if (!localized_by_key.emplace(*p.key, &p.value).second)
            mismatch("duplicate key in localized act", t, a);
        } else {
          localized_bare.push_back(&p.value);
        }
      }

      std::size_t bare_seen = 0;
      std::size_t keyed_seen = 0;
      for (std::size_t p = 0; p < oa.params.size(); ++p) {
        const Param& op = oa.params[p];
        SlotChange change;
        change.turn_index = static_cast<int>(t);
        change.act_index = static_cast<int>(a);
        change.original = op.value;
        if (op.key) {
          auto it = localized_by_key.find(*op.key);
          if (it == localized_by_key.end()) mismatch("key '" + *op.key + "' missing in localized act", t, a);
          ++keyed_seen;
          change.key = *op.key;
          change.localized = *it->second;
        } else {
          if (bare_seen >= localized_bare.size()) mismatch("bare param count differs", t, a);
          change.key = std::to_string(p);
          change.localized = *localized_bare[bare_seen];
          ++bare_seen;
        }
        if (change.original != change.localized) changes.push_back(std::move(change));
      }
      if (bare_seen != localized_bare.size()) mismatch("bare param count differs", t, a);
      if (keyed_seen != localized_by_key.size()) mismatch("key set differs", t, a);
    }
  }
  return changes;
}

}  // namespace das::core
