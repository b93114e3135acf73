// Canonical DAS text emission. Values that are not plain tokens are quoted
// with backslash escapes so every value survives a parse round-trip.

#include <string>

#include "das/core.hpp"

namespace das::core {

namespace {

std::string render_value(const std::string& v) {
  if (is_token(v)) return v;
  std::string out;
  out.reserve(v.size() + 2);
  out.push_back('"');
  for (char c : v) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

void render_act(const ActInstance& act, std::string& out) {
  out += act.label;
  out.push_back('(');
  for (std::size_t i = 0; i < act.params.size(); ++i) {
    if (i) out += ", ";
    const Param& p = act.params[i];
    if (p.key) {
      out += *p.key;
      out.push_back('=');
    }
    out += render_value(p.value);
  }
  out.push_back(')');
}

}  // namespace

std::string serialize_turn(const DasTurn& turn) {
  std::string out;
  if (!turn.speaker.empty()) {
    out += turn.speaker;
    out += ": ";
  }
  for (std::size_t i = 0; i < turn.acts.size(); ++i) {
    if (i) out += "; ";
    render_act(turn.acts[i], out);
  }
  return out;
}

std::string serialize(const DasDialogue& dialogue) {
  std::string out;
  for (const DasTurn& t : dialogue.turns) {
    out += serialize_turn(t);
    out.push_back('\n');
  }
  return out;
}

}  // namespace das::core
