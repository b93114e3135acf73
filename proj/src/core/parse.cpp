// Lenient parser for DAS turn lines.
//
// Accepted surface shapes, all normalized to the same DasTurn:
//   Speaker 1: inform(subject=wine_list, location=second_page)
//   A.disagree(); A.express(doubt)
//   ["disagree()", "express(doubt)"]
// Labels are lower-cased, bare values canonicalized (whitespace -> '_'),
// quoted values kept verbatim.

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>

#include "das/core.hpp"

namespace das::core {

namespace {

bool is_ws(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v';
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_ws(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_ws(s.back())) s.remove_suffix(1);
  return s;
}

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool is_identifier(std::string_view s) {
  if (s.empty() || std::isdigit(static_cast<unsigned char>(s.front()))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return is_ident_char(c); });
}

// Lower-case and join internal whitespace with '_'; used for act labels.
std::string canonicalize_label(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  s = trim(s);
  bool in_ws = false;
  for (char c : s) {
    if (is_ws(c)) {
      in_ws = true;
      continue;
    }
    if (in_ws && !out.empty()) out.push_back('_');
    in_ws = false;
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

bool is_label_token(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return is_ident_char(c); });
}

// Scanner over one line that tracks quoting so structural characters inside
// quoted values are ignored.
struct Scanner {
  std::string_view s;
  std::size_t pos = 0;

  bool done() const { return pos >= s.size(); }
  char peek() const { return s[pos]; }

  // Advance to the next occurrence of any char in `stops` at paren depth 0,
  // honoring double-quoted spans with backslash escapes. Returns npos when no
  // stop char is found; `pos` then sits at end of input. Throws on unbalanced
  // parentheses or an unterminated quote.
  std::size_t seek(std::string_view stops, int initial_depth = 0) {
    int depth = initial_depth;
    while (pos < s.size()) {
      char c = s[pos];
      if (c == '"') {
        skip_quoted();
        continue;
      }
      if (c == '(') {
        ++depth;
      } else if (c == ')') {
        --depth;
        if (depth < 0) throw ParseError("unbalanced parentheses", pos);
      } else if (depth == initial_depth && stops.find(c) != std::string_view::npos) {
        return pos;
      }
      ++pos;
    }
    if (depth != initial_depth) throw ParseError("unbalanced parentheses", s.size());
    return std::string_view::npos;
  }

  void skip_quoted() {
    std::size_t start = pos;
    ++pos;  // opening quote
    while (pos < s.size()) {
      char c = s[pos];
      if (c == '\\') {
        if (pos + 1 >= s.size()) throw ParseError("dangling escape in quoted value", pos);
        pos += 2;
        continue;
      }
      if (c == '"') {
        ++pos;
        return;
      }
      ++pos;
    }
    throw ParseError("unterminated quoted value", start);
  }
};

// Split `s` on top-level occurrences of `sep` (quote- and paren-aware).
std::vector<std::pair<std::string_view, std::size_t>> split_top_level(std::string_view s,
                                                                      char sep) {
  std::vector<std::pair<std::string_view, std::size_t>> parts;
  Scanner sc{s};
  std::size_t begin = 0;
  while (true) {
    std::size_t at = sc.seek(std::string_view(&sep, 1));
    if (at == std::string_view::npos) {
      parts.emplace_back(s.substr(begin), begin);
      return parts;
    }
    parts.emplace_back(s.substr(begin, at - begin), begin);
    sc.pos = at + 1;
    begin = at + 1;
  }
}

std::string unescape_quoted(std::string_view body, std::size_t at) {
  // `body` includes the surrounding double quotes.
  std::string out;
  out.reserve(body.size());
  for (std::size_t i = 1; i + 1 < body.size(); ++i) {
    char c = body[i];
    if (c == '\\') {
      ++i;
      if (i + 1 > body.size()) throw ParseError("dangling escape in quoted value", at + i);
      char e = body[i];
      if (e != '"' && e != '\\') throw ParseError("unsupported escape in quoted value", at + i);
      out.push_back(e);
      continue;
    }
    out.push_back(c);
  }
  return out;
}

std::string parse_value(std::string_view piece, std::size_t at) {
  piece = trim(piece);
  if (piece.empty()) throw ParseError("empty value", at);
  if (piece.front() == '"') {
    Scanner sc{piece};
    sc.skip_quoted();
    if (!trim(piece.substr(sc.pos)).empty())
      throw ParseError("unexpected text after quoted value", at + sc.pos);
    std::string v = unescape_quoted(piece.substr(0, sc.pos), at);
    if (v.empty()) throw ParseError("empty value", at);
    return v;
  }
  // Tolerate single-quoted values; interior taken verbatim.
  if (piece.size() >= 2 && piece.front() == '\'' && piece.back() == '\'') {
    std::string v(piece.substr(1, piece.size() - 2));
    if (v.empty()) throw ParseError("empty value", at);
    return v;
  }
  return canonicalize_value(piece);
}

Param parse_param(std::string_view piece, std::size_t at) {
  Scanner sc{piece};
  std::size_t eq = sc.seek("=");
  if (eq == std::string_view::npos) {
    return Param{std::nullopt, parse_value(piece, at)};
  }
  std::string_view key = trim(piece.substr(0, eq));
  if (!is_identifier(key)) throw ParseError("malformed key=value", at);
  std::string_view rest = piece.substr(eq + 1);
  Scanner rc{rest};
  if (rc.seek("=") != std::string_view::npos)
    throw ParseError("malformed key=value", at + eq + 1);
  if (trim(rest).empty()) throw ParseError("malformed key=value", at + eq);
  return Param{std::string(key), parse_value(rest, at + eq + 1)};
}

// Parse one `label(params)` group, optionally prefixed `Speaker.`.
// `speaker_out` receives the dot-prefix if present.
ActInstance parse_act_group(std::string_view group, std::size_t at, std::string* speaker_out) {
  group = trim(group);
  if (group.empty()) throw ParseError("empty act", at);

  // Quoted group, e.g. an element of ["disagree()", ...].
  if (group.front() == '"' && group.back() == '"' && group.size() >= 2) {
    return parse_act_group(trim(group.substr(1, group.size() - 2)), at + 1, speaker_out);
  }
  if (group.front() == '\'' && group.back() == '\'' && group.size() >= 2) {
    return parse_act_group(trim(group.substr(1, group.size() - 2)), at + 1, speaker_out);
  }

  std::size_t paren = group.find('(');
  if (paren == std::string_view::npos) throw ParseError("act missing parameter list", at);

  std::string_view head = group.substr(0, paren);
  std::size_t dot = head.rfind('.');
  std::string_view label_text = head;
  if (dot != std::string_view::npos) {
    std::string_view prefix = trim(head.substr(0, dot));
    if (prefix.empty()) throw ParseError("empty speaker prefix", at);
    if (speaker_out) {
      std::string p(prefix);
      if (speaker_out->empty()) {
        *speaker_out = p;
      } else if (canonicalize_label(*speaker_out) != canonicalize_label(p)) {
        throw ParseError("conflicting speaker prefixes", at);
      }
    }
    label_text = head.substr(dot + 1);
  }

  std::string label = canonicalize_label(label_text);
  if (label.empty()) throw ParseError("empty label", at);
  if (!is_label_token(label)) throw ParseError("malformed label", at);

  Scanner sc{group};
  sc.pos = paren + 1;
  std::size_t close = sc.seek(")", 1);
  if (close == std::string_view::npos) throw ParseError("unbalanced parentheses", at + paren);
  std::string_view tail = trim(group.substr(close + 1));
  while (!tail.empty() && (tail.back() == '.' || tail.back() == ',')) tail.remove_suffix(1);
  if (!trim(tail).empty()) throw ParseError("unexpected text after act", at + close + 1);

  ActInstance act;
  act.label = std::move(label);
  std::string_view inner = group.substr(paren + 1, close - paren - 1);
  if (!trim(inner).empty()) {
    for (auto& [piece, off] : split_top_level(inner, ',')) {
      act.params.push_back(parse_param(piece, at + paren + 1 + off));
    }
  }
  for (std::size_t i = 0; i < act.params.size(); ++i) {
    if (!act.params[i].key) continue;
    for (std::size_t j = i + 1; j < act.params.size(); ++j) {
      if (act.params[j].key && *act.params[i].key == *act.params[j].key)
        throw ParseError("duplicate key '" + *act.params[i].key + "'", at + paren);
    }
  }
  return act;
}

}  // namespace

bool is_token(std::string_view v) {
  return !v.empty() && std::all_of(v.begin(), v.end(), [](char c) { return is_ident_char(c); });
}

std::string canonicalize_value(std::string_view v) {
  v = trim(v);
  std::string out;
  out.reserve(v.size());
  bool in_ws = false;
  for (char c : v) {
    if (is_ws(c)) {
      in_ws = true;
      continue;
    }
    if (in_ws && !out.empty()) out.push_back('_');
    in_ws = false;
    out.push_back(c);
  }
  return out;
}

DasTurn parse_turn(std::string_view text) {
  if (trim(text).empty()) throw ParseError("empty turn", 0);

  DasTurn turn;
  std::string_view s = text;

  // `Speaker:` prefix — the first top-level ':' before any '('.
  {
    Scanner sc{s};
    std::size_t colon = sc.seek(":(");
    if (colon != std::string_view::npos && s[colon] == ':') {
      std::string_view prefix = trim(s.substr(0, colon));
      if (!prefix.empty() && prefix.find('[') == std::string_view::npos) {
        turn.speaker = std::string(prefix);
        s = s.substr(colon + 1);
      }
    }
  }

  std::string_view body = trim(s);
  std::size_t body_at = text.size() - s.size() + (s.size() - body.size());
  if (body.empty()) throw ParseError("turn has no acts", body_at);

  char separator = ';';
  if (body.front() == '[') {
    if (body.back() != ']') throw ParseError("unbalanced brackets", body_at);
    body = trim(body.substr(1, body.size() - 2));
    body_at += 1;
    if (body.empty()) throw ParseError("turn has no acts", body_at);
    separator = ',';
  }

  for (auto& [group, off] : split_top_level(body, separator)) {
    if (trim(group).empty()) continue;  // trailing separator
    turn.acts.push_back(parse_act_group(group, body_at + off, &turn.speaker));
  }
  if (turn.acts.empty()) throw ParseError("turn has no acts", body_at);
  return turn;
}

std::vector<DasTurn> parse_turns(std::string_view text) {
  std::vector<DasTurn> turns;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::string_view t = trim(line);
    if (!t.empty() && t.substr(0, 3) != "```") turns.push_back(parse_turn(line));
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return turns;
}

}  // namespace das::core
