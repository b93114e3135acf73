// Core DAS representation: dialogue-act types, taxonomy, lenient parser,
// canonical serializer, taxonomy validation and slot-level diffing.
#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace das::core {

// ---------------------------------------------------------------- errors

// Raised on malformed DAS text. `offset` is the byte position within the
// input line where the problem was detected.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Raised when two dialogues that should be structurally aligned (same turns,
// same acts, same labels) are not.
class StructureMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------- taxonomy

struct ActDefinition {
  std::string name;  // canonical identifier, lower_snake_case
  std::string description;
  std::vector<std::string> examples;

  bool operator==(const ActDefinition&) const = default;
};

struct Taxonomy {
  std::vector<ActDefinition> acts;
  // When true, labels outside the taxonomy are warnings instead of errors.
  bool open_extension = false;

  // The built-in 15-act schema.
  static Taxonomy default_taxonomy(bool open_extension = false);

  bool contains(std::string_view label) const;               // case-insensitive
  const ActDefinition* find(std::string_view label) const;   // nullptr if absent
};

// ---------------------------------------------------------------- dialogue

// One act parameter. Keyed params carry a key; bare params do not and are
// addressed by their position within the act's parameter list.
struct Param {
  std::optional<std::string> key;
  std::string value;

  bool operator==(const Param&) const = default;
};

struct ActInstance {
  std::string label;
  std::vector<Param> params;

  bool operator==(const ActInstance&) const = default;
};

struct DasTurn {
  std::string speaker;
  std::vector<ActInstance> acts;

  bool operator==(const DasTurn&) const = default;
};

enum class Gender : char { M = 'M', F = 'F', X = 'X' };

struct SpeakerProfile {
  std::string name;
  Gender gender = Gender::X;
  int age = 0;
  std::string relationship;

  bool operator==(const SpeakerProfile&) const = default;
};

struct Scenario {
  std::string summary;
  std::vector<SpeakerProfile> speakers;

  bool operator==(const Scenario&) const = default;
};

struct DasDialogue {
  std::string id;
  std::string source_language;
  std::optional<std::string> target_language;
  std::optional<Scenario> scenario;
  std::vector<DasTurn> turns;

  bool operator==(const DasDialogue&) const = default;
};

// One localization substitution at a slot. `key` is the param key for keyed
// params, or the decimal param position for bare params (keys are identifiers
// and never purely numeric, so the two cannot collide). Indices address the
// original dialogue.
struct SlotChange {
  int turn_index = 0;
  int act_index = 0;
  std::string key;
  std::string original;
  std::string localized;

  bool operator==(const SlotChange&) const = default;
};

// ---------------------------------------------------------------- validate

struct ValidationIssue {
  enum class Severity { Error, Warning };
  Severity severity = Severity::Error;
  int turn_index = -1;
  int act_index = -1;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;

  int error_count() const;
  int warning_count() const;
  bool ok() const { return error_count() == 0; }
};

// ---------------------------------------------------------------- operations

// True if `v` is a canonical bare token: [A-Za-z0-9_]+.
bool is_token(std::string_view v);

// Canonicalize a bare value: trim, collapse internal whitespace runs to a
// single underscore. Idempotent. Quoted values bypass this entirely.
std::string canonicalize_value(std::string_view v);

// Parse one turn line of DAS text. Lenient: tolerates surrounding whitespace,
// bracketed-and-quoted act lists, `Speaker:` and `Speaker.` prefixes, and
// uncanonical bare values (spaces are collapsed to underscores). Labels are
// lower-cased. The speaker is empty when the line carries no prefix.
DasTurn parse_turn(std::string_view text);

// Parse a whole dialogue body: one turn per non-empty line. Markdown code
// fences are skipped. Byte offsets in errors are line-local.
std::vector<DasTurn> parse_turns(std::string_view text);

// Canonical one-line form of a turn: `Speaker: label(k=v, bare); label()`.
std::string serialize_turn(const DasTurn& turn);

// Canonical textual DAS: one turn per line. parse of the result yields
// structurally equal turns.
std::string serialize(const DasDialogue& dialogue);

// Check acts against a taxonomy. Unknown labels are errors for a closed
// taxonomy, warnings for an open one. Duplicate keyed params and empty turns
// are always errors.
ValidationReport validate(const DasDialogue& dialogue, const Taxonomy& taxonomy);

// Slot-level diff between a dialogue and its structure-preserving
// localization. Keyed params align by key, bare params by position. Throws
// StructureMismatch when turn counts, act counts, labels, key sets or bare
// arity differ.
std::vector<SlotChange> diff_slots(const DasDialogue& original,
                                   const DasDialogue& localized);

// ------------------------------------------------------------- machine form

// JSON record exchange (field names match the type definitions).
std::string to_json(const DasDialogue& dialogue);
DasDialogue dialogue_from_json(const std::string& text);

std::string to_json(const Scenario& scenario);
Scenario scenario_from_json(const std::string& text);

}  // namespace das::core
