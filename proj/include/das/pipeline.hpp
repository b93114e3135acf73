// The encode -> localize -> decode pipeline and its prompt machinery, plus
// the three generation baselines (translate, paraphrase, single-prompt).
#pragma once

#include <chrono>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "das/backend.hpp"
#include "das/core.hpp"

namespace das::pipeline {

// ---------------------------------------------------------------- dialogue

struct Turn {
  std::string speaker;
  std::string text;

  bool operator==(const Turn&) const = default;
};

struct Dialogue {
  std::string id;
  std::string topic;
  std::string language;
  std::vector<Turn> turns;

  bool operator==(const Dialogue&) const = default;
};

// One line per turn: `Speaker: text`.
std::string render_conversation(const Dialogue& dialogue);

// ---------------------------------------------------------------- templates

enum class TemplateId {
  Encode,
  GenerateContext,
  LocalizeContext,
  LocalizeDas,
  Decode,
  Translate,
  Paraphrase,
  SinglePrompt,
};

struct PromptTemplate {
  TemplateId id = TemplateId::Encode;
  std::string body;
};

class UnboundPlaceholder : public std::invalid_argument {
 public:
  explicit UnboundPlaceholder(const std::string& name)
      : std::invalid_argument("unbound placeholder <" + name + ">"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

// The eight canonical templates, compiled in; `load` overrides per-file from
// a directory of `<id>.txt` files and falls back to the built-in otherwise.
class TemplateSet {
 public:
  static TemplateSet builtin();
  static TemplateSet load(const std::filesystem::path& dir);

  const PromptTemplate& get(TemplateId id) const;
  static std::string file_name(TemplateId id);  // e.g. "encode.txt"

 private:
  std::map<TemplateId, PromptTemplate> templates_;
};

using Bindings = std::map<std::string, std::string>;

// Byte-exact placeholder substitution. The encode template's taxonomy block
// (`<function name>: <description>` + example lines + `...`) expands to one
// entry per act. Any known placeholder left unbound raises UnboundPlaceholder.
std::string render_prompt(const PromptTemplate& tmpl, const Bindings& bindings,
                          const core::Taxonomy* taxonomy = nullptr);

// ---------------------------------------------------------------- errors

class ScenarioParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class TurnCountMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Wraps any stage failure inside run_pipeline with the stage name.
class StageError : public std::runtime_error {
 public:
  StageError(const std::string& stage, const std::string& what)
      : std::runtime_error(stage + ": " + what), stage_(stage) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

// ---------------------------------------------------------------- options

enum class Style { None, Simple, Neutral, Formal };

struct PipelineOptions {
  std::string model = "gpt-4o-2024-08-06";
  double encode_temperature = 0.0;
  double localize_temperature = 0.2;  // localization, decoding and baselines
  int max_output_tokens = 2048;
  Style style = Style::None;
  bool decode_turn_by_turn = false;
  // Encoding keeps unknown labels, so the default here is open.
  core::Taxonomy taxonomy = core::Taxonomy::default_taxonomy(/*open_extension=*/true);
  TemplateSet templates = TemplateSet::builtin();
};

// ---------------------------------------------------------------- stages

// Scenario text parsing: extracts `Name (G, age)` profiles; the whole text
// becomes the summary. Throws ScenarioParseError when no profile is found.
core::Scenario parse_scenario(const std::string& text);

core::DasDialogue encode(const Dialogue& dialogue, llm::Backend& backend,
                         const PipelineOptions& options = {});

core::Scenario generate_context(const Dialogue& dialogue, llm::Backend& backend,
                                const PipelineOptions& options = {});

core::Scenario localize_context(const core::Scenario& scenario, const std::string& language,
                                llm::Backend& backend, const PipelineOptions& options = {});

core::DasDialogue localize_das(const core::DasDialogue& das, const core::Scenario& scenario,
                               const std::string& language, llm::Backend& backend,
                               const PipelineOptions& options = {});

Dialogue decode(const core::DasDialogue& das, const core::Scenario& scenario,
                const std::string& language, llm::Backend& backend,
                const PipelineOptions& options = {});

// ---------------------------------------------------------------- runner

struct StageTiming {
  std::string stage;
  std::chrono::milliseconds elapsed{0};
};

struct Provenance {
  std::string model;
  std::string backend_id;
  double encode_temperature = 0.0;
  double localize_temperature = 0.2;
  std::map<std::string, bool> stage_cached;
  std::vector<std::string> unknown_labels;
};

struct LocalizedResult {
  Dialogue source;
  core::DasDialogue encoded;
  core::Scenario scenario;
  core::Scenario localized_scenario;
  core::DasDialogue localized_das;
  Dialogue decoded;
  std::string target_language;
  std::vector<StageTiming> stage_timings;
  Provenance provenance;
};

// Reuses encodings across target languages for the same dialogue id.
class EncodeCache {
 public:
  std::optional<core::DasDialogue> get(const std::string& dialogue_id) const;
  void put(const std::string& dialogue_id, core::DasDialogue das);

 private:
  mutable std::mutex mutex_;
  std::map<std::string, core::DasDialogue> cache_;
};

LocalizedResult run_pipeline(const Dialogue& dialogue, const std::string& language,
                             llm::Backend& backend, const PipelineOptions& options = {},
                             EncodeCache* encode_cache = nullptr);

// ---------------------------------------------------------------- baselines

Dialogue baseline_translate(const Dialogue& dialogue, const std::string& language,
                            llm::Backend& backend, const PipelineOptions& options = {});

Dialogue baseline_paraphrase(const Dialogue& dialogue, llm::Backend& backend,
                             const PipelineOptions& options = {});

Dialogue baseline_single_prompt(const Dialogue& dialogue, const std::string& language,
                                llm::Backend& backend, const PipelineOptions& options = {});

}  // namespace das::pipeline
