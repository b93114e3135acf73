// Corpus, judgment and gold-slot loaders, the turn-bound topic sampler, and
// run persistence with hashed manifests.
#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "das/pipeline.hpp"

namespace das::corpus {

// ---------------------------------------------------------------- errors

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? what + " (line " + std::to_string(line) + ")" : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class InsufficientTopic : public std::runtime_error {
 public:
  InsufficientTopic(const std::string& topic, int available, int requested)
      : std::runtime_error("topic '" + topic + "' has " + std::to_string(available) +
                           " eligible dialogues, need " + std::to_string(requested)),
        topic(topic),
        available(available),
        requested(requested) {}
  std::string topic;
  int available;
  int requested;
};

// ---------------------------------------------------------------- corpus

struct Corpus {
  std::vector<pipeline::Dialogue> dialogues;
  std::string source_name;

  std::vector<std::string> topics() const;  // distinct, sorted
};

struct SkipEntry {
  int line = 0;
  std::string reason;
};

struct LoadedCorpus {
  Corpus corpus;
  std::vector<SkipEntry> skipped;
};

// One JSON record per line: {"id", "topic", "turns": [{"speaker","text"}...]},
// optional "language" (default "en"). Malformed lines land in the skip
// report; duplicate ids are a hard FormatError.
LoadedCorpus load_dialogues(const std::filesystem::path& path);

void save_dialogues(const Corpus& corpus, const std::filesystem::path& path);

std::string dialogue_record_to_json(const pipeline::Dialogue& dialogue);
pipeline::Dialogue dialogue_record_from_json(const std::string& text);

// ---------------------------------------------------------------- sampler

struct SampleResult {
  Corpus corpus;
  double mean_turns = 0.0;
};

// Keeps dialogues with turn count in [min_turns, max_turns] and draws exactly
// `per_topic` per topic with a seeded generator. Deterministic for a seed.
SampleResult sample_corpus(const Corpus& corpus, int min_turns = 8, int max_turns = 16,
                           int per_topic = 8, std::uint64_t seed = 0);

// ---------------------------------------------------------------- judgments

enum class Criterion { Fluency, Coherence, Cultural, Situational, MeaningLikert };
enum class Choice { A, B, Both, Neither };

std::string to_string(Criterion criterion);
std::string to_string(Choice choice);
std::optional<Criterion> criterion_from_string(std::string_view text);
std::optional<Choice> choice_from_string(std::string_view text);

struct PairwiseJudgment {
  std::string dialogue_id;
  Criterion criterion = Criterion::Fluency;
  std::string system_a;
  std::string system_b;
  std::optional<Choice> choice;  // present iff criterion != MeaningLikert
  std::optional<int> likert;     // present iff criterion == MeaningLikert
  std::string annotator_id;
};

// Comma-delimited with header
// `dialogue_id,criterion,system_a,system_b,choice_or_likert,annotator_id`.
std::vector<PairwiseJudgment> load_pairwise_judgments(const std::filesystem::path& path);

// ---------------------------------------------------------------- gold slots

struct GoldSlot {
  std::string dialogue_id;
  int turn = 0;
  int act = 0;
  std::string key;
  std::string slot_type;
  std::string original;
  std::string localized;
};

struct GoldSlotSet {
  std::vector<GoldSlot> slots;
  std::vector<std::string> warnings;  // e.g. dropped duplicate identities
};

// Comma-delimited `dialogue_id,turn,act,key,slot_type,original,localized`.
GoldSlotSet load_gold_slot_changes(const std::filesystem::path& path);

// ---------------------------------------------------------------- run store

// Persists all artifacts of one pipeline run under
// `<out_dir>/<dialogue_id>__<target_language>/` and writes a manifest listing
// each artifact path with its content hash. Returns the manifest path.
// Stage timings are diagnostic only and are not persisted, so reruns with a
// deterministic backend produce byte-identical artifacts.
std::filesystem::path store_run(const pipeline::LocalizedResult& result,
                                const std::filesystem::path& out_dir);

}  // namespace das::corpus
