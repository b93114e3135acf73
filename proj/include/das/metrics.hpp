// Evaluation statistics: agreement, per-label and slot-level P/R/F1, win
// rates with exact binomial significance, BLEU, chrF++, Likert means, the
// speaker-gender audit and slot-type accuracy.
//
// Corpus-level BLEU/chrF++ accumulate integer per-pair statistics; the
// default entry points partition the corpus across OpenMP threads and merge
// partial counts, while *_serial variants keep the single-threaded reference
// used by the tests and the benchmark. Both paths produce identical counts.
#pragma once

#include <array>
#include <map>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "das/core.hpp"
#include "das/corpus.hpp"

namespace das::metrics {

// ---------------------------------------------------------------- errors

class LengthMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class EmptyInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class RangeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ProfileMissing : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------- agreement

// Cohen's kappa over two equal-length categorical label sequences; chance
// agreement from per-annotator marginal frequencies.
double cohen_kappa(std::span<const std::string> labels_a, std::span<const std::string> labels_b);

// Auxiliary diagnostic for multi-act turns: mean Jaccard overlap of per-turn
// label sets.
double mean_jaccard(std::span<const std::set<std::string>> a,
                    std::span<const std::set<std::string>> b);

std::vector<std::string> first_act_labels(const core::DasDialogue& dialogue);
std::vector<std::set<std::string>> act_label_sets(const core::DasDialogue& dialogue);

// ---------------------------------------------------------------- p/r/f1

struct LabelPrf {
  long long tp = 0, fp = 0, fn = 0;
  double precision = 0, recall = 0, f1 = 0;
};

std::map<std::string, LabelPrf> per_label_prf(std::span<const std::string> gold,
                                              std::span<const std::string> predicted);

// Predicted slot changes for one dialogue, as produced by core::diff_slots.
struct PredictedSlots {
  std::string dialogue_id;
  std::vector<core::SlotChange> changes;
};

struct SlotPrf {
  long long tp = 0, fp = 0, fn = 0;
  double precision = 0, recall = 0, f1 = 0;
  // Secondary: among identity matches, how often the substituted value also
  // equals the gold value.
  long long value_matches = 0;
  double value_match_rate = 0;
};

// Matching is on slot identity (dialogue, turn, act, key) — which slots
// changed — not on the substituted value.
SlotPrf slot_localization_prf(std::span<const PredictedSlots> predicted,
                              const corpus::GoldSlotSet& gold);

struct TypeAccuracy {
  long long correct = 0, total = 0;
  double accuracy = 0;
};

struct SlotTypeAccuracy {
  std::map<std::string, TypeAccuracy> per_type;
  TypeAccuracy overall;  // micro-average
};

SlotTypeAccuracy slot_type_accuracy(std::span<const std::pair<std::string, bool>> judged);

// ---------------------------------------------------------------- win rates

struct WinRateRow {
  std::string system_a;
  std::string system_b;
  corpus::Criterion criterion = corpus::Criterion::Fluency;
  long long n = 0;
  long long win_a = 0, win_b = 0, both = 0, neither = 0;  // raw counts
  double win_a_pct = 0, win_b_pct = 0, both_pct = 0, neither_pct = 0;  // at 0.1
  double wr_a_pct = 0, wr_b_pct = 0;  // win + both, at 0.1
  double p_value = 1.0;  // exact two-tailed binomial over wins/losses only
};

struct WinRateTable {
  std::vector<WinRateRow> rows;
};

// Pools judgments per (system pair, criterion); pair orientation is
// normalized so swapped system_a/system_b rows aggregate together.
// MeaningLikert judgments are skipped (see mean_likert).
WinRateTable win_rates(std::span<const corpus::PairwiseJudgment> judgments);

// Exact two-tailed binomial test under null p=0.5: the doubled smaller tail,
// clamped at 1. Exact tail summation in log space; no normal approximation.
double binomial_two_tailed(long long wins, long long losses);

struct LikertSummary {
  double mean = 0;
  long long count = 0;
};

LikertSummary mean_likert(std::span<const int> scores);

// ---------------------------------------------------------------- bleu

struct BleuStats {
  std::array<long long, 4> matched{};  // clipped n-gram matches, n = 1..4
  std::array<long long, 4> total{};    // candidate n-gram counts
  long long candidate_len = 0;
  long long reference_len = 0;

  BleuStats& operator+=(const BleuStats& other);
};

BleuStats bleu_pair_stats(const std::string& candidate, const std::string& reference);
double bleu_from_stats(const BleuStats& stats);

// Corpus BLEU-4: clipped modified n-gram precisions, brevity penalty,
// lowercased whitespace tokenization; zero match counts smoothed with 1e-9.
double bleu(std::span<const std::string> candidates, std::span<const std::string> references);
double bleu_serial(std::span<const std::string> candidates,
                   std::span<const std::string> references);

// ---------------------------------------------------------------- chrf++

struct ChrfStats {
  static constexpr int kCharOrders = 6;
  static constexpr int kWordOrders = 2;
  static constexpr int kOrders = kCharOrders + kWordOrders;

  std::array<long long, kOrders> hyp{};
  std::array<long long, kOrders> ref{};
  std::array<long long, kOrders> match{};

  ChrfStats& operator+=(const ChrfStats& other);
};

ChrfStats chrf_pair_stats(const std::string& candidate, const std::string& reference);
double chrf_from_stats(const ChrfStats& stats);

// chrF++: character n-grams 1..6 on whitespace-stripped text, word n-grams
// 1..2, beta=2; per-order F scores averaged over effective orders, in
// [0, 100].
double chrf_pp(std::span<const std::string> candidates, std::span<const std::string> references);
double chrf_pp_serial(std::span<const std::string> candidates,
                      std::span<const std::string> references);

// ---------------------------------------------------------------- audits

struct GenderDistribution {
  std::map<std::string, long long> counts;    // pair key -> scenarios
  std::map<std::string, double> fractions;    // sums to 1
  long long n = 0;
};

// Unordered gender pair of the two principal (first two) speakers per
// scenario; keys are MF, MM, FF, XF, XM, XX.
GenderDistribution gender_pair_distribution(std::span<const core::Scenario> scenarios);

// ---------------------------------------------------------------- reports

struct MetricReport {
  std::string metric;
  std::map<std::string, double> values;
  std::map<std::string, long long> counts;  // numerators/denominators
  std::string notes;
};

std::string reports_to_jsonl(std::span<const MetricReport> reports);
std::string reports_to_table(std::span<const MetricReport> reports);

}  // namespace das::metrics
