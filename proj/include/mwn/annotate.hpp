#pragma once

#include <cstdint>
#include <iosfwd>
#include <json.hpp>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mwn/assumptions.hpp"
#include "mwn/core.hpp"
#include "mwn/ingest.hpp"

namespace mwn {

// Outcome for one token. Corpus runs never halt on a data problem: anything
// short of tagging becomes an abstention or an error record.
struct AnnotationDecision {
    enum class Kind { tagged, abstained, error };

    Kind kind = Kind::abstained;
    std::string value;   // synset id, or cluster label at homonym level
    std::string reason;  // set unless tagged

    static AnnotationDecision tag(std::string value);
    static AnnotationDecision abstain(std::string reason);
    static AnnotationDecision fail(std::string reason);

    bool operator==(const AnnotationDecision&) const = default;
};

// Abstention reasons shared by both annotation levels.
inline constexpr std::string_view kSourceOov = "source-oov";
inline constexpr std::string_view kNoSharedSynset = "no-shared-synset";
inline constexpr std::string_view kMultipleSharedSynsets = "multiple-shared-synsets";

struct AnnotationRecord {
    std::string sentence_id;
    std::uint32_t token_index = 0;
    AnnotationDecision decision;
    bool cluster_level = false;  // tagged value is a cluster label, not a synset id
};

struct AnnotationSummary {
    std::uint64_t tokens = 0;
    std::uint64_t tagged = 0;
    std::uint64_t abstained = 0;
    std::uint64_t errors = 0;
    std::map<std::string, std::uint64_t> abstain_reasons;
};

// Tags iff the source word and the aligned target word share exactly one
// synset. The target word is looked up with the source pos. Throws
// usage_error when src is not in the direction's source language.
AnnotationDecision annotate_token(const MultiWordnet& model, const Direction& direction,
                                  const WordKeyView& src, std::string_view tgt_lemma);

// Coarse variant: tags iff all shared synsets carry one cluster label, so a
// word whose translation spans several same-cluster senses still resolves.
// Throws validation_error when a shared synset has no cluster entry.
AnnotationDecision annotate_homonym_level(const MultiWordnet& model, const Direction& direction,
                                          const WordKeyView& src, std::string_view tgt_lemma,
                                          const ClusterMap& clusters);

// Applies the per-token rule across a corpus, honoring per-token target
// languages. Produces one record per input token in input order. A token
// whose source language mismatches the direction, whose effective target
// equals the source language, or whose shared synsets lack cluster entries
// yields an error record and processing continues.
std::vector<AnnotationRecord> annotate_tokens(const MultiWordnet& model,
                                              const Direction& direction,
                                              std::span<const AlignedToken> tokens,
                                              const ClusterMap* clusters = nullptr);

// Streaming form: writes one JSON line per record to the sink and returns
// summary counts. Line format:
//   {"sent":...,"tok":...,"decision":"tagged|abstain|error",
//    "synset"|"cluster":...?,"reason":...?}
AnnotationSummary annotate_bitext(const MultiWordnet& model, const Direction& direction,
                                  std::span<const AlignedToken> tokens, std::ostream& sink,
                                  const ClusterMap* clusters = nullptr);

std::vector<AnnotationRecord> parse_annotations(std::istream& in);

nlohmann::json to_json(const AnnotationSummary& summary);

struct EvaluationSlice {
    std::uint64_t population = 0;
    std::uint64_t annotated = 0;
    std::uint64_t correct = 0;
};

// Gold-standard comparison. Slices cover the tokens that carry a gold tag
// and whose source word is in the model; the polysemous/monosemous split is
// by the source word's sense count.
struct EvaluationReport {
    EvaluationSlice all;
    EvaluationSlice polysemous;
    EvaluationSlice monosemous;
    std::uint64_t without_gold = 0;  // tokens excluded for missing gold tags
    std::uint64_t source_oov = 0;    // gold-bearing tokens whose source word is unknown
};

// Joins records to tokens on (sentence, token). Records must reference
// existing tokens and reference each token at most once; cluster-level
// records are not comparable to synset golds and are rejected.
EvaluationReport evaluate(std::span<const AnnotationRecord> records,
                          std::span<const AlignedToken> tokens, const MultiWordnet& model);

// Serialized with coverage = annotated/population and precision =
// correct/annotated per slice; a ratio over zero is the string "undefined".
nlohmann::json to_json(const EvaluationReport& report);

// Corpus-level check of the two weak assumptions. Every source word aligned
// to two or more distinct target lemmas contributes one instance per
// unordered lemma pair: the pair satisfies WSA when the two target words are
// synonyms, and WPA when the source word is polysemous. Instances whose
// words are out of vocabulary are skipped per check, never fatal.
struct WeakAssumptionAudit {
    std::uint64_t words_with_multiple_alignments = 0;
    std::uint64_t pair_instances = 0;
    std::uint64_t wsa_satisfied = 0;
    std::uint64_t wsa_violated = 0;
    std::uint64_t wsa_skipped_oov = 0;
    std::uint64_t wpa_satisfied = 0;
    std::uint64_t wpa_violated = 0;
    std::uint64_t wpa_skipped_oov = 0;
};

WeakAssumptionAudit weak_assumption_audit(const MultiWordnet& model, const Direction& direction,
                                          std::span<const AlignedToken> tokens);

nlohmann::json to_json(const WeakAssumptionAudit& audit);

}  // namespace mwn
