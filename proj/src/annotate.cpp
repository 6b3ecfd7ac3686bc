#include "mwn/annotate.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <utility>

#include "mwn/reports.hpp"

namespace mwn {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string ratio_or_undefined(std::uint64_t num, std::uint64_t den) {
    return den == 0 ? std::string("undefined") : format_fraction(num, den);
}

json slice_json(const EvaluationSlice& slice) {
    return json{{"population", slice.population},
                {"annotated", slice.annotated},
                {"correct", slice.correct},
                {"coverage", ratio_or_undefined(slice.annotated, slice.population)},
                {"precision", ratio_or_undefined(slice.correct, slice.annotated)}};
}

}  // namespace

AnnotationDecision AnnotationDecision::tag(std::string value) {
    return {Kind::tagged, std::move(value), {}};
}

AnnotationDecision AnnotationDecision::abstain(std::string reason) {
    return {Kind::abstained, {}, std::move(reason)};
}

AnnotationDecision AnnotationDecision::fail(std::string reason) {
    return {Kind::error, {}, std::move(reason)};
}

AnnotationDecision annotate_token(const MultiWordnet& model, const Direction& direction,
                                  const WordKeyView& src, std::string_view tgt_lemma) {
    if (src.language != direction.source.code) {
        throw usage_error("direction-mismatch", "token language " + std::string(src.language) +
                                                    " is not the direction source " +
                                                    direction.source.code);
    }
    if (!model.contains(src)) {
        return AnnotationDecision::abstain(std::string(kSourceOov));
    }
    const auto shared =
        model.shared_sense_indices(src, WordKeyView(direction.target.code, tgt_lemma, src.pos));
    if (shared.empty()) {
        return AnnotationDecision::abstain(std::string(kNoSharedSynset));
    }
    if (shared.size() > 1) {
        return AnnotationDecision::abstain(std::string(kMultipleSharedSynsets));
    }
    return AnnotationDecision::tag(model.synset(shared.front()).id);
}

AnnotationDecision annotate_homonym_level(const MultiWordnet& model, const Direction& direction,
                                          const WordKeyView& src, std::string_view tgt_lemma,
                                          const ClusterMap& clusters) {
    if (src.language != direction.source.code) {
        throw usage_error("direction-mismatch", "token language " + std::string(src.language) +
                                                    " is not the direction source " +
                                                    direction.source.code);
    }
    if (!model.contains(src)) {
        return AnnotationDecision::abstain(std::string(kSourceOov));
    }
    const auto shared =
        model.shared_sense_indices(src, WordKeyView(direction.target.code, tgt_lemma, src.pos));
    if (shared.empty()) {
        return AnnotationDecision::abstain(std::string(kNoSharedSynset));
    }
    const std::string* first_label = nullptr;
    for (const std::uint32_t s : shared) {
        const std::string& id = model.synset(s).id;
        const std::string* label = clusters.label(id);
        if (label == nullptr) {
            throw validation_error("cluster-missing",
                                   "synset " + id + " has no cluster label");
        }
        if (first_label == nullptr) {
            first_label = label;
        } else if (*label != *first_label) {
            return AnnotationDecision::abstain(std::string(kMultipleSharedSynsets));
        }
    }
    return AnnotationDecision::tag(*first_label);
}

std::vector<AnnotationRecord> annotate_tokens(const MultiWordnet& model,
                                              const Direction& direction,
                                              std::span<const AlignedToken> tokens,
                                              const ClusterMap* clusters) {
    std::vector<AnnotationRecord> records;
    records.reserve(tokens.size());
    for (const AlignedToken& token : tokens) {
        AnnotationRecord record;
        record.sentence_id = token.sentence_id;
        record.token_index = token.token_index;
        record.cluster_level = clusters != nullptr;
        if (token.source.language != direction.source) {
            record.decision = AnnotationDecision::fail("language-mismatch");
            records.push_back(std::move(record));
            continue;
        }
        const LanguageCode& target =
            token.target_language ? *token.target_language : direction.target;
        if (target == direction.source) {
            record.decision = AnnotationDecision::fail("language-mismatch");
            records.push_back(std::move(record));
            continue;
        }
        const Direction effective{direction.source, target};
        try {
            record.decision =
                clusters ? annotate_homonym_level(model, effective, token.source,
                                                  token.target_lemma, *clusters)
                         : annotate_token(model, effective, token.source, token.target_lemma);
        } catch (const validation_error& e) {
            record.decision = AnnotationDecision::fail(e.code());
        }
        records.push_back(std::move(record));
    }
    return records;
}

AnnotationSummary annotate_bitext(const MultiWordnet& model, const Direction& direction,
                                  std::span<const AlignedToken> tokens, std::ostream& sink,
                                  const ClusterMap* clusters) {
    AnnotationSummary summary;
    for (const AnnotationRecord& record : annotate_tokens(model, direction, tokens, clusters)) {
        ++summary.tokens;
        ordered_json line;
        line["sent"] = record.sentence_id;
        line["tok"] = record.token_index;
        switch (record.decision.kind) {
            case AnnotationDecision::Kind::tagged:
                ++summary.tagged;
                line["decision"] = "tagged";
                line[record.cluster_level ? "cluster" : "synset"] = record.decision.value;
                break;
            case AnnotationDecision::Kind::abstained:
                ++summary.abstained;
                ++summary.abstain_reasons[record.decision.reason];
                line["decision"] = "abstain";
                line["reason"] = record.decision.reason;
                break;
            case AnnotationDecision::Kind::error:
                ++summary.errors;
                line["decision"] = "error";
                line["reason"] = record.decision.reason;
                break;
        }
        sink << line.dump() << '\n';
    }
    return summary;
}

std::vector<AnnotationRecord> parse_annotations(std::istream& in) {
    std::vector<AnnotationRecord> records;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line_no == 1 && line.starts_with("\xef\xbb\xbf")) {
            throw parse_error("byte-order-mark", line_no, "input starts with a byte order mark");
        }
        if (line.find('\r') != std::string::npos) {
            throw parse_error("carriage-return", line_no,
                              "carriage return found; input must use bare \\n line endings");
        }
        if (line.empty()) {
            throw parse_error("blank-line", line_no, "blank line");
        }
        json object;
        try {
            object = json::parse(line);
        } catch (const json::exception& e) {
            throw parse_error("invalid-json", line_no, e.what());
        }
        if (!object.is_object()) {
            throw parse_error("invalid-json", line_no, "line is not a JSON object");
        }
        for (const auto& [key, value] : object.items()) {
            static constexpr std::string_view allowed[] = {"sent",    "tok",    "decision",
                                                           "synset",  "cluster", "reason"};
            if (std::find(std::begin(allowed), std::end(allowed), key) == std::end(allowed)) {
                throw parse_error("unknown-field", line_no, "unexpected field \"" + key + "\"");
            }
        }
        AnnotationRecord record;
        if (!object.contains("sent") || !object["sent"].is_string() ||
            object["sent"].get_ref<const std::string&>().empty()) {
            throw parse_error("wrong-type", line_no, "field \"sent\" must be a nonempty string");
        }
        record.sentence_id = object["sent"].get<std::string>();
        if (!object.contains("tok") || !object["tok"].is_number_unsigned()) {
            throw parse_error("wrong-type", line_no,
                              "field \"tok\" must be a non-negative integer");
        }
        record.token_index = object["tok"].get<std::uint32_t>();
        if (!object.contains("decision") || !object["decision"].is_string()) {
            throw parse_error("wrong-type", line_no, "field \"decision\" must be a string");
        }
        const std::string decision = object["decision"].get<std::string>();
        const bool has_synset = object.contains("synset");
        const bool has_cluster = object.contains("cluster");
        const bool has_reason = object.contains("reason");
        if ((has_synset && !object["synset"].is_string()) ||
            (has_cluster && !object["cluster"].is_string()) ||
            (has_reason && !object["reason"].is_string())) {
            throw parse_error("wrong-type", line_no, "annotation payload fields must be strings");
        }
        if (decision == "tagged") {
            if (has_synset == has_cluster || has_reason) {
                throw parse_error("malformed-record", line_no,
                                  "a tagged record carries exactly one of \"synset\" or "
                                  "\"cluster\" and no \"reason\"");
            }
            record.cluster_level = has_cluster;
            record.decision = AnnotationDecision::tag(
                object[has_cluster ? "cluster" : "synset"].get<std::string>());
        } else if (decision == "abstain" || decision == "error") {
            if (!has_reason || has_synset || has_cluster) {
                throw parse_error("malformed-record", line_no,
                                  "an abstain or error record carries \"reason\" only");
            }
            const std::string reason = object["reason"].get<std::string>();
            record.decision = decision == "abstain" ? AnnotationDecision::abstain(reason)
                                                    : AnnotationDecision::fail(reason);
        } else {
            throw parse_error("malformed-record", line_no,
                              "decision must be tagged, abstain, or error");
        }
        records.push_back(std::move(record));
    }
    return records;
}

json to_json(const AnnotationSummary& summary) {
    json reasons = json::object();
    for (const auto& [reason, count] : summary.abstain_reasons) {
        reasons[reason] = count;
    }
    return json{{"tokens", summary.tokens},
                {"tagged", summary.tagged},
                {"abstained", summary.abstained},
                {"errors", summary.errors},
                {"abstain_reasons", reasons}};
}

EvaluationReport evaluate(std::span<const AnnotationRecord> records,
                          std::span<const AlignedToken> tokens, const MultiWordnet& model) {
    std::map<std::pair<std::string_view, std::uint32_t>, const AlignedToken*> by_ref;
    for (const AlignedToken& token : tokens) {
        by_ref.emplace(std::make_pair(std::string_view(token.sentence_id), token.token_index),
                       &token);
    }
    std::map<const AlignedToken*, const AnnotationRecord*> matched;
    for (const AnnotationRecord& record : records) {
        if (record.cluster_level) {
            throw validation_error("cluster-level-annotations",
                                   "cluster labels cannot be scored against synset gold tags");
        }
        const auto it =
            by_ref.find(std::make_pair(std::string_view(record.sentence_id), record.token_index));
        if (it == by_ref.end()) {
            throw validation_error("unknown-token-reference",
                                   "annotation for " + record.sentence_id + "/" +
                                       std::to_string(record.token_index) +
                                       " has no bitext token");
        }
        if (!matched.emplace(it->second, &record).second) {
            throw validation_error("duplicate-annotation",
                                   "token " + record.sentence_id + "/" +
                                       std::to_string(record.token_index) +
                                       " is annotated twice");
        }
    }

    EvaluationReport report;
    for (const AlignedToken& token : tokens) {
        if (!token.gold_synset_id) {
            ++report.without_gold;
            continue;
        }
        const auto senses = model.sense_indices(token.source);
        if (senses.empty()) {
            ++report.source_oov;
            continue;
        }
        EvaluationSlice& slice = senses.size() > 1 ? report.polysemous : report.monosemous;
        ++report.all.population;
        ++slice.population;
        const auto it = matched.find(&token);
        if (it == matched.end() ||
            it->second->decision.kind != AnnotationDecision::Kind::tagged) {
            continue;
        }
        ++report.all.annotated;
        ++slice.annotated;
        if (it->second->decision.value == *token.gold_synset_id) {
            ++report.all.correct;
            ++slice.correct;
        }
    }
    return report;
}

json to_json(const EvaluationReport& report) {
    return json{{"all", slice_json(report.all)},
                {"polysemous", slice_json(report.polysemous)},
                {"monosemous", slice_json(report.monosemous)},
                {"without_gold", report.without_gold},
                {"source_oov", report.source_oov}};
}

WeakAssumptionAudit weak_assumption_audit(const MultiWordnet& model, const Direction& direction,
                                          std::span<const AlignedToken> tokens) {
    // Distinct aligned lemmas per (source word, effective target language).
    std::map<std::pair<WordKey, std::string>, std::set<std::string>> groups;
    for (const AlignedToken& token : tokens) {
        if (token.source.language != direction.source) {
            continue;
        }
        const LanguageCode& target =
            token.target_language ? *token.target_language : direction.target;
        if (target == direction.source) {
            continue;
        }
        groups[{token.source, target.code}].insert(token.target_lemma);
    }

    WeakAssumptionAudit audit;
    for (const auto& [group, lemmas] : groups) {
        if (lemmas.size() < 2) {
            continue;
        }
        ++audit.words_with_multiple_alignments;
        const auto& [source, target] = group;
        const bool source_known = model.contains(source);
        const bool source_polysemous = source_known && model.is_polysemous(source);
        const std::vector<std::string> ordered(lemmas.begin(), lemmas.end());
        for (std::size_t i = 0; i < ordered.size(); ++i) {
            for (std::size_t j = i + 1; j < ordered.size(); ++j) {
                ++audit.pair_instances;
                const WordKeyView f1(target, ordered[i], source.pos);
                const WordKeyView f2(target, ordered[j], source.pos);
                if (!model.contains(f1) || !model.contains(f2)) {
                    ++audit.wsa_skipped_oov;
                } else if (model.are_synonyms(f1, f2)) {
                    ++audit.wsa_satisfied;
                } else {
                    ++audit.wsa_violated;
                }
                if (!source_known) {
                    ++audit.wpa_skipped_oov;
                } else if (source_polysemous) {
                    ++audit.wpa_satisfied;
                } else {
                    ++audit.wpa_violated;
                }
            }
        }
    }
    return audit;
}

json to_json(const WeakAssumptionAudit& audit) {
    return json{{"words_with_multiple_alignments", audit.words_with_multiple_alignments},
                {"pair_instances", audit.pair_instances},
                {"wsa",
                 {{"satisfied", audit.wsa_satisfied},
                  {"violated", audit.wsa_violated},
                  {"skipped_oov", audit.wsa_skipped_oov}}},
                {"wpa",
                 {{"satisfied", audit.wpa_satisfied},
                  {"violated", audit.wpa_violated},
                  {"skipped_oov", audit.wpa_skipped_oov}}}};
}

}  // namespace mwn
