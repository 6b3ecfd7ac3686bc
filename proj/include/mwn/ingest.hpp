#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mwn/core.hpp"

namespace mwn {

// One source-language token of a word-aligned bitext. The target language is
// per token so mixed corpora can be annotated in a single pass; when absent it
// defaults to the run direction's target.
struct AlignedToken {
    std::string sentence_id;
    std::uint32_t token_index = 0;
    WordKey source;
    std::string target_lemma;
    std::optional<LanguageCode> target_language;
    std::optional<std::string> gold_synset_id;
};

// Synset id to cluster label. Synsets sharing a label count as one
// coarse-grained sense during homonym-level annotation.
class ClusterMap {
public:
    ClusterMap() = default;
    static ClusterMap build(std::vector<std::pair<std::string, std::string>> entries);

    const std::string* label(std::string_view synset_id) const noexcept;
    std::size_t size() const noexcept { return entries_.size(); }
    const std::map<std::string, std::string, std::less<>>& entries() const noexcept {
        return entries_;
    }

private:
    std::map<std::string, std::string, std::less<>> entries_;
};

struct LanguageStats {
    std::uint64_t word_count = 0;
    std::uint64_t monosemous_words = 0;
    std::uint64_t polysemous_words = 0;
    std::uint64_t synsets_with_language = 0;
    std::uint64_t single_word_synsets = 0;  // exactly one word of the language
};

struct LexiconStats {
    std::uint64_t synset_count = 0;
    std::map<std::string, LanguageStats> by_language;
};

// Line-oriented JSON input, one synset per line:
//   {"id":...,"pos":...,"gloss"?:...,"words":[{"lang":...,"lemma":...},...]}
// Strict: rejects byte order marks, carriage returns, blank lines, unknown
// fields, and anything WordKey::make or MultiWordnet::build rejects. Errors
// carry 1-based line numbers.
MultiWordnet parse_multiwordnet(std::istream& in);

// Canonical form: lines sorted by synset id, keys in the order id, pos,
// gloss, words; words sorted by (lang, lemma); compact separators; raw
// UTF-8; "\n" line endings. Serializing a parse of canonical bytes
// reproduces them exactly.
void serialize_multiwordnet(const MultiWordnet& model, std::ostream& out);
std::string serialize_multiwordnet(const MultiWordnet& model);

// Line-oriented JSON input, one aligned token per line:
//   {"sent":...,"tok":...,"lang":...,"lemma":...,"pos":...,
//    "tgt_lemma":...,"tgt_lang"?:...,"gold"?:...}
// Rejects duplicate (sent, tok) pairs; same strictness as above.
std::vector<AlignedToken> parse_bitext(std::istream& in);

// Tab-separated input: synset id, cluster label. One pair per line.
ClusterMap parse_cluster_map(std::istream& in);

LexiconStats lexicon_stats(const MultiWordnet& model);

}  // namespace mwn
