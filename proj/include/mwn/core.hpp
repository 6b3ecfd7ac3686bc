#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mwn/errors.hpp"

namespace mwn {

// Part of speech. Multi-synsets are homogeneous in it, so a word key carries
// the same value as every synset it belongs to.
enum class Pos : unsigned char { noun, verb, adjective, adverb };

char pos_to_char(Pos pos) noexcept;                       // n v a r
std::optional<Pos> pos_from_char(char c) noexcept;
Pos parse_pos(std::string_view text);                     // "n"/"noun"/... ; throws validation_error

struct LanguageCode {
    std::string code;  // lowercase, 2 or 3 letters

    static bool valid(std::string_view code) noexcept;
    static LanguageCode parse(std::string_view code);     // throws validation_error

    auto operator<=>(const LanguageCode&) const = default;
};

// NFC-normalizes a lemma and encodes ASCII spaces as underscores.
// Rejects empty lemmas, remaining ASCII whitespace, and invalid UTF-8.
std::string normalize_lemma(std::string_view raw);

// Identity of a lexical item: language, normalized lemma, part of speech.
struct WordKey {
    LanguageCode language;
    std::string lemma;
    Pos pos = Pos::noun;

    static WordKey make(LanguageCode language, std::string_view raw_lemma, Pos pos);

    auto operator<=>(const WordKey&) const = default;
};

// Non-owning key for heterogeneous index lookups.
struct WordKeyView {
    std::string_view language;
    std::string_view lemma;
    Pos pos = Pos::noun;

    WordKeyView() = default;
    WordKeyView(std::string_view language, std::string_view lemma, Pos pos)
        : language(language), lemma(lemma), pos(pos) {}
    WordKeyView(const WordKey& key)  // NOLINT: implicit by design
        : language(key.language.code), lemma(key.lemma), pos(key.pos) {}
};

struct WordKeyHash {
    using is_transparent = void;
    std::size_t operator()(const WordKeyView& key) const noexcept;
    std::size_t operator()(const WordKey& key) const noexcept { return (*this)(WordKeyView(key)); }
};

struct WordKeyEqual {
    using is_transparent = void;
    bool operator()(const WordKeyView& a, const WordKeyView& b) const noexcept {
        return a.pos == b.pos && a.language == b.language && a.lemma == b.lemma;
    }
    bool operator()(const WordKey& a, const WordKey& b) const noexcept {
        return (*this)(WordKeyView(a), WordKeyView(b));
    }
    bool operator()(const WordKey& a, const WordKeyView& b) const noexcept {
        return (*this)(WordKeyView(a), b);
    }
    bool operator()(const WordKeyView& a, const WordKey& b) const noexcept {
        return (*this)(a, WordKeyView(b));
    }
};

// One lexicalized concept. A language with no member word has a lexical gap
// for this concept.
struct MultiSynset {
    std::string id;
    Pos pos = Pos::noun;
    std::optional<std::string> gloss;
    std::vector<WordKey> words;  // sorted by (language, lemma), no duplicates

    // Contiguous run of member words of one language.
    std::span<const WordKey> words_in(std::string_view language) const noexcept;
    bool contains(const WordKeyView& key) const noexcept;
};

struct SenseRef {
    WordKey word;
    std::string synset_id;

    auto operator<=>(const SenseRef&) const = default;
};

// Immutable, fully indexed collection of multi-synsets. All accessors are
// read-only and safe to call concurrently; all returned sequences are in
// lexicographic order, so repeated runs are byte-reproducible.
class MultiWordnet {
public:
    MultiWordnet() = default;

    // Validates and indexes. Throws validation_error on duplicate synset ids,
    // duplicate member words, synset/word pos mismatches, empty word sets,
    // or malformed language codes and lemmas.
    static MultiWordnet build(std::vector<MultiSynset> synsets);

    // Assembles without validation or index reconstruction. Exists so the
    // verification harness can manufacture broken instances as negative
    // controls; never use it on data meant to be trusted.
    static MultiWordnet assemble_unchecked(
        std::vector<MultiSynset> synsets,
        std::unordered_map<WordKey, std::vector<std::uint32_t>, WordKeyHash, WordKeyEqual> index,
        std::vector<LanguageCode> languages);

    std::size_t size() const noexcept { return synsets_.size(); }
    bool empty() const noexcept { return synsets_.empty(); }
    std::span<const MultiSynset> synsets() const noexcept { return synsets_; }
    std::span<const LanguageCode> languages() const noexcept { return languages_; }
    bool has_language(std::string_view code) const noexcept;

    const MultiSynset* find(std::string_view synset_id) const noexcept;
    const MultiSynset& at(std::string_view synset_id) const;  // throws validation_error
    const MultiSynset& synset(std::uint32_t index) const noexcept { return synsets_[index]; }

    bool contains(const WordKeyView& word) const noexcept;

    // Positions (into synsets()) of the synsets containing the word, in id
    // order; empty when the word is out of vocabulary.
    std::span<const std::uint32_t> sense_indices(const WordKeyView& word) const noexcept;

    // S(w): ids of the synsets containing the word.
    std::vector<std::string> synsets_of(const WordKeyView& word) const;

    bool is_polysemous(const WordKeyView& word) const;  // throws validation_error when OOV
    bool is_monosemous(const WordKeyView& word) const;  // likewise

    // Same-language only; throws usage_error on a cross-language pair.
    bool are_synonyms(const WordKeyView& a, const WordKeyView& b) const;
    bool are_absolute_synonyms(const WordKeyView& a, const WordKeyView& b) const;

    // T_L(s): lemmas of the synset's words in the target language; an empty
    // result signals a lexical gap. Throws validation_error on unknown ids.
    std::vector<std::string> translations_of_sense(std::string_view synset_id,
                                                   std::string_view language) const;

    // Union of translations_of_sense over S(w); empty when out of vocabulary.
    std::vector<std::string> translations_of_word(const WordKeyView& word,
                                                  std::string_view language) const;

    // C(e, f): ids of synsets containing both words. Symmetric. Throws
    // usage_error on a same-language pair.
    std::vector<std::string> shared_synsets(const WordKeyView& a, const WordKeyView& b) const;
    std::vector<std::uint32_t> shared_sense_indices(const WordKeyView& a,
                                                    const WordKeyView& b) const;

    // Distinct word keys of one language, sorted.
    std::vector<WordKey> vocabulary(std::string_view language) const;

    using Index =
        std::unordered_map<WordKey, std::vector<std::uint32_t>, WordKeyHash, WordKeyEqual>;
    const Index& index() const noexcept { return index_; }

private:
    std::vector<MultiSynset> synsets_;  // sorted by id
    std::unordered_map<std::string, std::uint32_t> by_id_;
    Index index_;
    std::vector<LanguageCode> languages_;  // sorted
};

}  // namespace mwn
