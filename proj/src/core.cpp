#include "mwn/core.hpp"

#include <algorithm>
#include <unicode/bytestream.h>
#include <unicode/normalizer2.h>
#include <unicode/stringpiece.h>
#include <unicode/utypes.h>
#include <utility>

namespace mwn {

namespace {

const icu::Normalizer2& nfc() {
    static const icu::Normalizer2* instance = [] {
        UErrorCode status = U_ZERO_ERROR;
        const icu::Normalizer2* normalizer = icu::Normalizer2::getNFCInstance(status);
        if (U_FAILURE(status) || normalizer == nullptr) {
            throw error("icu-unavailable", "NFC normalizer could not be initialized");
        }
        return normalizer;
    }();
    return *instance;
}

bool valid_utf8(std::string_view text) noexcept {
    const auto* p = reinterpret_cast<const unsigned char*>(text.data());
    const auto* end = p + text.size();
    while (p < end) {
        const unsigned char lead = *p;
        if (lead < 0x80) {
            ++p;
            continue;
        }
        int length = 0;
        std::uint32_t cp = 0;
        if ((lead & 0xe0) == 0xc0) {
            length = 2;
            cp = lead & 0x1fu;
        } else if ((lead & 0xf0) == 0xe0) {
            length = 3;
            cp = lead & 0x0fu;
        } else if ((lead & 0xf8) == 0xf0) {
            length = 4;
            cp = lead & 0x07u;
        } else {
            return false;
        }
        if (end - p < length) {
            return false;
        }
        for (int i = 1; i < length; ++i) {
            const unsigned char trail = p[i];
            if ((trail & 0xc0) != 0x80) {
                return false;
            }
            cp = (cp << 6) | (trail & 0x3fu);
        }
        // Overlong encodings, surrogates, and out-of-range code points are
        // not UTF-8 even when the byte pattern decodes.
        if ((length == 2 && cp < 0x80) || (length == 3 && cp < 0x800) ||
            (length == 4 && cp < 0x10000) || (cp >= 0xd800 && cp <= 0xdfff) || cp > 0x10ffff) {
            return false;
        }
        p += length;
    }
    return true;
}

bool ascii_whitespace(char c) noexcept {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

std::size_t mix_hash(std::size_t seed, std::size_t value) noexcept {
    return seed ^ (value + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2));
}

}  // namespace

char pos_to_char(Pos pos) noexcept {
    switch (pos) {
        case Pos::noun: return 'n';
        case Pos::verb: return 'v';
        case Pos::adjective: return 'a';
        case Pos::adverb: return 'r';
    }
    return '?';
}

std::optional<Pos> pos_from_char(char c) noexcept {
    switch (c) {
        case 'n': return Pos::noun;
        case 'v': return Pos::verb;
        case 'a': return Pos::adjective;
        case 'r': return Pos::adverb;
        default: return std::nullopt;
    }
}

Pos parse_pos(std::string_view text) {
    if (text.size() == 1) {
        if (auto pos = pos_from_char(text[0])) {
            return *pos;
        }
    }
    if (text == "noun") return Pos::noun;
    if (text == "verb") return Pos::verb;
    if (text == "adjective") return Pos::adjective;
    if (text == "adverb") return Pos::adverb;
    throw validation_error("invalid-pos", "unrecognized part of speech \"" + std::string(text) +
                                              "\" (expected one of n, v, a, r)");
}

bool LanguageCode::valid(std::string_view code) noexcept {
    if (code.size() < 2 || code.size() > 3) {
        return false;
    }
    return std::all_of(code.begin(), code.end(), [](char c) { return c >= 'a' && c <= 'z'; });
}

LanguageCode LanguageCode::parse(std::string_view code) {
    if (!valid(code)) {
        throw validation_error("invalid-language-code",
                               "language code \"" + std::string(code) +
                                   "\" is not 2 or 3 lowercase ASCII letters");
    }
    return LanguageCode{std::string(code)};
}

std::string normalize_lemma(std::string_view raw) {
    if (raw.empty()) {
        throw validation_error("empty-lemma", "lemma is empty");
    }
    if (!valid_utf8(raw)) {
        throw validation_error("invalid-utf8", "lemma is not valid UTF-8");
    }
    std::string spaced(raw);
    for (char& c : spaced) {
        if (c == ' ') {
            c = '_';
        } else if (ascii_whitespace(c)) {
            throw validation_error("lemma-whitespace",
                                   "lemma \"" + std::string(raw) +
                                       "\" contains whitespace other than spaces");
        }
    }
    UErrorCode status = U_ZERO_ERROR;
    std::string normalized;
    icu::StringByteSink<std::string> sink(&normalized);
    nfc().normalizeUTF8(0, icu::StringPiece(spaced.data(), static_cast<int32_t>(spaced.size())),
                        sink, nullptr, status);
    if (U_FAILURE(status)) {
        throw validation_error("invalid-utf8", "lemma could not be NFC-normalized");
    }
    if (normalized.empty()) {
        throw validation_error("empty-lemma", "lemma is empty after normalization");
    }
    return normalized;
}

WordKey WordKey::make(LanguageCode language, std::string_view raw_lemma, Pos pos) {
    return WordKey{std::move(language), normalize_lemma(raw_lemma), pos};
}

std::size_t WordKeyHash::operator()(const WordKeyView& key) const noexcept {
    const std::hash<std::string_view> h;
    std::size_t seed = h(key.language);
    seed = mix_hash(seed, h(key.lemma));
    return mix_hash(seed, static_cast<std::size_t>(key.pos));
}

std::span<const WordKey> MultiSynset::words_in(std::string_view language) const noexcept {
    const auto first = std::partition_point(
        words.begin(), words.end(),
        [&](const WordKey& w) { return std::string_view(w.language.code) < language; });
    const auto last = std::partition_point(first, words.end(), [&](const WordKey& w) {
        return std::string_view(w.language.code) == language;
    });
    return {std::to_address(first), static_cast<std::size_t>(last - first)};
}

bool MultiSynset::contains(const WordKeyView& key) const noexcept {
    const auto run = words_in(key.language);
    const auto it = std::partition_point(run.begin(), run.end(), [&](const WordKey& w) {
        return std::string_view(w.lemma) < key.lemma;
    });
    return it != run.end() && it->lemma == key.lemma && it->pos == key.pos;
}

MultiWordnet MultiWordnet::build(std::vector<MultiSynset> synsets) {
    MultiWordnet model;
    std::sort(synsets.begin(), synsets.end(),
              [](const MultiSynset& a, const MultiSynset& b) { return a.id < b.id; });

    std::vector<LanguageCode> languages;
    for (MultiSynset& synset : synsets) {
        if (synset.id.empty() || !valid_utf8(synset.id) ||
            std::any_of(synset.id.begin(), synset.id.end(), ascii_whitespace)) {
            throw validation_error("invalid-synset-id",
                                   "synset id \"" + synset.id +
                                       "\" is empty or contains whitespace");
        }
        if (synset.words.empty()) {
            throw validation_error("empty-synset",
                                   "synset " + synset.id + " has no member words");
        }
        if (synset.gloss && !valid_utf8(*synset.gloss)) {
            throw validation_error("invalid-utf8",
                                   "gloss of synset " + synset.id + " is not valid UTF-8");
        }
        for (const WordKey& word : synset.words) {
            if (!LanguageCode::valid(word.language.code)) {
                throw validation_error("invalid-language-code",
                                       "synset " + synset.id + " word has language code \"" +
                                           word.language.code + "\"");
            }
            if (word.lemma.empty() ||
                std::any_of(word.lemma.begin(), word.lemma.end(), ascii_whitespace) ||
                !valid_utf8(word.lemma)) {
                throw validation_error("invalid-lemma", "synset " + synset.id +
                                                            " word \"" + word.lemma +
                                                            "\" is empty, non-UTF-8, or "
                                                            "contains whitespace");
            }
            UErrorCode status = U_ZERO_ERROR;
            if (!nfc().isNormalizedUTF8(
                    icu::StringPiece(word.lemma.data(), static_cast<int32_t>(word.lemma.size())),
                    status) ||
                U_FAILURE(status)) {
                throw validation_error("lemma-not-normalized",
                                       "synset " + synset.id + " word \"" + word.lemma +
                                           "\" is not NFC-normalized");
            }
            if (word.pos != synset.pos) {
                throw validation_error("pos-mismatch",
                                       "synset " + synset.id + " word \"" + word.lemma +
                                           "\" disagrees with the synset part of speech");
            }
            languages.push_back(word.language);
        }
        std::sort(synset.words.begin(), synset.words.end());
        const auto dup = std::adjacent_find(synset.words.begin(), synset.words.end());
        if (dup != synset.words.end()) {
            throw validation_error("duplicate-word", "synset " + synset.id +
                                                         " lists word \"" + dup->lemma +
                                                         "\" (" + dup->language.code +
                                                         ") more than once");
        }
    }

    const auto dup_id = std::adjacent_find(
        synsets.begin(), synsets.end(),
        [](const MultiSynset& a, const MultiSynset& b) { return a.id == b.id; });
    if (dup_id != synsets.end()) {
        throw validation_error("duplicate-synset-id",
                               "synset id " + dup_id->id + " occurs more than once");
    }

    std::sort(languages.begin(), languages.end());
    languages.erase(std::unique(languages.begin(), languages.end()), languages.end());

    model.synsets_ = std::move(synsets);
    model.languages_ = std::move(languages);
    model.by_id_.reserve(model.synsets_.size());
    for (std::uint32_t i = 0; i < model.synsets_.size(); ++i) {
        const MultiSynset& synset = model.synsets_[i];
        model.by_id_.emplace(synset.id, i);
        for (const WordKey& word : synset.words) {
            // Synsets are visited in ascending id order, so every posting
            // list comes out sorted without a second pass.
            model.index_[word].push_back(i);
        }
    }
    return model;
}

MultiWordnet MultiWordnet::assemble_unchecked(std::vector<MultiSynset> synsets, Index index,
                                              std::vector<LanguageCode> languages) {
    MultiWordnet model;
    model.synsets_ = std::move(synsets);
    model.index_ = std::move(index);
    model.languages_ = std::move(languages);
    model.by_id_.reserve(model.synsets_.size());
    for (std::uint32_t i = 0; i < model.synsets_.size(); ++i) {
        model.by_id_.emplace(model.synsets_[i].id, i);
    }
    return model;
}

bool MultiWordnet::has_language(std::string_view code) const noexcept {
    return std::any_of(languages_.begin(), languages_.end(),
                       [&](const LanguageCode& language) { return language.code == code; });
}

const MultiSynset* MultiWordnet::find(std::string_view synset_id) const noexcept {
    // by_id_ is keyed by std::string; avoid a temporary for the common case
    // of repeated lookups by probing with find on a materialized key only.
    const auto it = by_id_.find(std::string(synset_id));
    return it == by_id_.end() ? nullptr : &synsets_[it->second];
}

const MultiSynset& MultiWordnet::at(std::string_view synset_id) const {
    const MultiSynset* synset = find(synset_id);
    if (synset == nullptr) {
        throw validation_error("unknown-synset",
                               "no synset with id \"" + std::string(synset_id) + "\"");
    }
    return *synset;
}

bool MultiWordnet::contains(const WordKeyView& word) const noexcept {
    return index_.find(word) != index_.end();
}

std::span<const std::uint32_t> MultiWordnet::sense_indices(const WordKeyView& word) const noexcept {
    const auto it = index_.find(word);
    if (it == index_.end()) {
        return {};
    }
    return it->second;
}

std::vector<std::string> MultiWordnet::synsets_of(const WordKeyView& word) const {
    std::vector<std::string> ids;
    for (const std::uint32_t i : sense_indices(word)) {
        ids.push_back(synsets_[i].id);
    }
    return ids;
}

bool MultiWordnet::is_polysemous(const WordKeyView& word) const {
    const auto senses = sense_indices(word);
    if (senses.empty()) {
        throw validation_error("unknown-word", "word \"" + std::string(word.lemma) + "\" (" +
                                                   std::string(word.language) +
                                                   ") is not in the model");
    }
    return senses.size() > 1;
}

bool MultiWordnet::is_monosemous(const WordKeyView& word) const {
    return !is_polysemous(word);
}

bool MultiWordnet::are_synonyms(const WordKeyView& a, const WordKeyView& b) const {
    if (a.language != b.language) {
        throw usage_error("cross-language-pair",
                          "synonymy is defined within one language; got " +
                              std::string(a.language) + " and " + std::string(b.language));
    }
    const auto sa = sense_indices(a);
    const auto sb = sense_indices(b);
    std::vector<std::uint32_t> common;
    std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(common));
    return !common.empty();
}

bool MultiWordnet::are_absolute_synonyms(const WordKeyView& a, const WordKeyView& b) const {
    if (a.language != b.language) {
        throw usage_error("cross-language-pair",
                          "synonymy is defined within one language; got " +
                              std::string(a.language) + " and " + std::string(b.language));
    }
    const auto sa = sense_indices(a);
    const auto sb = sense_indices(b);
    return !sa.empty() && sa.size() == sb.size() && std::equal(sa.begin(), sa.end(), sb.begin());
}

std::vector<std::string> MultiWordnet::translations_of_sense(std::string_view synset_id,
                                                             std::string_view language) const {
    const MultiSynset& synset = at(synset_id);
    std::vector<std::string> lemmas;
    for (const WordKey& word : synset.words_in(language)) {
        lemmas.push_back(word.lemma);
    }
    return lemmas;
}

std::vector<std::string> MultiWordnet::translations_of_word(const WordKeyView& word,
                                                            std::string_view language) const {
    std::vector<std::string> lemmas;
    for (const std::uint32_t i : sense_indices(word)) {
        for (const WordKey& member : synsets_[i].words_in(language)) {
            lemmas.push_back(member.lemma);
        }
    }
    std::sort(lemmas.begin(), lemmas.end());
    lemmas.erase(std::unique(lemmas.begin(), lemmas.end()), lemmas.end());
    return lemmas;
}

std::vector<std::uint32_t> MultiWordnet::shared_sense_indices(const WordKeyView& a,
                                                              const WordKeyView& b) const {
    if (a.language == b.language) {
        throw usage_error("same-language-pair",
                          "shared senses are defined across two languages; both words are " +
                              std::string(a.language));
    }
    const auto sa = sense_indices(a);
    const auto sb = sense_indices(b);
    std::vector<std::uint32_t> common;
    std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(common));
    return common;
}

std::vector<std::string> MultiWordnet::shared_synsets(const WordKeyView& a,
                                                      const WordKeyView& b) const {
    std::vector<std::string> ids;
    for (const std::uint32_t i : shared_sense_indices(a, b)) {
        ids.push_back(synsets_[i].id);
    }
    return ids;
}

std::vector<WordKey> MultiWordnet::vocabulary(std::string_view language) const {
    std::vector<WordKey> words;
    for (const auto& [word, senses] : index_) {
        if (word.language.code == language) {
            words.push_back(word);
        }
    }
    std::sort(words.begin(), words.end());
    return words;
}

}  // namespace mwn
