#include "mwn/assumptions.hpp"

#include <algorithm>
#include <utility>

namespace mwn {

namespace {

bool disjoint_sorted(std::span<const std::string_view> a, std::span<const std::string_view> b) {
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) {
            ++ia;
        } else if (*ib < *ia) {
            ++ib;
        } else {
            return false;
        }
    }
    return true;
}

bool disjoint_sorted(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) {
            ++ia;
        } else if (*ib < *ia) {
            ++ib;
        } else {
            return false;
        }
    }
    return true;
}

std::size_t union_size_sorted(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
    std::size_t count = 0;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) {
            ++ia;
        } else if (*ib < *ia) {
            ++ib;
        } else {
            ++ia;
            ++ib;
        }
        ++count;
    }
    return count + (a.end() - ia) + (b.end() - ib);
}

}  // namespace

Direction Direction::make(LanguageCode source, LanguageCode target) {
    if (source == target) {
        throw usage_error("identical-languages",
                          "a direction needs two distinct languages; got " + source.code +
                              " twice");
    }
    return Direction{std::move(source), std::move(target)};
}

Direction Direction::make(std::string_view source, std::string_view target) {
    return make(LanguageCode::parse(source), LanguageCode::parse(target));
}

AssumptionProfile profile(const MultiWordnet& model, const Direction& direction,
                          const WordKeyView& word) {
    if (word.language != direction.source.code) {
        throw usage_error("direction-mismatch", "word language " + std::string(word.language) +
                                                    " is not the direction source " +
                                                    direction.source.code);
    }
    const auto senses = model.sense_indices(word);
    if (senses.empty()) {
        throw validation_error("unknown-word", "word \"" + std::string(word.lemma) + "\" (" +
                                                   std::string(word.language) +
                                                   ") is not in the model");
    }

    AssumptionProfile result;
    result.word = WordKey{LanguageCode{std::string(word.language)}, std::string(word.lemma),
                          word.pos};
    result.direction = direction;
    result.sense_count = senses.size();

    // T(s) per sense, as sorted lemma views into the model.
    std::vector<std::vector<std::string_view>> per_sense;
    per_sense.reserve(senses.size());
    for (const std::uint32_t s : senses) {
        std::vector<std::string_view> lemmas;
        for (const WordKey& member : model.synset(s).words_in(direction.target.code)) {
            lemmas.push_back(member.lemma);
        }
        per_sense.push_back(std::move(lemmas));
    }

    // T(e): sorted union of the per-sense sets.
    std::vector<std::string_view> translations;
    for (const auto& lemmas : per_sense) {
        translations.insert(translations.end(), lemmas.begin(), lemmas.end());
    }
    std::sort(translations.begin(), translations.end());
    translations.erase(std::unique(translations.begin(), translations.end()),
                       translations.end());
    result.translation_count = translations.size();
    result.eligible = result.sense_count >= 2 && !translations.empty();

    // C(e, f) for every translation, pulled through the sense index rather
    // than from per_sense so the two derivations cross-check each other.
    std::vector<std::vector<std::uint32_t>> shared;
    shared.reserve(translations.size());
    for (const std::string_view f : translations) {
        shared.push_back(
            model.shared_sense_indices(word, WordKeyView(direction.target.code, f, word.pos)));
    }

    AssumptionFlags& flags = result.flags;

    flags.ospt = true;
    for (std::size_t i = 0; i < per_sense.size() && flags.ospt; ++i) {
        for (std::size_t j = i + 1; j < per_sense.size(); ++j) {
            if (!disjoint_sorted(per_sense[i], per_sense[j])) {
                flags.ospt = false;
                break;
            }
        }
    }

    flags.psa = std::all_of(shared.begin(), shared.end(),
                            [](const auto& c) { return c.size() == 1; });

    flags.otps = std::all_of(per_sense.begin(), per_sense.end(),
                             [](const auto& lemmas) { return lemmas.size() <= 1; });

    flags.spa = true;
    flags.ssa = true;
    for (std::size_t i = 0; i < shared.size() && (flags.spa || flags.ssa); ++i) {
        for (std::size_t j = i + 1; j < shared.size(); ++j) {
            if (flags.spa && !disjoint_sorted(shared[i], shared[j])) {
                flags.spa = false;
            }
            if (flags.ssa && union_size_sorted(shared[i], shared[j]) != 1) {
                flags.ssa = false;
            }
            if (!flags.spa && !flags.ssa) {
                break;
            }
        }
    }

    flags.gsa = std::count_if(per_sense.begin(), per_sense.end(), [](const auto& lemmas) {
                    return !lemmas.empty();
                }) <= 1;

    bool single_valued = std::all_of(shared.begin(), shared.end(),
                                     [](const auto& c) { return c.size() == 1; });
    bool injective = true;
    for (std::size_t i = 0; i < shared.size() && injective; ++i) {
        for (std::size_t j = i + 1; j < shared.size(); ++j) {
            if (shared[i] == shared[j]) {
                injective = false;
                break;
            }
        }
    }
    flags.gpa = single_valued && injective;

    flags.nolg = std::all_of(per_sense.begin(), per_sense.end(),
                             [](const auto& lemmas) { return !lemmas.empty(); });

    flags.ocpw = senses.size() == 1;

    for (std::size_t i = 0; i < translations.size(); ++i) {
        if (shared[i].size() >= 2) {
            result.parallel_polysemy_partners.emplace_back(translations[i]);
        }
    }
    return result;
}

std::vector<std::string> parallel_polysemy(const MultiWordnet& model, const Direction& direction,
                                           const WordKeyView& word) {
    return profile(model, direction, word).parallel_polysemy_partners;
}

std::vector<std::string> one_word_per_concept_violations(const MultiWordnet& model,
                                                         std::string_view language) {
    std::vector<std::string> ids;
    for (const MultiSynset& synset : model.synsets()) {
        if (synset.words_in(language).size() >= 2) {
            ids.push_back(synset.id);
        }
    }
    return ids;
}

bool one_word_per_concept(const MultiWordnet& model, std::string_view language) {
    return std::all_of(model.synsets().begin(), model.synsets().end(),
                       [&](const MultiSynset& s) { return s.words_in(language).size() <= 1; });
}

std::vector<std::string> gap_coverage_violations(const MultiWordnet& model,
                                                 std::string_view covered, std::string_view by) {
    std::vector<std::string> ids;
    for (const MultiSynset& synset : model.synsets()) {
        if (!synset.words_in(covered).empty() && synset.words_in(by).empty()) {
            ids.push_back(synset.id);
        }
    }
    return ids;
}

bool gap_covered(const MultiWordnet& model, std::string_view covered, std::string_view by) {
    return std::all_of(model.synsets().begin(), model.synsets().end(), [&](const MultiSynset& s) {
        return s.words_in(covered).empty() || !s.words_in(by).empty();
    });
}

}  // namespace mwn
