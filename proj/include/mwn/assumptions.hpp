#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mwn/core.hpp"

namespace mwn {

// An ordered source/target language pair. The two must differ.
struct Direction {
    LanguageCode source;
    LanguageCode target;

    static Direction make(LanguageCode source, LanguageCode target);
    static Direction make(std::string_view source, std::string_view target);

    auto operator<=>(const Direction&) const = default;
};

// Truth values of the translation and sense assumptions for one word under
// one direction. Writing S(e) for the word's senses, T(s) for a sense's
// target-language lemmas, T(e) for their union, and C(e, f) for the senses
// the word shares with target word f:
//
//   ospt  no two senses translate alike: T(s1) and T(s2) disjoint
//   psa   every translation pins one sense: |C(e, f)| = 1 for all f
//   otps  every sense has at most one translation: |T(s)| <= 1
//   spa   no two translations share a sense: C(e, f1) and C(e, f2) disjoint
//   ssa   all translations name one common sense: |C(e, f1) u C(e, f2)| = 1
//   gsa   at most one sense is translatable at all
//   gpa   f -> C(e, f) is single-valued and injective
//   nolg  no sense is a lexical gap: T(s) nonempty for all s
//   ocpw  the word is monosemous: |S(e)| = 1
struct AssumptionFlags {
    bool ospt = false;
    bool psa = false;
    bool otps = false;
    bool spa = false;
    bool ssa = false;
    bool gsa = false;
    bool gpa = false;
    bool nolg = false;
    bool ocpw = false;

    bool operator==(const AssumptionFlags&) const = default;
};

struct AssumptionProfile {
    WordKey word;
    Direction direction;
    std::size_t sense_count = 0;        // |S(e)|
    std::size_t translation_count = 0;  // |T(e)|
    // Polysemous and translatable; aggregate reports cover eligible words.
    bool eligible = false;
    AssumptionFlags flags;
    // Target lemmas sharing two or more senses with the word, sorted.
    std::vector<std::string> parallel_polysemy_partners;
};

// Evaluates every assumption for one word by its own defining condition.
// Each flag is derived independently, so the equivalences that are supposed
// to hold between them stay falsifiable. Throws usage_error when the word's
// language is not the direction's source, validation_error when the word is
// out of vocabulary.
AssumptionProfile profile(const MultiWordnet& model, const Direction& direction,
                          const WordKeyView& word);

// Target lemmas f with |C(e, f)| >= 2: the word and f are polysemous in
// parallel, each covering the same multiple senses.
std::vector<std::string> parallel_polysemy(const MultiWordnet& model, const Direction& direction,
                                           const WordKeyView& word);

// Model-level property: no synset carries two words of the language.
bool one_word_per_concept(const MultiWordnet& model, std::string_view language);
std::vector<std::string> one_word_per_concept_violations(const MultiWordnet& model,
                                                         std::string_view language);

// Model-level property: every synset lexicalized in `covered` is also
// lexicalized in `by`, so `by` has no gap anywhere `covered` has a word.
bool gap_covered(const MultiWordnet& model, std::string_view covered, std::string_view by);
std::vector<std::string> gap_coverage_violations(const MultiWordnet& model,
                                                 std::string_view covered, std::string_view by);

}  // namespace mwn
