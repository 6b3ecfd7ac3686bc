#include "mwn/theorem_lab.hpp"

#include <algorithm>
#include <array>
#include <iterator>
#include <numeric>
#include <tuple>
#include <utility>

#include "mwn/ingest.hpp"
#include "mwn/reports.hpp"

namespace mwn::lab {

namespace {

using nlohmann::json;

constexpr std::array<std::pair<const char*, bool AssumptionFlags::*>, 9> kFlags = {{
    {"ospt", &AssumptionFlags::ospt},
    {"psa", &AssumptionFlags::psa},
    {"otps", &AssumptionFlags::otps},
    {"spa", &AssumptionFlags::spa},
    {"ssa", &AssumptionFlags::ssa},
    {"gsa", &AssumptionFlags::gsa},
    {"gpa", &AssumptionFlags::gpa},
    {"nolg", &AssumptionFlags::nolg},
    {"ocpw", &AssumptionFlags::ocpw},
}};

std::string word_label(const WordKey& word) {
    return word.lemma + ':' + pos_to_char(word.pos) + " (" + word.language.code + ")";
}

struct DirectionAudit {
    std::vector<Violation> violations;
    std::uint64_t words = 0;
    std::uint64_t eligible = 0;
    std::array<std::uint64_t, 9> satisfied_all{};
    std::array<std::uint64_t, 9> satisfied_eligible{};
};

// Profiles every source-language word once, checking the per-word theorems
// against the independently derived flags, then the direction-level ones.
DirectionAudit audit_direction(const MultiWordnet& model, const Direction& d) {
    DirectionAudit audit;
    if (!model.has_language(d.source.code) || !model.has_language(d.target.code)) {
        return audit;
    }

    bool all_ospt = true;
    bool all_otps = true;
    const WordKey* first_without_otps = nullptr;
    const std::vector<WordKey> vocabulary = model.vocabulary(d.source.code);
    for (const WordKey& word : vocabulary) {
        const AssumptionProfile p = profile(model, d, word);
        const AssumptionFlags& f = p.flags;
        ++audit.words;
        for (std::size_t k = 0; k < kFlags.size(); ++k) {
            if (f.*kFlags[k].second) {
                ++audit.satisfied_all[k];
                if (p.eligible) {
                    ++audit.satisfied_eligible[k];
                }
            }
        }
        if (p.eligible) {
            ++audit.eligible;
        }
        all_ospt = all_ospt && f.ospt;
        all_otps = all_otps && f.otps;
        if (!f.otps && first_without_otps == nullptr) {
            first_without_otps = &word;
        }

        const auto fail = [&](const char* check, std::string details) {
            audit.violations.push_back(Violation{check, word_label(word), d.source.code,
                                                 d.target.code, std::move(details)});
        };
        if (f.ospt != f.psa) {
            fail("T1", "ospt and psa disagree");
        }
        if (f.otps != f.spa) {
            fail("T2", "otps and spa disagree");
        }
        if (f.gsa != (f.ssa && f.psa)) {
            fail("O1", "gsa differs from ssa and psa combined");
        }
        if (f.gpa != (f.spa && f.psa)) {
            fail("O2", "gpa differs from spa and psa combined");
        }
        if (f.ocpw && !f.gsa) {
            fail("O3", "monosemous word without gsa");
        }
        if (f.gsa && f.nolg && !f.ocpw) {
            fail("O4", "gsa and nolg on a polysemous word");
        }
        if ((f.ssa || f.spa) && p.translation_count >= 2) {
            const auto translations = model.translations_of_word(word, d.target.code);
            if (f.ssa) {
                for (std::size_t i = 0; i < translations.size(); ++i) {
                    for (std::size_t j = i + 1; j < translations.size(); ++j) {
                        if (!model.are_synonyms(
                                WordKeyView(d.target.code, translations[i], word.pos),
                                WordKeyView(d.target.code, translations[j], word.pos))) {
                            fail("S2W", "ssa holds but translations \"" + translations[i] +
                                            "\" and \"" + translations[j] +
                                            "\" are not synonyms");
                        }
                    }
                }
            }
            if (f.spa && !model.is_polysemous(word)) {
                fail("S2W", "spa with two or more translations on a monosemous word");
            }
        }
    }

    const bool owpc_target = one_word_per_concept(model, d.target.code);
    if (owpc_target && first_without_otps != nullptr) {
        audit.violations.push_back(Violation{
            "O5", word_label(*first_without_otps), d.source.code, d.target.code,
            "target language has one word per concept, yet this word lacks otps"});
    }
    if (!owpc_target && all_otps && gap_covered(model, d.target.code, d.source.code)) {
        const auto ids = one_word_per_concept_violations(model, d.target.code);
        audit.violations.push_back(Violation{
            "O6", ids.empty() ? std::string("?") : ids.front(), d.source.code, d.target.code,
            "all words have otps and target gaps are covered, yet a concept carries two "
            "target words"});
    }

    bool swapped_all_ospt = true;
    const Direction swapped{d.target, d.source};
    for (const WordKey& word : model.vocabulary(d.target.code)) {
        if (!profile(model, swapped, word).flags.ospt) {
            swapped_all_ospt = false;
            break;
        }
    }
    if (all_ospt != swapped_all_ospt) {
        audit.violations.push_back(Violation{
            "BIDIR", "all words", d.source.code, d.target.code,
            "universal ospt holds in one direction only"});
    }
    return audit;
}

void sort_violations(std::vector<Violation>& violations) {
    std::sort(violations.begin(), violations.end(), [](const Violation& a, const Violation& b) {
        return std::tie(a.check, a.witness, a.details) < std::tie(b.check, b.witness, b.details);
    });
}

}  // namespace

void GenParams::validate() const {
    if (languages.size() < 2) {
        throw usage_error("impossible-constraints", "generation needs at least two languages");
    }
    std::vector<LanguageCode> sorted = languages;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw usage_error("impossible-constraints", "languages must be distinct");
    }
    for (const LanguageCode& language : languages) {
        if (!LanguageCode::valid(language.code)) {
            throw usage_error("impossible-constraints",
                              "invalid language code \"" + language.code + "\"");
        }
        const auto it = lemma_pool_size.find(language.code);
        if (it == lemma_pool_size.end() || it->second == 0) {
            throw usage_error("impossible-constraints",
                              "language " + language.code + " needs a positive lemma pool");
        }
    }
    if (lemma_pool_size.size() != languages.size()) {
        throw usage_error("impossible-constraints",
                          "lemma_pool_size mentions a language that is not generated");
    }
    if (words_per_synset.max < words_per_synset.min) {
        throw usage_error("impossible-constraints", "word count range is inverted");
    }
    if (words_per_synset.zero_probability < 0.0 || words_per_synset.zero_probability > 1.0 ||
        reuse_bias < 0.0 || reuse_bias > 1.0) {
        throw usage_error("impossible-constraints", "probabilities must lie in [0, 1]");
    }
    if (synset_count > 0 &&
        (words_per_synset.max == 0 || words_per_synset.zero_probability >= 1.0)) {
        throw usage_error("impossible-constraints",
                          "every synset would be empty under these settings");
    }
}

GenParams GenParams::from_json(const json& object) {
    if (!object.is_object()) {
        throw validation_error("wrong-type", "generation parameters must be a JSON object");
    }
    for (const auto& [key, value] : object.items()) {
        static constexpr std::string_view allowed[] = {
            "seed", "synset_count", "languages", "lemma_pool_size", "words_per_synset",
            "reuse_bias"};
        if (std::find(std::begin(allowed), std::end(allowed), key) == std::end(allowed)) {
            throw validation_error("unknown-field",
                                   "unexpected generation parameter \"" + key + "\"");
        }
    }
    const auto require = [&](const json& o, const char* field) -> const json& {
        const auto it = o.find(field);
        if (it == o.end()) {
            throw validation_error("missing-field", "generation parameter \"" +
                                                        std::string(field) + "\" is missing");
        }
        return *it;
    };
    GenParams params;
    if (object.contains("seed")) {
        if (!object["seed"].is_number_unsigned()) {
            throw validation_error("wrong-type", "seed must be a non-negative integer");
        }
        params.seed = object["seed"].get<std::uint64_t>();
    }
    const json& count = require(object, "synset_count");
    if (!count.is_number_unsigned()) {
        throw validation_error("wrong-type", "synset_count must be a non-negative integer");
    }
    params.synset_count = count.get<std::uint32_t>();
    const json& languages = require(object, "languages");
    if (!languages.is_array()) {
        throw validation_error("wrong-type", "languages must be an array of codes");
    }
    for (const json& code : languages) {
        if (!code.is_string()) {
            throw validation_error("wrong-type", "languages must be an array of codes");
        }
        params.languages.push_back(LanguageCode::parse(code.get<std::string>()));
    }
    const json& pools = require(object, "lemma_pool_size");
    if (!pools.is_object()) {
        throw validation_error("wrong-type", "lemma_pool_size must map codes to sizes");
    }
    for (const auto& [code, size] : pools.items()) {
        if (!size.is_number_unsigned()) {
            throw validation_error("wrong-type", "lemma pool sizes must be positive integers");
        }
        params.lemma_pool_size.emplace(code, size.get<std::uint32_t>());
    }
    const json& spec = require(object, "words_per_synset");
    if (!spec.is_object()) {
        throw validation_error("wrong-type", "words_per_synset must be an object");
    }
    for (const auto& [key, value] : spec.items()) {
        static constexpr std::string_view allowed[] = {"min", "max", "zero_probability"};
        if (std::find(std::begin(allowed), std::end(allowed), key) == std::end(allowed)) {
            throw validation_error("unknown-field",
                                   "unexpected word count field \"" + key + "\"");
        }
    }
    const json& min = require(spec, "min");
    const json& max = require(spec, "max");
    const json& zero = require(spec, "zero_probability");
    if (!min.is_number_unsigned() || !max.is_number_unsigned() || !zero.is_number()) {
        throw validation_error("wrong-type", "words_per_synset fields have the wrong type");
    }
    params.words_per_synset.min = min.get<std::uint32_t>();
    params.words_per_synset.max = max.get<std::uint32_t>();
    params.words_per_synset.zero_probability = zero.get<double>();
    const json& reuse = require(object, "reuse_bias");
    if (!reuse.is_number()) {
        throw validation_error("wrong-type", "reuse_bias must be a number");
    }
    params.reuse_bias = reuse.get<double>();
    return params;
}

json GenParams::to_json() const {
    json pools = json::object();
    for (const auto& [code, size] : lemma_pool_size) {
        pools[code] = size;
    }
    json codes = json::array();
    for (const LanguageCode& language : languages) {
        codes.push_back(language.code);
    }
    return json{{"seed", seed},
                {"synset_count", synset_count},
                {"languages", codes},
                {"lemma_pool_size", pools},
                {"words_per_synset",
                 {{"min", words_per_synset.min},
                  {"max", words_per_synset.max},
                  {"zero_probability", words_per_synset.zero_probability}}},
                {"reuse_bias", reuse_bias}};
}

GenParams default_template() {
    GenParams params;
    params.synset_count = 200;
    params.languages = {LanguageCode{"en"}, LanguageCode{"fr"}, LanguageCode{"it"}};
    params.lemma_pool_size = {{"en", 150}, {"fr", 150}, {"it", 150}};
    params.words_per_synset = CountSpec{0, 3, 0.2};
    params.reuse_bias = 0.4;
    return params;
}

MultiWordnet generate(const GenParams& params) {
    params.validate();
    SplitMix64 rng(params.seed);

    int width = 1;
    for (std::uint64_t v = params.synset_count > 1 ? params.synset_count - 1 : 0; v >= 10;
         v /= 10) {
        ++width;
    }

    struct Pool {
        std::vector<std::uint32_t> unused;
        std::vector<std::uint32_t> used;
    };
    std::vector<Pool> pools(params.languages.size());
    for (std::size_t i = 0; i < params.languages.size(); ++i) {
        pools[i].unused.resize(params.lemma_pool_size.at(params.languages[i].code));
        std::iota(pools[i].unused.begin(), pools[i].unused.end(), 0u);
    }

    const CountSpec& spec = params.words_per_synset;
    std::vector<MultiSynset> synsets;
    synsets.reserve(params.synset_count);
    for (std::uint32_t index = 0; index < params.synset_count; ++index) {
        MultiSynset synset;
        synset.pos = Pos::noun;
        std::string digits = std::to_string(index);
        digits.insert(0, static_cast<std::size_t>(width) - digits.size(), '0');
        synset.id = "s" + digits;
        // An all-gaps draw sequence leaves no words; redraw until the synset
        // lexicalizes somewhere. validate() rules out the never-halting case.
        while (synset.words.empty()) {
            for (std::size_t li = 0; li < params.languages.size(); ++li) {
                const LanguageCode& language = params.languages[li];
                Pool& pool = pools[li];
                const std::uint32_t count =
                    rng.unit() < spec.zero_probability
                        ? 0
                        : spec.min + static_cast<std::uint32_t>(
                                         rng.below(spec.max - spec.min + 1ull));
                for (std::uint32_t k = 0; k < count; ++k) {
                    std::uint32_t lemma_index;
                    const bool reuse = rng.unit() < params.reuse_bias;
                    if (reuse && !pool.used.empty()) {
                        lemma_index = pool.used[rng.below(pool.used.size())];
                    } else if (!pool.unused.empty()) {
                        const std::size_t j = rng.below(pool.unused.size());
                        lemma_index = pool.unused[j];
                        pool.unused[j] = pool.unused.back();
                        pool.unused.pop_back();
                        pool.used.push_back(lemma_index);
                    } else {
                        lemma_index = pool.used[rng.below(pool.used.size())];
                    }
                    WordKey word{language, language.code + std::to_string(lemma_index),
                                 Pos::noun};
                    const bool present =
                        std::any_of(synset.words.begin(), synset.words.end(),
                                    [&](const WordKey& w) {
                                        return w.language == word.language &&
                                               w.lemma == word.lemma;
                                    });
                    if (!present) {
                        synset.words.push_back(std::move(word));
                    }
                }
            }
        }
        synsets.push_back(std::move(synset));
    }
    return MultiWordnet::build(std::move(synsets));
}

std::vector<Violation> verify_structure(const MultiWordnet& model) {
    std::vector<Violation> out;
    const auto fail = [&](std::string witness, std::string details) {
        out.push_back(Violation{"STRUCT", std::move(witness), "", "", std::move(details)});
    };
    const auto synsets = model.synsets();
    std::uint64_t member_count = 0;
    for (std::size_t i = 0; i < synsets.size(); ++i) {
        const MultiSynset& synset = synsets[i];
        if (i > 0 && !(synsets[i - 1].id < synset.id)) {
            fail(synset.id, "synset ids are not strictly increasing");
        }
        if (synset.words.empty()) {
            fail(synset.id, "synset has no words");
        }
        for (std::size_t w = 0; w < synset.words.size(); ++w) {
            const WordKey& word = synset.words[w];
            if (w > 0 && !(synset.words[w - 1] < word)) {
                fail(synset.id, "synset words are not strictly increasing");
            }
            if (word.pos != synset.pos) {
                fail(synset.id, "word \"" + word.lemma + "\" differs from the synset pos");
            }
            const auto senses = model.sense_indices(word);
            if (!std::binary_search(senses.begin(), senses.end(),
                                    static_cast<std::uint32_t>(i))) {
                fail(synset.id, "sense index does not know \"" + word.lemma + "\" (" +
                                    word.language.code + ") belongs here");
            }
            ++member_count;
        }
    }
    std::uint64_t posting_count = 0;
    for (const auto& [word, senses] : model.index()) {
        for (std::size_t k = 0; k < senses.size(); ++k) {
            if (k > 0 && senses[k - 1] >= senses[k]) {
                fail(word_label(word), "posting list is not strictly increasing");
            }
            if (senses[k] >= synsets.size() || !synsets[senses[k]].contains(word)) {
                fail(word_label(word), "sense index claims a membership the synsets lack");
            }
        }
        posting_count += senses.size();
    }
    if (posting_count != member_count) {
        fail("sense index", "index holds " + std::to_string(posting_count) +
                                " postings for " + std::to_string(member_count) +
                                " synset members");
    }
    sort_violations(out);
    return out;
}

std::vector<Violation> verify_theorems(const MultiWordnet& model, const Direction& direction) {
    return audit_direction(model, direction).violations;
}

std::vector<Violation> verify(const MultiWordnet& model, const Direction& direction) {
    std::vector<Violation> out = verify_structure(model);
    std::vector<Violation> theorems = verify_theorems(model, direction);
    out.insert(out.end(), std::make_move_iterator(theorems.begin()),
               std::make_move_iterator(theorems.end()));
    return out;
}

FuzzReport fuzz(const GenParams& params_template, std::uint64_t n_cases,
                std::uint64_t base_seed, bool corrupt_cases) {
    if (n_cases == 0) {
        throw usage_error("invalid-case-count", "fuzzing needs at least one case");
    }
    params_template.validate();

    FuzzReport report;
    for (const auto& [name, member] : kFlags) {
        report.satisfied_all[name] = 0;
        report.satisfied_eligible[name] = 0;
    }
    for (std::uint64_t i = 0; i < n_cases; ++i) {
        GenParams params = params_template;
        params.seed = base_seed + i;
        MultiWordnet model = generate(params);
        if (corrupt_cases) {
            model = corrupt_for_negative_control(model);
        }
        std::vector<Violation> case_violations = verify_structure(model);
        for (std::size_t a = 0; a < params.languages.size(); ++a) {
            for (std::size_t b = 0; b < params.languages.size(); ++b) {
                if (a == b) {
                    continue;
                }
                const Direction d{params.languages[a], params.languages[b]};
                DirectionAudit audit = audit_direction(model, d);
                ++report.directions;
                report.words_profiled += audit.words;
                report.eligible_words += audit.eligible;
                for (std::size_t k = 0; k < kFlags.size(); ++k) {
                    report.satisfied_all[kFlags[k].first] += audit.satisfied_all[k];
                    report.satisfied_eligible[kFlags[k].first] += audit.satisfied_eligible[k];
                }
                case_violations.insert(case_violations.end(),
                                       std::make_move_iterator(audit.violations.begin()),
                                       std::make_move_iterator(audit.violations.end()));
            }
        }
        ++report.cases;
        report.violation_count += case_violations.size();
        if (!case_violations.empty() && !report.witness) {
            FuzzReport::Witness witness;
            witness.case_index = i;
            witness.seed = params.seed;
            witness.violations = std::move(case_violations);
            witness.model_lines = serialize_multiwordnet(model);
            report.witness = std::move(witness);
        }
    }
    return report;
}

MultiWordnet corrupt_for_negative_control(const MultiWordnet& model) {
    if (model.empty()) {
        throw usage_error("empty-model", "nothing to corrupt in an empty model");
    }
    std::vector<MultiSynset> synsets(model.synsets().begin(), model.synsets().end());
    MultiSynset shadow = synsets.front();
    shadow.id += "-shadow";
    synsets.push_back(std::move(shadow));
    return MultiWordnet::assemble_unchecked(
        std::move(synsets), model.index(),
        std::vector<LanguageCode>(model.languages().begin(), model.languages().end()));
}

json to_json(const Violation& violation) {
    return json{{"check", violation.check},
                {"witness", violation.witness},
                {"source", violation.source},
                {"target", violation.target},
                {"details", violation.details}};
}

json to_json(const FuzzReport& report) {
    json satisfied_all = json::object();
    json satisfied_eligible = json::object();
    json percent_eligible = json::object();
    for (const auto& [name, count] : report.satisfied_all) {
        satisfied_all[name] = count;
    }
    for (const auto& [name, count] : report.satisfied_eligible) {
        satisfied_eligible[name] = count;
        percent_eligible[name] =
            report.eligible_words == 0
                ? std::string("undefined")
                : format_percent_tenths(percent_tenths(count, report.eligible_words));
    }
    json result{{"cases", report.cases},
                {"directions", report.directions},
                {"words_profiled", report.words_profiled},
                {"eligible_words", report.eligible_words},
                {"violation_count", report.violation_count},
                {"satisfied_all", satisfied_all},
                {"satisfied_eligible", satisfied_eligible},
                {"satisfied_eligible_percent", percent_eligible}};
    if (report.witness) {
        json violations = json::array();
        for (const Violation& violation : report.witness->violations) {
            violations.push_back(to_json(violation));
        }
        result["witness"] = json{{"case_index", report.witness->case_index},
                                 {"seed", report.witness->seed},
                                 {"violations", violations}};
    } else {
        result["witness"] = nullptr;
    }
    return result;
}

}  // namespace mwn::lab
