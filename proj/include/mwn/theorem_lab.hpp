#pragma once

#include <array>
#include <cstdint>
#include <json.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mwn/assumptions.hpp"
#include "mwn/core.hpp"

namespace mwn::lab {

// Counter-based 64-bit generator (SplitMix64). Fixed published constants, so
// a (template, seed) pair names the same instance on every platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n); n must be positive.
    std::uint64_t below(std::uint64_t n) noexcept { return next() % n; }

    // Uniform in [0, 1) with 53 mantissa bits.
    double unit() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

// Per-language word-count distribution: with probability zero_probability the
// language is a gap for the synset, otherwise uniform in [min, max].
struct CountSpec {
    std::uint32_t min = 0;
    std::uint32_t max = 0;
    double zero_probability = 0.0;
};

struct GenParams {
    std::uint64_t seed = 0;
    std::uint32_t synset_count = 0;
    std::vector<LanguageCode> languages;
    std::map<std::string, std::uint32_t> lemma_pool_size;
    CountSpec words_per_synset;
    // Probability of reusing an already-placed lemma over drawing a fresh
    // one; drives polysemy and parallel polysemy.
    double reuse_bias = 0.0;

    void validate() const;  // throws usage_error
    static GenParams from_json(const nlohmann::json& object);
    nlohmann::json to_json() const;
};

// The checked-in reproducible template: 200 synsets over en/fr/it.
GenParams default_template();

// Deterministic function of params. The result passes every model invariant;
// a draw sequence that would leave a synset empty is redrawn in place.
MultiWordnet generate(const GenParams& params);

// One broken expectation. `check` is STRUCT for model-invariant breakage and
// otherwise names the property: T1 (OSPT=PSA), T2 (OTPS=SPA), O1 (GSA =
// SSA&PSA), O2 (GPA = SPA&PSA), O3 (OCPW implies GSA), O4 (GSA&NoLG implies
// OCPW), O5 (one word per target concept implies all OTPS), O6 (all OTPS
// and covered target gaps imply one word per target concept), BIDIR
// (all-source OSPT iff all-target OSPT), S2W (strong assumptions imply the
// weak corpus-level ones).
struct Violation {
    std::string check;
    std::string witness;
    std::string source;
    std::string target;
    std::string details;
};

// Model-invariant audit that does not trust the builder: ordering, word
// sets, pos homogeneity, and exact agreement between synsets and the sense
// index in both directions.
std::vector<Violation> verify_structure(const MultiWordnet& model);

// Theorem audit for one direction; vacuous pass when either language is
// absent from the model. Every flag is recomputed from its own definition
// via profile(), so a violation here means the definitions disagree.
std::vector<Violation> verify_theorems(const MultiWordnet& model, const Direction& direction);

// Structure audit plus theorem audit.
std::vector<Violation> verify(const MultiWordnet& model, const Direction& direction);

struct FuzzReport {
    std::uint64_t cases = 0;
    std::uint64_t directions = 0;
    std::uint64_t words_profiled = 0;
    std::uint64_t eligible_words = 0;
    std::uint64_t violation_count = 0;
    // Satisfaction counts per assumption, over all profiled words and over
    // the eligible subset: the synthetic analogue of the aggregate table.
    std::map<std::string, std::uint64_t> satisfied_all;
    std::map<std::string, std::uint64_t> satisfied_eligible;

    struct Witness {
        std::uint64_t case_index = 0;
        std::uint64_t seed = 0;
        std::vector<Violation> violations;
        std::string model_lines;  // canonical serialization of the instance
    };
    // First violating case, kept so the failure can be replayed offline.
    std::optional<Witness> witness;
};

// generate+verify over seeds base_seed .. base_seed+n_cases-1, auditing
// every ordered language pair of the template. n_cases must be positive.
// corrupt_cases runs every instance through the negative control first, so a
// clean report under it would mean the harness has gone blind.
FuzzReport fuzz(const GenParams& params_template, std::uint64_t n_cases,
                std::uint64_t base_seed, bool corrupt_cases = false);

// Negative control for the harness itself: returns a copy with a duplicated
// synset that the sense index does not know about, assembled behind the
// builder's back. verify_structure must flag it.
MultiWordnet corrupt_for_negative_control(const MultiWordnet& model);

nlohmann::json to_json(const Violation& violation);
nlohmann::json to_json(const FuzzReport& report);

}  // namespace mwn::lab
