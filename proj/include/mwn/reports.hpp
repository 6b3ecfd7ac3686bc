#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "mwn/assumptions.hpp"
#include "mwn/ingest.hpp"

namespace mwn {

// count/total as tenths of a percent, rounded half to even. All report
// percentages pass through here so repeated runs cannot drift; arithmetic
// stays in integers until this final step. Throws empty_population_error
// when total is zero.
std::int64_t percent_tenths(std::uint64_t count, std::uint64_t total);
std::string format_percent_tenths(std::int64_t tenths);  // 500 -> "50.0"

// num/den with exactly four decimals, rounded half to even.
std::string format_fraction(std::uint64_t num, std::uint64_t den);

// Aggregate assumption percentages over the eligible words of the source
// language. Stored as raw counts; percentages materialize at serialization.
struct Table1Report {
    Direction direction;
    std::uint64_t eligible_word_count = 0;
    std::uint64_t ospt = 0;  // = PSA count
    std::uint64_t otps = 0;  // = SPA count
    std::uint64_t gpa = 0;
    std::uint64_t ssa = 0;
    std::uint64_t gsa = 0;
    std::uint64_t nolg = 0;
};

// Breakdown of the eligible words over the eight (OSPT, OTPS, NoLG)
// combinations. The all-true cell is the words whose senses map bijectively
// onto their translations.
struct Table2Report {
    Direction direction;
    std::uint64_t eligible_word_count = 0;
    // cells[ospt << 2 | otps << 1 | nolg]
    std::array<std::uint64_t, 8> cells{};
};

// Both throw empty_population_error when no word of the source language is
// eligible under the direction.
Table1Report table1(const MultiWordnet& model, const Direction& direction);
Table2Report table2(const MultiWordnet& model, const Direction& direction);

// Profiles of the eligible words, sorted by (lemma, pos).
std::vector<AssumptionProfile> eligible_profiles(const MultiWordnet& model,
                                                 const Direction& direction);

// One CSV row per eligible word plus a header row; returns the data row
// count. Throws empty_population_error when no word is eligible.
std::size_t dump_profiles_csv(const MultiWordnet& model, const Direction& direction,
                              std::ostream& out);

std::string to_csv(const Table1Report& report);
std::string to_csv(const Table2Report& report);

// JSON serializations use lexicographic key order throughout.
nlohmann::json to_json(const Table1Report& report);
nlohmann::json to_json(const Table2Report& report);
nlohmann::json to_json(const AssumptionProfile& profile);
nlohmann::json to_json(const LexiconStats& stats,
                       const std::optional<std::string>& only_language = std::nullopt);

}  // namespace mwn
