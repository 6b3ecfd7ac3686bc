#include "mwn/reports.hpp"

#include <ostream>
#include <sstream>

namespace mwn {

namespace {

using nlohmann::json;

constexpr const char* kTable1Rows[] = {"OSPT/PSA", "OTPS/SPA", "GPA", "SSA", "GSA", "NoLG"};

const char* yesno(bool value) { return value ? "yes" : "no"; }

std::array<std::uint64_t, 6> table1_counts(const Table1Report& report) {
    return {report.ospt, report.otps, report.gpa, report.ssa, report.gsa, report.nolg};
}

std::string join_partners(const std::vector<std::string>& partners) {
    std::string joined;
    for (const std::string& partner : partners) {
        if (!joined.empty()) {
            joined += '|';
        }
        joined += partner;
    }
    return joined;
}

}  // namespace

std::int64_t percent_tenths(std::uint64_t count, std::uint64_t total) {
    if (total == 0) {
        throw empty_population_error("percentage over an empty population");
    }
    const unsigned __int128 scaled = static_cast<unsigned __int128>(count) * 1000;
    auto quotient = static_cast<std::uint64_t>(scaled / total);
    const auto remainder = static_cast<std::uint64_t>(scaled % total);
    const unsigned __int128 twice = static_cast<unsigned __int128>(remainder) * 2;
    if (twice > total || (twice == total && (quotient & 1))) {
        ++quotient;
    }
    return static_cast<std::int64_t>(quotient);
}

std::string format_percent_tenths(std::int64_t tenths) {
    return std::to_string(tenths / 10) + "." + std::to_string(tenths % 10);
}

std::string format_fraction(std::uint64_t num, std::uint64_t den) {
    if (den == 0) {
        throw empty_population_error("fraction over an empty population");
    }
    const unsigned __int128 scaled = static_cast<unsigned __int128>(num) * 10000;
    auto quotient = static_cast<std::uint64_t>(scaled / den);
    const auto remainder = static_cast<std::uint64_t>(scaled % den);
    const unsigned __int128 twice = static_cast<unsigned __int128>(remainder) * 2;
    if (twice > den || (twice == den && (quotient & 1))) {
        ++quotient;
    }
    std::string frac = std::to_string(quotient % 10000);
    frac.insert(0, 4 - frac.size(), '0');
    return std::to_string(quotient / 10000) + "." + frac;
}

std::vector<AssumptionProfile> eligible_profiles(const MultiWordnet& model,
                                                 const Direction& direction) {
    std::vector<AssumptionProfile> profiles;
    for (const WordKey& word : model.vocabulary(direction.source.code)) {
        AssumptionProfile p = profile(model, direction, word);
        if (p.eligible) {
            profiles.push_back(std::move(p));
        }
    }
    if (profiles.empty()) {
        throw empty_population_error("no eligible " + direction.source.code +
                                     " word under target " + direction.target.code);
    }
    return profiles;
}

Table1Report table1(const MultiWordnet& model, const Direction& direction) {
    Table1Report report;
    report.direction = direction;
    for (const AssumptionProfile& p : eligible_profiles(model, direction)) {
        ++report.eligible_word_count;
        report.ospt += p.flags.ospt;
        report.otps += p.flags.otps;
        report.gpa += p.flags.gpa;
        report.ssa += p.flags.ssa;
        report.gsa += p.flags.gsa;
        report.nolg += p.flags.nolg;
    }
    return report;
}

Table2Report table2(const MultiWordnet& model, const Direction& direction) {
    Table2Report report;
    report.direction = direction;
    for (const AssumptionProfile& p : eligible_profiles(model, direction)) {
        ++report.eligible_word_count;
        const std::size_t cell = (p.flags.ospt ? 4u : 0u) | (p.flags.otps ? 2u : 0u) |
                                 (p.flags.nolg ? 1u : 0u);
        ++report.cells[cell];
    }
    return report;
}

std::size_t dump_profiles_csv(const MultiWordnet& model, const Direction& direction,
                              std::ostream& out) {
    out << "lemma,pos,senses,translations,eligible,ospt,psa,otps,spa,ssa,gsa,gpa,nolg,ocpw,"
           "parallel_polysemy_partners\n";
    std::size_t rows = 0;
    for (const AssumptionProfile& p : eligible_profiles(model, direction)) {
        const AssumptionFlags& f = p.flags;
        out << p.word.lemma << ',' << pos_to_char(p.word.pos) << ',' << p.sense_count << ','
            << p.translation_count << ',' << yesno(p.eligible) << ',' << yesno(f.ospt) << ','
            << yesno(f.psa) << ',' << yesno(f.otps) << ',' << yesno(f.spa) << ','
            << yesno(f.ssa) << ',' << yesno(f.gsa) << ',' << yesno(f.gpa) << ','
            << yesno(f.nolg) << ',' << yesno(f.ocpw) << ','
            << join_partners(p.parallel_polysemy_partners) << '\n';
        ++rows;
    }
    return rows;
}

std::string to_csv(const Table1Report& report) {
    std::ostringstream out;
    out << "assumption," << report.direction.target.code << '\n';
    const auto counts = table1_counts(report);
    for (std::size_t i = 0; i < counts.size(); ++i) {
        out << kTable1Rows[i] << ','
            << format_percent_tenths(percent_tenths(counts[i], report.eligible_word_count))
            << '\n';
    }
    return out.str();
}

std::string to_csv(const Table2Report& report) {
    std::ostringstream out;
    out << "ospt,otps,nolg,percent\n";
    for (std::size_t cell = 0; cell < report.cells.size(); ++cell) {
        out << yesno((cell & 4) != 0) << ',' << yesno((cell & 2) != 0) << ','
            << yesno((cell & 1) != 0) << ','
            << format_percent_tenths(
                   percent_tenths(report.cells[cell], report.eligible_word_count))
            << '\n';
    }
    return out.str();
}

json to_json(const Table1Report& report) {
    json percentages;
    const auto counts = table1_counts(report);
    for (std::size_t i = 0; i < counts.size(); ++i) {
        percentages[kTable1Rows[i]] =
            format_percent_tenths(percent_tenths(counts[i], report.eligible_word_count));
    }
    return json{{"direction",
                 {{"source", report.direction.source.code},
                  {"target", report.direction.target.code}}},
                {"eligible_word_count", report.eligible_word_count},
                {"percentages", percentages}};
}

json to_json(const Table2Report& report) {
    json cells = json::array();
    for (std::size_t cell = 0; cell < report.cells.size(); ++cell) {
        cells.push_back(json{
            {"ospt", (cell & 4) != 0},
            {"otps", (cell & 2) != 0},
            {"nolg", (cell & 1) != 0},
            {"count", report.cells[cell]},
            {"percent",
             format_percent_tenths(percent_tenths(report.cells[cell],
                                                  report.eligible_word_count))}});
    }
    return json{{"direction",
                 {{"source", report.direction.source.code},
                  {"target", report.direction.target.code}}},
                {"eligible_word_count", report.eligible_word_count},
                {"cells", cells}};
}

json to_json(const AssumptionProfile& profile) {
    return json{{"lemma", profile.word.lemma},
                {"language", profile.word.language.code},
                {"pos", std::string(1, pos_to_char(profile.word.pos))},
                {"direction",
                 {{"source", profile.direction.source.code},
                  {"target", profile.direction.target.code}}},
                {"sense_count", profile.sense_count},
                {"translation_count", profile.translation_count},
                {"eligible", profile.eligible},
                {"flags",
                 {{"ospt", profile.flags.ospt},
                  {"psa", profile.flags.psa},
                  {"otps", profile.flags.otps},
                  {"spa", profile.flags.spa},
                  {"ssa", profile.flags.ssa},
                  {"gsa", profile.flags.gsa},
                  {"gpa", profile.flags.gpa},
                  {"nolg", profile.flags.nolg},
                  {"ocpw", profile.flags.ocpw}}},
                {"parallel_polysemy_partners", profile.parallel_polysemy_partners}};
}

json to_json(const LexiconStats& stats, const std::optional<std::string>& only_language) {
    json by_language = json::object();
    const auto emit = [&](const std::string& code, const LanguageStats& entry) {
        by_language[code] =
            json{{"word_count", entry.word_count},
                 {"monosemous_words", entry.monosemous_words},
                 {"polysemous_words", entry.polysemous_words},
                 {"synsets_with_language", entry.synsets_with_language},
                 {"single_word_synsets", entry.single_word_synsets},
                 {"single_word_fraction",
                  entry.synsets_with_language == 0
                      ? std::string("undefined")
                      : format_fraction(entry.single_word_synsets, entry.synsets_with_language)}};
    };
    if (only_language) {
        const auto it = stats.by_language.find(*only_language);
        emit(*only_language, it == stats.by_language.end() ? LanguageStats{} : it->second);
    } else {
        for (const auto& [code, entry] : stats.by_language) {
            emit(code, entry);
        }
    }
    return json{{"synset_count", stats.synset_count}, {"by_language", by_language}};
}

}  // namespace mwn
