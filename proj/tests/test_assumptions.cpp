#include <doctest.h>

#include <fstream>
#include <string>

#include "mwn/assumptions.hpp"
#include "mwn/ingest.hpp"

using namespace mwn;

namespace {

const MultiWordnet& fixture() {
    static const MultiWordnet model = [] {
        std::ifstream in(std::string(MWN_SOURCE_DIR) + "/fixtures/mw_sample.jsonl",
                         std::ios::binary);
        REQUIRE(in.good());
        return parse_multiwordnet(in);
    }();
    return model;
}

AssumptionProfile en_fr(const char* lemma, Pos pos = Pos::noun) {
    return profile(fixture(), Direction::make("en", "fr"), WordKeyView("en", lemma, pos));
}

AssumptionProfile en_it(const char* lemma, Pos pos = Pos::noun) {
    return profile(fixture(), Direction::make("en", "it"), WordKeyView("en", lemma, pos));
}

void check_flags(const AssumptionFlags& got, const AssumptionFlags& want) {
    CHECK(got.ospt == want.ospt);
    CHECK(got.psa == want.psa);
    CHECK(got.otps == want.otps);
    CHECK(got.spa == want.spa);
    CHECK(got.ssa == want.ssa);
    CHECK(got.gsa == want.gsa);
    CHECK(got.gpa == want.gpa);
    CHECK(got.nolg == want.nolg);
    CHECK(got.ocpw == want.ocpw);
}

}  // namespace

TEST_CASE("direction construction") {
    CHECK(Direction::make("en", "fr").source.code == "en");
    CHECK_THROWS_AS(Direction::make("en", "en"), usage_error);
    CHECK_THROWS_AS(Direction::make("e!", "fr"), validation_error);
}

TEST_CASE("profile rejects bad inputs") {
    CHECK_THROWS_AS(profile(fixture(), Direction::make("en", "fr"),
                            WordKeyView("fr", "devoir", Pos::noun)),
                    usage_error);
    CHECK_THROWS_AS(profile(fixture(), Direction::make("en", "fr"),
                            WordKeyView("en", "missing", Pos::noun)),
                    validation_error);
}

// Each expectation below was derived by exhaustive set enumeration over the
// fixture, independently of this implementation.

TEST_CASE("duty against fr: distinct translations pin distinct senses") {
    const AssumptionProfile p = en_fr("duty");
    CHECK(p.sense_count == 2);
    CHECK(p.translation_count == 2);
    CHECK(p.eligible);
    check_flags(p.flags, {.ospt = true,
                          .psa = true,
                          .otps = true,
                          .spa = true,
                          .ssa = false,
                          .gsa = false,
                          .gpa = true,
                          .nolg = true,
                          .ocpw = false});
    CHECK(p.parallel_polysemy_partners.empty());
}

TEST_CASE("bank against fr: a sense with synonymous translations") {
    const AssumptionProfile p = en_fr("bank");
    CHECK(p.sense_count == 2);
    CHECK(p.translation_count == 3);
    CHECK(p.eligible);
    check_flags(p.flags, {.ospt = true,
                          .psa = true,
                          .otps = false,
                          .spa = false,
                          .ssa = false,
                          .gsa = false,
                          .gpa = false,
                          .nolg = true,
                          .ocpw = false});
    CHECK(p.parallel_polysemy_partners.empty());
}

TEST_CASE("order against fr: one translation covering all three senses") {
    const AssumptionProfile p = en_fr("order");
    CHECK(p.sense_count == 3);
    CHECK(p.translation_count == 1);
    CHECK(p.eligible);
    check_flags(p.flags, {.ospt = false,
                          .psa = false,
                          .otps = true,
                          .spa = true,
                          .ssa = true,
                          .gsa = false,
                          .gpa = false,
                          .nolg = true,
                          .ocpw = false});
    CHECK(p.parallel_polysemy_partners == std::vector<std::string>{"ordre"});
}

TEST_CASE("interest against fr: parallel polysemy") {
    const AssumptionProfile p = en_fr("interest");
    CHECK(p.sense_count == 2);
    CHECK(p.translation_count == 1);
    CHECK(p.eligible);
    check_flags(p.flags, {.ospt = false,
                          .psa = false,
                          .otps = true,
                          .spa = true,
                          .ssa = true,
                          .gsa = false,
                          .gpa = false,
                          .nolg = true,
                          .ocpw = false});
    CHECK(p.parallel_polysemy_partners == std::vector<std::string>{"int\xc3\xa9r\xc3\xaat"});
}

TEST_CASE("performer against fr: a monosemous word facing a lexical gap") {
    const AssumptionProfile p = en_fr("performer");
    CHECK(p.sense_count == 1);
    CHECK(p.translation_count == 0);
    CHECK(!p.eligible);
    check_flags(p.flags, {.ospt = true,
                          .psa = true,
                          .otps = true,
                          .spa = true,
                          .ssa = true,
                          .gsa = true,
                          .gpa = true,
                          .nolg = false,
                          .ocpw = true});
}

TEST_CASE("memory against it: both senses behind one translation") {
    const AssumptionProfile p = en_it("memory");
    CHECK(p.sense_count == 2);
    CHECK(p.translation_count == 1);
    CHECK(p.eligible);
    check_flags(p.flags, {.ospt = false,
                          .psa = false,
                          .otps = true,
                          .spa = true,
                          .ssa = true,
                          .gsa = false,
                          .gpa = false,
                          .nolg = true,
                          .ocpw = false});
    CHECK(p.parallel_polysemy_partners == std::vector<std::string>{"ricordo"});
}

TEST_CASE("overcome against it: synonymous translations on every sense") {
    const AssumptionProfile p = en_it("overcome", Pos::verb);
    CHECK(p.sense_count == 2);
    CHECK(p.translation_count == 2);
    CHECK(p.eligible);
    check_flags(p.flags, {.ospt = false,
                          .psa = false,
                          .otps = false,
                          .spa = false,
                          .ssa = false,
                          .gsa = false,
                          .gpa = false,
                          .nolg = true,
                          .ocpw = false});
    CHECK(p.parallel_polysemy_partners ==
          std::vector<std::string>{"battere", "vincere"});
}

TEST_CASE("prova against en: a gap sense next to a translated sense") {
    const AssumptionProfile p = profile(fixture(), Direction::make("it", "en"),
                                        WordKeyView("it", "prova", Pos::noun));
    CHECK(p.sense_count == 2);
    CHECK(p.translation_count == 2);
    CHECK(p.eligible);
    check_flags(p.flags, {.ospt = true,
                          .psa = true,
                          .otps = false,
                          .spa = false,
                          .ssa = true,
                          .gsa = true,
                          .gpa = false,
                          .nolg = false,
                          .ocpw = false});
    CHECK(p.parallel_polysemy_partners.empty());
}

TEST_CASE("one word per concept violations per language") {
    CHECK(one_word_per_concept_violations(fixture(), "en") ==
          std::vector<std::string>{"test-1"});
    CHECK(one_word_per_concept_violations(fixture(), "fr") ==
          std::vector<std::string>{"bank-1"});
    CHECK(one_word_per_concept_violations(fixture(), "it") ==
          std::vector<std::string>{"over-1", "over-2"});
    CHECK(!one_word_per_concept(fixture(), "en"));
    CHECK(one_word_per_concept(fixture(), "de"));
}

TEST_CASE("gap coverage fails in every direction on the fixture") {
    for (const auto& [covered, by] : std::vector<std::pair<const char*, const char*>>{
             {"en", "fr"}, {"en", "it"}, {"fr", "en"}, {"fr", "it"}, {"it", "en"}, {"it", "fr"}}) {
        CAPTURE(covered);
        CAPTURE(by);
        CHECK(!gap_covered(fixture(), covered, by));
    }
    // fr lacks words exactly where these en-lexicalized concepts sit.
    CHECK(gap_coverage_violations(fixture(), "en", "fr") ==
          std::vector<std::string>{"mem-1", "mem-2", "over-1", "over-2", "perf-1", "test-1"});
    CHECK(gap_coverage_violations(fixture(), "fr", "en") ==
          std::vector<std::string>{"gap-1"});
    CHECK(gap_coverage_violations(fixture(), "it", "en") ==
          std::vector<std::string>{"prova-2"});
}
