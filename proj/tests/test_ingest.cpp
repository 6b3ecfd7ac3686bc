#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>

#include "mwn/core.hpp"
#include "mwn/ingest.hpp"

using namespace mwn;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

const std::string kFixture = std::string(MWN_SOURCE_DIR) + "/fixtures/mw_sample.jsonl";
const std::string kBitext = std::string(MWN_SOURCE_DIR) + "/fixtures/bitext_sample.jsonl";
const std::string kClusters = std::string(MWN_SOURCE_DIR) + "/fixtures/clusters_sample.tsv";

MultiWordnet load_fixture() {
    std::ifstream in(kFixture, std::ios::binary);
    REQUIRE(in.good());
    return parse_multiwordnet(in);
}

}  // namespace

TEST_CASE("fixture model loads with expected shape") {
    const MultiWordnet model = load_fixture();
    CHECK(model.size() == 17);
    REQUIRE(model.languages().size() == 3);
    CHECK(model.languages()[0].code == "en");
    CHECK(model.languages()[1].code == "fr");
    CHECK(model.languages()[2].code == "it");
    CHECK(model.at("over-1").pos == Pos::verb);
    CHECK(model.at("gap-1").words_in("en").empty());
    CHECK(model.at("gap-1").words_in("fr").size() == 1);
}

TEST_CASE("serialization round-trips the canonical fixture byte for byte") {
    const std::string original = read_file(kFixture);
    std::istringstream in(original);
    const MultiWordnet model = parse_multiwordnet(in);
    CHECK(serialize_multiwordnet(model) == original);
}

TEST_CASE("serialization canonicalizes synset and word order") {
    std::istringstream in(
        "{\"id\":\"z-1\",\"pos\":\"n\",\"words\":[{\"lang\":\"fr\",\"lemma\":\"zed\"},"
        "{\"lang\":\"en\",\"lemma\":\"zee\"}]}\n"
        "{\"id\":\"a-1\",\"pos\":\"n\",\"words\":[{\"lang\":\"en\",\"lemma\":\"ay\"}]}\n");
    const MultiWordnet model = parse_multiwordnet(in);
    CHECK(serialize_multiwordnet(model) ==
          "{\"id\":\"a-1\",\"pos\":\"n\",\"words\":[{\"lang\":\"en\",\"lemma\":\"ay\"}]}\n"
          "{\"id\":\"z-1\",\"pos\":\"n\",\"words\":[{\"lang\":\"en\",\"lemma\":\"zee\"},"
          "{\"lang\":\"fr\",\"lemma\":\"zed\"}]}\n");
}

TEST_CASE("wordnet parser rejects malformed input with line numbers") {
    const auto expect_reject = [](const std::string& text, const std::string& code,
                                  std::size_t line) {
        std::istringstream in(text);
        try {
            parse_multiwordnet(in);
            FAIL_CHECK("expected rejection: " << code);
        } catch (const parse_error& e) {
            CHECK(e.code() == code);
            CHECK(e.line() == line);
        }
    };
    const std::string good = "{\"id\":\"a-1\",\"pos\":\"n\",\"words\":[{\"lang\":\"en\",\"lemma\":\"ay\"}]}\n";
    expect_reject("\xef\xbb\xbf" + good, "byte-order-mark", 1);
    expect_reject("{\"id\":\"a-1\",\"pos\":\"n\",\"words\":[{\"lang\":\"en\",\"lemma\":\"ay\"}]}\r\n",
                  "carriage-return", 1);
    expect_reject(good + "\n" + good, "blank-line", 2);
    expect_reject("not json\n", "invalid-json", 1);
    expect_reject("[1,2]\n", "invalid-json", 1);
    expect_reject("{\"id\":\"a-1\",\"pos\":\"n\",\"extra\":1,\"words\":[]}\n", "unknown-field", 1);
    expect_reject("{\"id\":\"a-1\",\"words\":[]}\n", "missing-field", 1);
    expect_reject("{\"id\":\"a-1\",\"pos\":\"x\",\"words\":[]}\n", "invalid-pos", 1);
    expect_reject("{\"id\":\"a-1\",\"pos\":\"n\",\"words\":[]}\n", "empty-synset", 1);
    expect_reject("{\"id\":\"a-1\",\"pos\":\"n\",\"words\":[{\"lang\":\"e\",\"lemma\":\"a\"}]}\n",
                  "invalid-language-code", 1);
    expect_reject(good + "{\"id\":\"b-1\",\"pos\":\"n\",\"words\":[{\"lang\":\"en\",\"lemma\":\"a\\tb\"}]}\n",
                  "lemma-whitespace", 2);
    // Model-level failures surface without line numbers.
    std::istringstream dup(good + good);
    CHECK_THROWS_AS(parse_multiwordnet(dup), validation_error);
}

TEST_CASE("parser normalizes lemmas on the way in") {
    std::istringstream in(
        "{\"id\":\"a-1\",\"pos\":\"n\",\"words\":[{\"lang\":\"fr\",\"lemma\":\"cafe\\u0301 noir\"}]}\n");
    const MultiWordnet model = parse_multiwordnet(in);
    const auto vocab = model.vocabulary("fr");
    REQUIRE(vocab.size() == 1);
    CHECK(vocab[0].lemma == "caf\xc3\xa9_noir");
}

TEST_CASE("bitext fixture parses with per-token target languages") {
    std::ifstream in(kBitext, std::ios::binary);
    REQUIRE(in.good());
    const auto tokens = parse_bitext(in);
    REQUIRE(tokens.size() == 8);
    CHECK(tokens[0].sentence_id == "s1");
    CHECK(tokens[0].token_index == 0);
    CHECK(tokens[0].source.lemma == "duty");
    CHECK(tokens[0].target_lemma == "droit");
    CHECK(!tokens[0].target_language.has_value());
    CHECK(tokens[0].gold_synset_id == "duty-1");
    REQUIRE(tokens[5].target_language.has_value());
    CHECK(tokens[5].target_language->code == "it");
    CHECK(tokens[7].source.pos == Pos::verb);
}

TEST_CASE("bitext parser rejects duplicates and bad fields") {
    const std::string token =
        "{\"sent\":\"s1\",\"tok\":0,\"lang\":\"en\",\"lemma\":\"duty\",\"pos\":\"n\","
        "\"tgt_lemma\":\"droit\"}\n";
    std::istringstream dup(token + token);
    CHECK_THROWS_AS(parse_bitext(dup), parse_error);

    std::istringstream bad_tok(
        "{\"sent\":\"s1\",\"tok\":-1,\"lang\":\"en\",\"lemma\":\"duty\",\"pos\":\"n\","
        "\"tgt_lemma\":\"droit\"}\n");
    CHECK_THROWS_AS(parse_bitext(bad_tok), parse_error);

    std::istringstream unknown(
        "{\"sent\":\"s1\",\"tok\":0,\"lang\":\"en\",\"lemma\":\"duty\",\"pos\":\"n\","
        "\"tgt_lemma\":\"droit\",\"score\":1}\n");
    CHECK_THROWS_AS(parse_bitext(unknown), parse_error);
}

TEST_CASE("cluster map parses and rejects malformed rows") {
    std::ifstream in(kClusters, std::ios::binary);
    REQUIRE(in.good());
    const ClusterMap clusters = parse_cluster_map(in);
    CHECK(clusters.size() == 17);
    REQUIRE(clusters.label("bank-1") != nullptr);
    CHECK(*clusters.label("bank-1") == "bank.river");
    REQUIRE(clusters.label("int-2") != nullptr);
    CHECK(*clusters.label("int-2") == "interest.h1");
    CHECK(clusters.label("nope") == nullptr);

    std::istringstream missing_tab("bank-1 bank.river\n");
    CHECK_THROWS_AS(parse_cluster_map(missing_tab), parse_error);
    std::istringstream extra_tab("bank-1\tbank.river\tx\n");
    CHECK_THROWS_AS(parse_cluster_map(extra_tab), parse_error);
    std::istringstream dup("bank-1\ta\nbank-1\tb\n");
    CHECK_THROWS_AS(parse_cluster_map(dup), parse_error);
}

TEST_CASE("lexicon stats count words, senses, and gaps per language") {
    const LexiconStats stats = lexicon_stats(load_fixture());
    CHECK(stats.synset_count == 17);
    REQUIRE(stats.by_language.size() == 3);

    const LanguageStats& en = stats.by_language.at("en");
    CHECK(en.word_count == 9);
    CHECK(en.polysemous_words == 6);
    CHECK(en.monosemous_words == 3);
    CHECK(en.synsets_with_language == 15);
    CHECK(en.single_word_synsets == 14);

    const LanguageStats& fr = stats.by_language.at("fr");
    CHECK(fr.word_count == 8);
    CHECK(fr.polysemous_words == 2);
    CHECK(fr.synsets_with_language == 10);
    CHECK(fr.single_word_synsets == 9);

    const LanguageStats& it = stats.by_language.at("it");
    CHECK(it.word_count == 5);
    CHECK(it.polysemous_words == 4);
    CHECK(it.monosemous_words == 1);
    CHECK(it.synsets_with_language == 7);
    CHECK(it.single_word_synsets == 5);
}
