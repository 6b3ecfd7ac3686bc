#include "mwn/ingest.hpp"

#include <algorithm>
#include <istream>
#include <json.hpp>
#include <ostream>
#include <set>
#include <sstream>
#include <utility>

namespace mwn {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

// Pulls the next line and enforces the framing rules shared by every
// line-oriented reader: no byte order mark, no carriage returns, no blanks.
bool next_line(std::istream& in, std::string& line, std::size_t& line_no) {
    if (!std::getline(in, line)) {
        return false;
    }
    ++line_no;
    if (line_no == 1 && line.starts_with("\xef\xbb\xbf")) {
        throw parse_error("byte-order-mark", line_no, "input starts with a byte order mark");
    }
    if (line.find('\r') != std::string::npos) {
        throw parse_error("carriage-return", line_no,
                          "carriage return found; input must use bare \\n line endings");
    }
    if (line.empty()) {
        throw parse_error("blank-line", line_no, "blank line");
    }
    return true;
}

json parse_json_object(const std::string& line, std::size_t line_no) {
    json value;
    try {
        value = json::parse(line);
    } catch (const json::exception& e) {
        throw parse_error("invalid-json", line_no, e.what());
    }
    if (!value.is_object()) {
        throw parse_error("invalid-json", line_no, "line is not a JSON object");
    }
    return value;
}

void reject_unknown_fields(const json& object, std::initializer_list<std::string_view> allowed,
                           std::size_t line_no) {
    for (const auto& [key, value] : object.items()) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
            throw parse_error("unknown-field", line_no, "unexpected field \"" + key + "\"");
        }
    }
}

std::string require_string(const json& object, const char* field, std::size_t line_no) {
    const auto it = object.find(field);
    if (it == object.end()) {
        throw parse_error("missing-field", line_no,
                          "required field \"" + std::string(field) + "\" is missing");
    }
    if (!it->is_string()) {
        throw parse_error("wrong-type", line_no,
                          "field \"" + std::string(field) + "\" must be a string");
    }
    return it->get<std::string>();
}

std::optional<std::string> optional_string(const json& object, const char* field,
                                           std::size_t line_no) {
    const auto it = object.find(field);
    if (it == object.end()) {
        return std::nullopt;
    }
    if (!it->is_string()) {
        throw parse_error("wrong-type", line_no,
                          "field \"" + std::string(field) + "\" must be a string");
    }
    return it->get<std::string>();
}

// Rethrows value-level validation failures with the offending line attached.
template <typename F>
auto at_line(std::size_t line_no, F&& f) {
    try {
        return f();
    } catch (const parse_error&) {
        throw;
    } catch (const validation_error& e) {
        throw parse_error(e.code(), line_no, e.what());
    }
}

}  // namespace

ClusterMap ClusterMap::build(std::vector<std::pair<std::string, std::string>> entries) {
    ClusterMap map;
    for (auto& [id, label] : entries) {
        const auto [it, inserted] = map.entries_.emplace(std::move(id), std::move(label));
        if (!inserted) {
            throw validation_error("duplicate-cluster-entry",
                                   "synset " + it->first + " is mapped to a cluster twice");
        }
    }
    return map;
}

const std::string* ClusterMap::label(std::string_view synset_id) const noexcept {
    const auto it = entries_.find(synset_id);
    return it == entries_.end() ? nullptr : &it->second;
}

MultiWordnet parse_multiwordnet(std::istream& in) {
    std::vector<MultiSynset> synsets;
    std::string line;
    std::size_t line_no = 0;
    while (next_line(in, line, line_no)) {
        const json object = parse_json_object(line, line_no);
        reject_unknown_fields(object, {"id", "pos", "gloss", "words"}, line_no);
        MultiSynset synset;
        synset.id = require_string(object, "id", line_no);
        synset.pos = at_line(line_no, [&] { return parse_pos(require_string(object, "pos", line_no)); });
        synset.gloss = optional_string(object, "gloss", line_no);
        const auto words = object.find("words");
        if (words == object.end() || !words->is_array()) {
            throw parse_error("wrong-type", line_no, "field \"words\" must be an array");
        }
        if (words->empty()) {
            throw parse_error("empty-synset", line_no,
                              "synset " + synset.id + " has no member words");
        }
        for (const json& entry : *words) {
            if (!entry.is_object()) {
                throw parse_error("wrong-type", line_no, "words entries must be objects");
            }
            reject_unknown_fields(entry, {"lang", "lemma"}, line_no);
            synset.words.push_back(at_line(line_no, [&] {
                return WordKey::make(LanguageCode::parse(require_string(entry, "lang", line_no)),
                                     require_string(entry, "lemma", line_no), synset.pos);
            }));
        }
        synsets.push_back(std::move(synset));
    }
    return MultiWordnet::build(std::move(synsets));
}

void serialize_multiwordnet(const MultiWordnet& model, std::ostream& out) {
    for (const MultiSynset& synset : model.synsets()) {
        ordered_json object;
        object["id"] = synset.id;
        object["pos"] = std::string(1, pos_to_char(synset.pos));
        if (synset.gloss) {
            object["gloss"] = *synset.gloss;
        }
        ordered_json words = ordered_json::array();
        for (const WordKey& word : synset.words) {
            ordered_json entry;
            entry["lang"] = word.language.code;
            entry["lemma"] = word.lemma;
            words.push_back(std::move(entry));
        }
        object["words"] = std::move(words);
        out << object.dump() << '\n';
    }
}

std::string serialize_multiwordnet(const MultiWordnet& model) {
    std::ostringstream out;
    serialize_multiwordnet(model, out);
    return out.str();
}

std::vector<AlignedToken> parse_bitext(std::istream& in) {
    std::vector<AlignedToken> tokens;
    std::set<std::pair<std::string, std::uint32_t>> seen;
    std::string line;
    std::size_t line_no = 0;
    while (next_line(in, line, line_no)) {
        const json object = parse_json_object(line, line_no);
        reject_unknown_fields(
            object, {"sent", "tok", "lang", "lemma", "pos", "tgt_lemma", "tgt_lang", "gold"},
            line_no);
        AlignedToken token;
        token.sentence_id = require_string(object, "sent", line_no);
        if (token.sentence_id.empty()) {
            throw parse_error("empty-field", line_no, "field \"sent\" is empty");
        }
        const auto tok = object.find("tok");
        if (tok == object.end() || !tok->is_number_unsigned()) {
            throw parse_error("wrong-type", line_no,
                              "field \"tok\" must be a non-negative integer");
        }
        token.token_index = tok->get<std::uint32_t>();
        at_line(line_no, [&] {
            const Pos pos = parse_pos(require_string(object, "pos", line_no));
            token.source = WordKey::make(LanguageCode::parse(require_string(object, "lang", line_no)),
                                         require_string(object, "lemma", line_no), pos);
            token.target_lemma = normalize_lemma(require_string(object, "tgt_lemma", line_no));
            if (const auto lang = optional_string(object, "tgt_lang", line_no)) {
                token.target_language = LanguageCode::parse(*lang);
            }
        });
        token.gold_synset_id = optional_string(object, "gold", line_no);
        if (token.gold_synset_id && token.gold_synset_id->empty()) {
            throw parse_error("empty-field", line_no, "field \"gold\" is empty");
        }
        if (!seen.emplace(token.sentence_id, token.token_index).second) {
            throw parse_error("duplicate-token", line_no,
                              "token " + token.sentence_id + "/" +
                                  std::to_string(token.token_index) + " appears twice");
        }
        tokens.push_back(std::move(token));
    }
    return tokens;
}

ClusterMap parse_cluster_map(std::istream& in) {
    std::vector<std::pair<std::string, std::string>> entries;
    std::string line;
    std::size_t line_no = 0;
    while (next_line(in, line, line_no)) {
        const auto tab = line.find('\t');
        if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
            throw parse_error("malformed-row", line_no,
                              "expected exactly two tab-separated fields");
        }
        std::string id = line.substr(0, tab);
        std::string label = line.substr(tab + 1);
        const auto bad = [](const std::string& s) {
            return s.empty() || std::any_of(s.begin(), s.end(), [](char c) {
                       return c == ' ' || c == '\t' || c == '\v' || c == '\f';
                   });
        };
        if (bad(id) || bad(label)) {
            throw parse_error("malformed-row", line_no,
                              "synset id and cluster label must be nonempty and free of "
                              "whitespace");
        }
        entries.emplace_back(std::move(id), std::move(label));
    }
    return at_line(line_no, [&] { return ClusterMap::build(std::move(entries)); });
}

LexiconStats lexicon_stats(const MultiWordnet& model) {
    LexiconStats stats;
    stats.synset_count = model.size();
    for (const LanguageCode& language : model.languages()) {
        stats.by_language.emplace(language.code, LanguageStats{});
    }
    for (const auto& [word, senses] : model.index()) {
        LanguageStats& entry = stats.by_language[word.language.code];
        ++entry.word_count;
        if (senses.size() > 1) {
            ++entry.polysemous_words;
        } else {
            ++entry.monosemous_words;
        }
    }
    for (const MultiSynset& synset : model.synsets()) {
        for (const LanguageCode& language : model.languages()) {
            const auto run = synset.words_in(language.code);
            if (!run.empty()) {
                LanguageStats& entry = stats.by_language[language.code];
                ++entry.synsets_with_language;
                if (run.size() == 1) {
                    ++entry.single_word_synsets;
                }
            }
        }
    }
    return stats;
}

}  // namespace mwn
