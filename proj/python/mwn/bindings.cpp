#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <string>

#include "mwn/annotate.hpp"
#include "mwn/assumptions.hpp"
#include "mwn/core.hpp"
#include "mwn/errors.hpp"
#include "mwn/ingest.hpp"
#include "mwn/reports.hpp"
#include "mwn/theorem_lab.hpp"

namespace py = pybind11;

namespace {

// JSON values cross the boundary through the text form; the volumes involved
// make the cost irrelevant and the behavior identical to the CLI.
py::object to_py(const nlohmann::json& value) {
    return py::module_::import("json").attr("loads")(value.dump());
}

nlohmann::json from_py(const py::object& value) {
    const std::string text =
        py::module_::import("json").attr("dumps")(value).cast<std::string>();
    return nlohmann::json::parse(text);
}

mwn::MultiWordnet parse_wordnet_text(const std::string& text) {
    std::istringstream in(text);
    return mwn::parse_multiwordnet(in);
}

std::vector<mwn::AlignedToken> parse_bitext_text(const std::string& text) {
    std::istringstream in(text);
    return mwn::parse_bitext(in);
}

mwn::lab::GenParams params_from(const std::optional<py::dict>& params_template) {
    if (!params_template) {
        return mwn::lab::default_template();
    }
    return mwn::lab::GenParams::from_json(from_py(*params_template));
}

}  // namespace

PYBIND11_MODULE(_mwn, m) {
    m.doc() = "multilingual wordnet assumption toolkit";

    const py::object base = py::register_exception<mwn::error>(m, "Error");
    py::register_exception<mwn::validation_error>(m, "ValidationError", base.ptr());
    py::register_exception<mwn::usage_error>(m, "UsageError", base.ptr());
    py::register_exception<mwn::empty_population_error>(m, "EmptyPopulationError", base.ptr());

    py::class_<mwn::MultiWordnet>(m, "Wordnet")
        .def_static("parse", &parse_wordnet_text, py::arg("text"),
                    "build a model from JSON Lines text")
        .def("serialize",
             [](const mwn::MultiWordnet& model) { return mwn::serialize_multiwordnet(model); })
        .def("__len__", [](const mwn::MultiWordnet& model) { return model.size(); })
        .def("languages",
             [](const mwn::MultiWordnet& model) {
                 std::vector<std::string> codes;
                 for (const mwn::LanguageCode& language : model.languages()) {
                     codes.push_back(language.code);
                 }
                 return codes;
             })
        .def("stats",
             [](const mwn::MultiWordnet& model, const std::optional<std::string>& lang) {
                 return to_py(mwn::to_json(mwn::lexicon_stats(model), lang));
             },
             py::arg("lang") = std::nullopt)
        .def("vocabulary",
             [](const mwn::MultiWordnet& model, const std::string& language) {
                 std::vector<std::pair<std::string, std::string>> words;
                 for (const mwn::WordKey& word : model.vocabulary(language)) {
                     words.emplace_back(word.lemma, std::string(1, mwn::pos_to_char(word.pos)));
                 }
                 return words;
             },
             py::arg("language"))
        .def("synsets_of",
             [](const mwn::MultiWordnet& model, const std::string& language,
                const std::string& lemma, const std::string& pos) {
                 return model.synsets_of(
                     mwn::WordKeyView(language, lemma, mwn::parse_pos(pos)));
             },
             py::arg("language"), py::arg("lemma"), py::arg("pos"))
        .def("is_polysemous",
             [](const mwn::MultiWordnet& model, const std::string& language,
                const std::string& lemma, const std::string& pos) {
                 return model.is_polysemous(
                     mwn::WordKeyView(language, lemma, mwn::parse_pos(pos)));
             },
             py::arg("language"), py::arg("lemma"), py::arg("pos"))
        .def("are_synonyms",
             [](const mwn::MultiWordnet& model, const std::string& language,
                const std::string& first, const std::string& second, const std::string& pos) {
                 const mwn::Pos p = mwn::parse_pos(pos);
                 return model.are_synonyms(mwn::WordKeyView(language, first, p),
                                           mwn::WordKeyView(language, second, p));
             },
             py::arg("language"), py::arg("first"), py::arg("second"), py::arg("pos"))
        .def("translations_of_word",
             [](const mwn::MultiWordnet& model, const std::string& language,
                const std::string& lemma, const std::string& pos, const std::string& target) {
                 return model.translations_of_word(
                     mwn::WordKeyView(language, lemma, mwn::parse_pos(pos)), target);
             },
             py::arg("language"), py::arg("lemma"), py::arg("pos"), py::arg("target"))
        .def("profile",
             [](const mwn::MultiWordnet& model, const std::string& src, const std::string& tgt,
                const std::string& lemma, const std::string& pos) {
                 const mwn::WordKey word = mwn::WordKey::make(mwn::LanguageCode::parse(src),
                                                              lemma, mwn::parse_pos(pos));
                 return to_py(
                     mwn::to_json(mwn::profile(model, mwn::Direction::make(src, tgt), word)));
             },
             py::arg("src"), py::arg("tgt"), py::arg("lemma"), py::arg("pos"))
        .def("table1",
             [](const mwn::MultiWordnet& model, const std::string& src, const std::string& tgt) {
                 return to_py(mwn::to_json(mwn::table1(model, mwn::Direction::make(src, tgt))));
             },
             py::arg("src"), py::arg("tgt"))
        .def("table2",
             [](const mwn::MultiWordnet& model, const std::string& src, const std::string& tgt) {
                 return to_py(mwn::to_json(mwn::table2(model, mwn::Direction::make(src, tgt))));
             },
             py::arg("src"), py::arg("tgt"))
        .def("table1_csv",
             [](const mwn::MultiWordnet& model, const std::string& src, const std::string& tgt) {
                 return mwn::to_csv(mwn::table1(model, mwn::Direction::make(src, tgt)));
             },
             py::arg("src"), py::arg("tgt"))
        .def("table2_csv",
             [](const mwn::MultiWordnet& model, const std::string& src, const std::string& tgt) {
                 return mwn::to_csv(mwn::table2(model, mwn::Direction::make(src, tgt)));
             },
             py::arg("src"), py::arg("tgt"))
        .def("profiles_csv",
             [](const mwn::MultiWordnet& model, const std::string& src, const std::string& tgt) {
                 std::ostringstream out;
                 mwn::dump_profiles_csv(model, mwn::Direction::make(src, tgt), out);
                 return out.str();
             },
             py::arg("src"), py::arg("tgt"));

    m.def("annotate",
          [](const mwn::MultiWordnet& model, const std::string& bitext, const std::string& src,
             const std::string& tgt, const std::optional<std::string>& clusters) {
              const std::vector<mwn::AlignedToken> tokens = parse_bitext_text(bitext);
              std::optional<mwn::ClusterMap> cluster_map;
              if (clusters) {
                  std::istringstream in(*clusters);
                  cluster_map = mwn::parse_cluster_map(in);
              }
              std::ostringstream out;
              const mwn::AnnotationSummary summary =
                  mwn::annotate_bitext(model, mwn::Direction::make(src, tgt), tokens, out,
                                       cluster_map ? &*cluster_map : nullptr);
              return py::make_tuple(out.str(), to_py(mwn::to_json(summary)));
          },
          py::arg("model"), py::arg("bitext"), py::arg("src"), py::arg("tgt"),
          py::arg("clusters") = std::nullopt,
          "tag a bitext; returns (annotation JSON Lines, summary dict)");

    m.def("evaluate",
          [](const mwn::MultiWordnet& model, const std::string& bitext,
             const std::string& annotations) {
              const std::vector<mwn::AlignedToken> tokens = parse_bitext_text(bitext);
              std::istringstream in(annotations);
              const std::vector<mwn::AnnotationRecord> records = mwn::parse_annotations(in);
              return to_py(mwn::to_json(mwn::evaluate(records, tokens, model)));
          },
          py::arg("model"), py::arg("bitext"), py::arg("annotations"));

    m.def("weak_assumption_audit",
          [](const mwn::MultiWordnet& model, const std::string& bitext, const std::string& src,
             const std::string& tgt) {
              const std::vector<mwn::AlignedToken> tokens = parse_bitext_text(bitext);
              return to_py(mwn::to_json(mwn::weak_assumption_audit(
                  model, mwn::Direction::make(src, tgt), tokens)));
          },
          py::arg("model"), py::arg("bitext"), py::arg("src"), py::arg("tgt"));

    m.def("default_template",
          [] { return to_py(mwn::lab::default_template().to_json()); });

    m.def("generate",
          [](const std::optional<py::dict>& params_template, std::optional<std::uint64_t> seed) {
              mwn::lab::GenParams params = params_from(params_template);
              if (seed) {
                  params.seed = *seed;
              }
              return mwn::lab::generate(params);
          },
          py::arg("template") = std::nullopt, py::arg("seed") = std::nullopt);

    m.def("verify",
          [](const mwn::MultiWordnet& model, const std::string& src, const std::string& tgt) {
              py::list out;
              for (const mwn::lab::Violation& violation :
                   mwn::lab::verify(model, mwn::Direction::make(src, tgt))) {
                  out.append(to_py(mwn::lab::to_json(violation)));
              }
              return out;
          },
          py::arg("model"), py::arg("src"), py::arg("tgt"));

    m.def("fuzz",
          [](std::uint64_t cases, std::uint64_t seed,
             const std::optional<py::dict>& params_template) {
              return to_py(
                  mwn::lab::to_json(mwn::lab::fuzz(params_from(params_template), cases, seed)));
          },
          py::arg("cases"), py::arg("seed") = 0, py::arg("template") = std::nullopt);
}
