#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "mwn/annotate.hpp"
#include "mwn/assumptions.hpp"
#include "mwn/core.hpp"
#include "mwn/errors.hpp"
#include "mwn/ingest.hpp"
#include "mwn/reports.hpp"
#include "mwn/theorem_lab.hpp"

namespace {

// Any input path may be "-" for stdin.
template <typename F>
auto with_input(const std::string& path, F&& consume) {
    if (path == "-") {
        return consume(std::cin);
    }
    std::ifstream in(path, std::ios::binary);
    if (!in.is_open()) {
        throw mwn::validation_error("missing-file", "cannot open " + path);
    }
    return consume(in);
}

mwn::MultiWordnet load_wordnet(const std::string& path) {
    return with_input(path, [](std::istream& in) { return mwn::parse_multiwordnet(in); });
}

void print_json(const nlohmann::json& value) { std::cout << value.dump() << "\n"; }

struct StatsArgs {
    std::string wordnet;
    std::string language;
};

struct CheckArgs {
    std::string wordnet, source, target, word, pos;
};

struct ReportArgs {
    std::string wordnet, source, target, format = "json", dump;
    int table = 1;
};

struct AnnotateArgs {
    std::string wordnet, bitext, source, target, clusters, out;
};

struct EvaluateArgs {
    std::string wordnet, bitext, annotations;
};

struct FuzzArgs {
    std::string template_path, witness_path = "fuzz-witness.jsonl";
    std::uint64_t cases = 0;
    std::uint64_t seed = 0;
    bool inject_corruption = false;
};

int run_stats(const StatsArgs& args) {
    const mwn::MultiWordnet model = load_wordnet(args.wordnet);
    const std::optional<std::string> only =
        args.language.empty() ? std::nullopt : std::optional<std::string>(args.language);
    print_json(mwn::to_json(mwn::lexicon_stats(model), only));
    return 0;
}

int run_check(const CheckArgs& args) {
    const mwn::MultiWordnet model = load_wordnet(args.wordnet);
    const mwn::Direction direction = mwn::Direction::make(args.source, args.target);
    const mwn::WordKey word = mwn::WordKey::make(mwn::LanguageCode::parse(args.source),
                                                 args.word, mwn::parse_pos(args.pos));
    print_json(mwn::to_json(mwn::profile(model, direction, word)));
    return 0;
}

int run_report(const ReportArgs& args) {
    const mwn::MultiWordnet model = load_wordnet(args.wordnet);
    const mwn::Direction direction = mwn::Direction::make(args.source, args.target);
    if (args.table == 1) {
        const mwn::Table1Report report = mwn::table1(model, direction);
        if (args.format == "csv") {
            std::cout << mwn::to_csv(report);
        } else {
            print_json(mwn::to_json(report));
        }
    } else {
        const mwn::Table2Report report = mwn::table2(model, direction);
        if (args.format == "csv") {
            std::cout << mwn::to_csv(report);
        } else {
            print_json(mwn::to_json(report));
        }
    }
    if (!args.dump.empty()) {
        std::ofstream out(args.dump, std::ios::binary);
        if (!out.is_open()) {
            throw mwn::validation_error("unwritable-file", "cannot write " + args.dump);
        }
        mwn::dump_profiles_csv(model, direction, out);
    }
    return 0;
}

int run_annotate(const AnnotateArgs& args) {
    const mwn::MultiWordnet model = load_wordnet(args.wordnet);
    const mwn::Direction direction = mwn::Direction::make(args.source, args.target);
    const std::vector<mwn::AlignedToken> tokens = with_input(
        args.bitext, [](std::istream& in) { return mwn::parse_bitext(in); });
    std::optional<mwn::ClusterMap> clusters;
    if (!args.clusters.empty()) {
        clusters = with_input(args.clusters,
                              [](std::istream& in) { return mwn::parse_cluster_map(in); });
    }

    mwn::AnnotationSummary summary;
    if (args.out == "-") {
        summary = mwn::annotate_bitext(model, direction, tokens, std::cout,
                                       clusters ? &*clusters : nullptr);
    } else {
        std::ofstream out(args.out, std::ios::binary);
        if (!out.is_open()) {
            throw mwn::validation_error("unwritable-file", "cannot write " + args.out);
        }
        summary = mwn::annotate_bitext(model, direction, tokens, out,
                                       clusters ? &*clusters : nullptr);
    }
    nlohmann::json result = mwn::to_json(summary);
    result["audit"] = mwn::to_json(mwn::weak_assumption_audit(model, direction, tokens));
    print_json(result);
    return 0;
}

int run_evaluate(const EvaluateArgs& args) {
    const mwn::MultiWordnet model = load_wordnet(args.wordnet);
    const std::vector<mwn::AlignedToken> tokens = with_input(
        args.bitext, [](std::istream& in) { return mwn::parse_bitext(in); });
    const std::vector<mwn::AnnotationRecord> records = with_input(
        args.annotations, [](std::istream& in) { return mwn::parse_annotations(in); });
    print_json(mwn::to_json(mwn::evaluate(records, tokens, model)));
    return 0;
}

int run_fuzz(const FuzzArgs& args) {
    mwn::lab::GenParams params = mwn::lab::default_template();
    if (!args.template_path.empty()) {
        const nlohmann::json object = with_input(args.template_path, [](std::istream& in) {
            try {
                return nlohmann::json::parse(in);
            } catch (const nlohmann::json::exception& e) {
                throw mwn::validation_error("invalid-json", e.what());
            }
        });
        params = mwn::lab::GenParams::from_json(object);
    }
    const mwn::lab::FuzzReport report =
        mwn::lab::fuzz(params, args.cases, args.seed, args.inject_corruption);
    print_json(mwn::lab::to_json(report));
    if (report.violation_count > 0) {
        std::ofstream out(args.witness_path, std::ios::binary);
        if (!out.is_open()) {
            throw mwn::validation_error("unwritable-file", "cannot write " + args.witness_path);
        }
        out << report.witness->model_lines;
        std::cerr << "theorem-violation: " << report.violation_count
                  << " violation(s); first witness instance written to " << args.witness_path
                  << "\n";
        return 4;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multilingual wordnet assumption toolkit"};
    app.require_subcommand(1);

    StatsArgs stats_args;
    CLI::App* stats = app.add_subcommand("stats", "lexicon statistics as JSON");
    stats->add_option("--wordnet", stats_args.wordnet, "model JSONL, - for stdin")->required();
    stats->add_option("--lang", stats_args.language, "restrict counts to one language");

    CheckArgs check_args;
    CLI::App* check = app.add_subcommand("check", "assumption profile of one word as JSON");
    check->add_option("--wordnet", check_args.wordnet, "model JSONL, - for stdin")->required();
    check->add_option("--src", check_args.source, "source language code")->required();
    check->add_option("--tgt", check_args.target, "target language code")->required();
    check->add_option("--word", check_args.word, "source lemma")->required();
    check->add_option("--pos", check_args.pos, "part of speech (n/v/a/r or long form)")
        ->required();

    ReportArgs report_args;
    CLI::App* report = app.add_subcommand("report", "aggregate assumption tables");
    report->add_option("--wordnet", report_args.wordnet, "model JSONL, - for stdin")
        ->required();
    report->add_option("--src", report_args.source, "source language code")->required();
    report->add_option("--tgt", report_args.target, "target language code")->required();
    report->add_option("--table", report_args.table, "1 = assumption shares, 2 = cross table")
        ->required()
        ->check(CLI::IsMember({1, 2}));
    report->add_option("--format", report_args.format, "csv or json (default json)")
        ->check(CLI::IsMember({"csv", "json"}));
    report->add_option("--dump", report_args.dump, "also write per-word profile CSV here");

    AnnotateArgs annotate_args;
    CLI::App* annotate =
        app.add_subcommand("annotate", "sense-tag a word-aligned bitext via shared synsets");
    annotate->add_option("--wordnet", annotate_args.wordnet, "model JSONL, - for stdin")
        ->required();
    annotate->add_option("--bitext", annotate_args.bitext, "aligned tokens JSONL, - for stdin")
        ->required();
    annotate->add_option("--src", annotate_args.source, "source language code")->required();
    annotate->add_option("--tgt", annotate_args.target, "default target language code")
        ->required();
    annotate->add_option("--clusters", annotate_args.clusters,
                         "synset-to-cluster TSV; switches to homonym-level tagging");
    annotate->add_option("--out", annotate_args.out, "annotation JSONL sink, - for stdout")
        ->required();

    EvaluateArgs evaluate_args;
    CLI::App* evaluate =
        app.add_subcommand("evaluate", "score annotations against gold tags in the bitext");
    evaluate->add_option("--wordnet", evaluate_args.wordnet, "model JSONL, - for stdin")
        ->required();
    evaluate->add_option("--bitext", evaluate_args.bitext, "aligned tokens JSONL, - for stdin")
        ->required();
    evaluate->add_option("--annotations", evaluate_args.annotations,
                         "annotation JSONL, - for stdin")
        ->required();

    FuzzArgs fuzz_args;
    CLI::App* fuzz = app.add_subcommand("fuzz", "generate random models and verify theorems");
    fuzz->add_option("--cases", fuzz_args.cases, "number of generated instances")->required();
    fuzz->add_option("--seed", fuzz_args.seed, "base seed; case i uses seed + i");
    fuzz->add_option("--template", fuzz_args.template_path,
                     "generation parameters JSON (default: built-in template)");
    fuzz->add_option("--witness", fuzz_args.witness_path,
                     "where to write the first violating instance");
    fuzz->add_flag("--inject-corruption", fuzz_args.inject_corruption)->group("");

    try {
        app.parse(argc, argv);
        if (app.got_subcommand(stats)) {
            return run_stats(stats_args);
        }
        if (app.got_subcommand(check)) {
            return run_check(check_args);
        }
        if (app.got_subcommand(report)) {
            return run_report(report_args);
        }
        if (app.got_subcommand(annotate)) {
            return run_annotate(annotate_args);
        }
        if (app.got_subcommand(evaluate)) {
            return run_evaluate(evaluate_args);
        }
        if (app.got_subcommand(fuzz)) {
            return run_fuzz(fuzz_args);
        }
        return 2;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);
        }
        std::cerr << "usage: " << e.what() << "\n";
        return 2;
    } catch (const mwn::empty_population_error& e) {
        std::cerr << e.code() << ": " << e.what() << "\n";
        return 3;
    } catch (const mwn::usage_error& e) {
        std::cerr << e.code() << ": " << e.what() << "\n";
        return 2;
    } catch (const mwn::error& e) {
        std::cerr << e.code() << ": " << e.what() << "\n";
        return 1;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "invalid-json: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal-error: " << e.what() << "\n";
        return 1;
    }
}
