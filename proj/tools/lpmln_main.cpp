#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lpmln/equivalence.hpp"
#include "lpmln/errors.hpp"
#include "lpmln/flattening.hpp"
#include "lpmln/parser.hpp"
#include "lpmln/printer.hpp"
#include "lpmln/report_io.hpp"
#include "lpmln/se_models.hpp"
#include "lpmln/semantics.hpp"
#include "lpmln/simplify.hpp"

namespace {

using namespace lpmln;

Program load_program(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_program(buffer.str());
}

LiteralSet parse_literal_list(const std::string& text) {
    LiteralSet out;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        if (!item.empty()) out.insert(parse_literal(item));
    }
    return out;
}

ReportFormat parse_format(const std::string& name) {
    return name == "json" ? ReportFormat::json : ReportFormat::table;
}

int run_solve(const std::string& file, bool map, const std::string& marginal_text, bool simplify,
              const std::string& universe_text, const std::string& format_name,
              std::optional<std::size_t> cap) {
    Program p = load_program(file);
    ReportFormat format = parse_format(format_name);
    SolveOptions options;
    options.literal_cap = cap.value_or(options.literal_cap);

    if (simplify) {
        std::cout << render_simplify(simplify_and_solve(p, options), format);
        return 0;
    }

    std::optional<LiteralSet> universe;
    if (!universe_text.empty()) {
        universe = p.literals().union_with(parse_literal_list(universe_text));
    }
    SolveReport report = stable_models(p, universe, options);

    if (!marginal_text.empty()) {
        Literal l = parse_literal(marginal_text);
        if (report.entries.empty()) {
            throw NoStableModels("no stable models: distribution undefined");
        }
        double total = 0.0;
        for (const SolveEntry& e : report.entries) {
            if (e.model.contains(l)) total += e.probability;
        }
        std::cout << render_marginal(l, total, format);
        return 0;
    }
    if (map) {
        if (report.entries.empty()) {
            throw NoStableModels("no stable models: nothing to maximize");
        }
        SolveReport best;
        for (const SolveEntry& e : report.entries) {
            if (approx_equal(e.degree, report.entries.front().degree)) best.entries.push_back(e);
        }
        std::cout << render_report(best, format);
        return 0;
    }
    std::cout << render_report(report, format);
    return 0;
}

int run_se_models(const std::string& file, const std::string& universe_text,
                  const std::string& format_name, std::optional<std::size_t> cap) {
    Program p = load_program(file);
    SeOptions options;
    options.literal_cap = cap.value_or(options.literal_cap);
    LiteralSet universe = p.literals();
    if (!universe_text.empty()) universe = universe.union_with(parse_literal_list(universe_text));
    std::cout << render_se_models(enumerate_se_models(p, universe, options),
                                  parse_format(format_name));
    return 0;
}

int run_check_eq(const std::string& file1, const std::string& file2, const std::string& mode,
                 const std::string& format_name, std::optional<std::size_t> cap) {
    Program l = load_program(file1);
    Program m = load_program(file2);
    SeOptions se_options;
    se_options.literal_cap = cap.value_or(se_options.literal_cap);
    SolveOptions solve_options;
    solve_options.literal_cap = cap.value_or(solve_options.literal_cap);

    EquivalenceVerdict verdict;
    if (mode == "semi") {
        verdict = semi_strong_equivalent(l, m, se_options);
    } else if (mode == "p") {
        verdict = p_strong_equivalent(l, m, se_options);
    } else if (mode == "w") {
        verdict = w_strong_equivalent(l, m, se_options);
    } else if (mode == "ordinary-w") {
        verdict = ordinary_equivalent_w(l, m, solve_options);
    } else {
        verdict = ordinary_equivalent_p(l, m, solve_options);
    }
    std::cout << render_verdict(verdict, parse_format(format_name));
    return verdict.holds ? 0 : 1;
}

int run_classify(const std::string& file, const std::string& format_name) {
    std::cout << render_classify(load_program(file), parse_format(format_name));
    return 0;
}

int run_flatten(const std::string& file, const std::string& universe_text,
                const std::vector<std::string>& target_texts, std::optional<std::size_t> cap) {
    Program p = load_program(file);
    SolveOptions options;
    options.literal_cap = cap.value_or(options.literal_cap);
    LiteralSet universe = universe_text.empty() ? p.literals() : parse_literal_list(universe_text);

    FlatteningState state = make_flattening(p, universe);
    std::cout << "% stage 0\n" << print_program(state.current);
    for (const std::string& text : target_texts) {
        LiteralSet target = parse_literal_list(text);
        FlatteningState next = extend(state, target, options);
        std::cout << "% stage " << next.stage() << "\n" << print_program(next.current);
        Prop3Report report = check_prop3(state, next, target, options);
        auto word = [](bool ok) { return ok ? "ok" : "FAIL"; };
        std::cout << "% prop3 base-models=" << word(report.base_models_ok)
                  << " model-update=" << word(report.model_update_ok)
                  << " multiplier=" << word(report.multiplier_ok)
                  << " degree-match=" << word(report.degree_match_ok) << "\n";
        for (const std::string& failure : report.failures) {
            std::cout << "% prop3-failure: " << failure << "\n";
        }
        state = std::move(next);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Toolkit for weighted answer-set programs: stable models, SE-models,\n"
                 "equivalence checking, rule simplification, flattening extensions."};
    app.require_subcommand(1);

    std::string file, file2, universe_text, format_name = "table";
    std::string marginal_text, mode = "semi";
    std::vector<std::string> targets;
    bool map = false, simplify = false;
    std::optional<std::size_t> cap;

    CLI::App* solve = app.add_subcommand("solve", "Enumerate stable models with probabilities");
    solve->add_option("file", file, "program file")->required();
    CLI::Option* opt_map = solve->add_flag("--map", map, "only maximal-degree models");
    CLI::Option* opt_marginal =
        solve->add_option("--marginal", marginal_text, "marginal probability of one literal");
    CLI::Option* opt_simplify =
        solve->add_flag("--simplify", simplify, "drop valid/semi-valid rules before solving");
    CLI::Option* opt_universe =
        solve->add_option("--universe", universe_text, "extra literals for the signature (a,b,-c)");
    solve->add_option("--format", format_name, "table or json")
        ->check(CLI::IsMember({"table", "json"}));
    solve->add_option("--cap", cap, "enumeration cap override");
    opt_map->excludes(opt_marginal)->excludes(opt_simplify);
    opt_marginal->excludes(opt_simplify);
    opt_simplify->excludes(opt_universe);

    CLI::App* se = app.add_subcommand("se-models", "Enumerate SE-models with weights");
    se->add_option("file", file, "program file")->required();
    se->add_option("--universe", universe_text, "extra literals for the signature (a,b,-c)");
    se->add_option("--format", format_name, "table or json")
        ->check(CLI::IsMember({"table", "json"}));
    se->add_option("--cap", cap, "enumeration cap override");

    CLI::App* check = app.add_subcommand("check-eq", "Decide an equivalence between two programs");
    check->add_option("file1", file, "first program file")->required();
    check->add_option("file2", file2, "second program file")->required();
    check->add_option("--mode", mode, "semi, p, w, ordinary-w, ordinary-p")
        ->check(CLI::IsMember({"semi", "p", "w", "ordinary-w", "ordinary-p"}));
    check->add_option("--format", format_name, "table or json")
        ->check(CLI::IsMember({"table", "json"}));
    check->add_option("--cap", cap, "enumeration cap override");

    CLI::App* classify = app.add_subcommand("classify", "Classify each rule by shape and weight");
    classify->add_option("file", file, "program file")->required();
    classify->add_option("--format", format_name, "table or json")
        ->check(CLI::IsMember({"table", "json"}));

    CLI::App* flatten = app.add_subcommand("flatten", "Grow flattening extensions stage by stage");
    flatten->add_option("file", file, "program file")->required();
    flatten->add_option("--universe", universe_text, "universe literals (a,b,-c)");
    flatten->add_option("--target", targets, "stable model to steer one extension (a,b)");
    flatten->add_option("--cap", cap, "enumeration cap override");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) {
            return run_solve(file, map, marginal_text, simplify, universe_text, format_name, cap);
        }
        if (se->parsed()) return run_se_models(file, universe_text, format_name, cap);
        if (check->parsed()) return run_check_eq(file, file2, mode, format_name, cap);
        if (classify->parsed()) return run_classify(file, format_name);
        if (flatten->parsed()) return run_flatten(file, universe_text, targets, cap);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const NoStableModels& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
