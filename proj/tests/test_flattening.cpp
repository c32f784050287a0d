#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>

#include "doctest.h"
#include "generators.hpp"
#include "lpmln/flattening.hpp"
#include "lpmln/parser.hpp"
#include "lpmln/printer.hpp"

using namespace lpmln;

namespace {

LiteralSet lits(std::initializer_list<const char*> names) {
    LiteralSet out;
    for (const char* n : names) out.insert(parse_literal(n));
    return out;
}

// Report entries as a sorted (model, degree) map for golden comparisons.
std::map<std::string, SymbolicWeight> degree_map(const Program& p) {
    std::map<std::string, SymbolicWeight> out;
    for (const SolveEntry& e : stable_models(p).entries) out.emplace(e.model.to_string(), e.degree);
    return out;
}

// Lexicographically least probabilistic stable model whose restriction to
// the universe equals the wanted trace.
LiteralSet pick_target(const FlatteningState& state, const LiteralSet& trace) {
    std::optional<LiteralSet> best;
    for (const SolveEntry& e : stable_models(state.current).entries) {
        if (!e.probabilistic || e.model.intersect_with(state.universe) != trace) continue;
        if (!best || e.model < *best) best = e.model;
    }
    REQUIRE_MESSAGE(best.has_value(), "no probabilistic model traces " << trace.to_string());
    return *best;
}

}  // namespace

TEST_SUITE_BEGIN("flattening");

TEST_CASE("the steering gadget has the two hard rules") {
    Program r = build_r(lits({"a"}), lits({"b"}), parse_literal("c"));
    CHECK(print_program(r) == "alpha : :- a, c, not b.\nalpha : c :- a, not b.\n");

    Program bare = build_r(LiteralSet{}, LiteralSet{}, parse_literal("a"));
    CHECK(print_program(bare) == "alpha : :- a.\nalpha : a.\n");

    Program negative_trace = build_r(lits({"-a"}), LiteralSet{}, parse_literal("c"));
    CHECK(print_program(negative_trace) == "alpha : :- -a, c.\nalpha : c :- -a.\n");
}

TEST_CASE("the gadget rejects malformed inputs") {
    CHECK_THROWS_AS(build_r(lits({"a", "-a"}), LiteralSet{}, parse_literal("c")),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_r(LiteralSet{}, lits({"b", "-b"}), parse_literal("c")),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_r(lits({"a"}), LiteralSet{}, Literal::negative("c")),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_r(lits({"a"}), LiteralSet{}, parse_literal("a")),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_r(LiteralSet{}, lits({"-c"}), parse_literal("c")),
                    std::invalid_argument);
}

TEST_CASE("stage zero appends one hard fact per universe literal") {
    Program l = parse_program("alpha : a v b.\n1 : b :- not a.");
    FlatteningState t0 = make_flattening(l, lits({"a", "b"}));
    CHECK(t0.stage() == 0);
    CHECK(t0.fresh.empty());
    CHECK(print_program(t0.current) ==
          "alpha : a v b.\n1 : b :- not a.\nalpha : a.\nalpha : b.\n");
    CHECK(t0.base == l);

    CHECK_THROWS_AS(make_flattening(l, lits({"a"})), std::invalid_argument);
}

TEST_CASE("the first two stages reproduce the worked degree table") {
    Program l = parse_program("alpha : a v b.\n1 : b :- not a.");

    std::map<std::string, SymbolicWeight> base = degree_map(l);
    REQUIRE(base.size() == 3);
    CHECK(base.at("{}") == SymbolicWeight{0, 0.0});
    CHECK(base.at("{a}") == SymbolicWeight{1, 1.0});
    CHECK(base.at("{b}") == SymbolicWeight{1, 1.0});

    FlatteningState t0 = make_flattening(l, lits({"a", "b"}));
    std::map<std::string, SymbolicWeight> zero = degree_map(t0.current);
    REQUIRE(zero.size() == 4);
    CHECK(zero.at("{}") == SymbolicWeight{0, 0.0});
    CHECK(zero.at("{a}") == SymbolicWeight{2, 1.0});
    CHECK(zero.at("{b}") == SymbolicWeight{2, 1.0});
    CHECK(zero.at("{a,b}") == SymbolicWeight{3, 1.0});

    FlatteningState t1 = extend(t0, lits({"a", "b"}));
    CHECK(t1.stage() == 1);
    REQUIRE(t1.fresh.size() == 1);
    CHECK(t1.fresh[0] == Literal::positive("__f1"));
    std::map<std::string, SymbolicWeight> one = degree_map(t1.current);
    REQUIRE(one.size() == 5);
    CHECK(one.at("{}") == SymbolicWeight{2, 0.0});
    CHECK(one.at("{a}") == SymbolicWeight{4, 1.0});
    CHECK(one.at("{b}") == SymbolicWeight{4, 1.0});
    CHECK(one.at("{a,b}") == SymbolicWeight{4, 1.0});
    CHECK(one.at("{__f1,a,b}") == SymbolicWeight{4, 1.0});

    Prop3Report checked = check_prop3(t0, t1, lits({"a", "b"}));
    CHECK(checked.all_ok());
    CHECK(checked.failures.empty());
}

TEST_CASE("extension composes and validates its target") {
    Program l = parse_program("alpha : a v b.\n1 : b :- not a.");
    FlatteningState t0 = make_flattening(l, lits({"a", "b"}));
    FlatteningState t1 = extend(t0, lits({"a", "b"}));
    FlatteningState t2 = extend(t1, lits({"a"}));
    CHECK(t2.stage() == 2);
    CHECK(t2.fresh[1] == Literal::positive("__f2"));
    CHECK(t2.current.size() == t1.current.size() + 2);
    CHECK(check_prop3(t1, t2, lits({"a"})).all_ok());

    // The empty model survives every stage but never reaches the top hard
    // count, so it is not a legal target.
    CHECK_THROWS_WITH_AS(extend(t1, LiteralSet{}),
                         "target {} is not a probabilistic stable model of the current stage",
                         std::invalid_argument);
    // Reserved atoms cannot come from the parser, so build the set directly.
    CHECK_THROWS_AS(extend(t1, LiteralSet{Literal::positive("__f1")}), std::invalid_argument);
}

TEST_CASE("stage zero handles a universe with classical negation") {
    FlatteningState t0 = make_flattening(Program{}, lits({"a", "-b"}));
    std::map<std::string, SymbolicWeight> zero = degree_map(t0.current);
    REQUIRE(zero.size() == 4);
    CHECK(zero.count("{a,-b}") == 1);

    FlatteningState t1 = extend(t0, lits({"a", "-b"}));
    CHECK(check_prop3(t0, t1, lits({"a", "-b"})).all_ok());

    // Both polarities in the universe: the inconsistent subset is skipped.
    FlatteningState both = make_flattening(Program{}, lits({"a", "-a"}));
    CHECK(degree_map(both.current).size() == 3);
}

TEST_CASE("one-step extensions satisfy the stage checks on random bases") {
    std::mt19937 rng(1818);
    LiteralSet universe = lits({"a", "b"});
    for (int trial = 0; trial < 30; ++trial) {
        Program base = test_gen::random_program(rng, 2, 3, false);
        FlatteningState t0 = make_flattening(base, universe);
        SolveReport report = stable_models(t0.current);
        std::vector<const SolveEntry*> candidates;
        for (const SolveEntry& e : report.entries) {
            if (e.probabilistic) candidates.push_back(&e);
        }
        REQUIRE_FALSE(candidates.empty());
        const SolveEntry* chosen =
            candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng)];
        FlatteningState t1 = extend(t0, chosen->model);
        Prop3Report checked = check_prop3(t0, t1, chosen->model);
        CAPTURE(print_program(base));
        CAPTURE(chosen->model.to_string());
        for (const std::string& f : checked.failures) CAPTURE(f);
        CHECK(checked.all_ok());
    }
}

TEST_CASE("a four-step chain equalizes the hard counts of every trace") {
    // Driving the extension at traces {a,b}, {a}, {b}, {a,b} in that order
    // lifts every stable model to the same hard count, making all four
    // subsets of the universe probabilistic.
    LiteralSet universe = lits({"a", "b"});
    std::vector<LiteralSet> traces{lits({"a", "b"}), lits({"a"}), lits({"b"}),
                                   lits({"a", "b"})};
    for (const char* text : {"2 : a v b.\n1 : b :- a.", "1 : b.\n1 : a :- not b."}) {
        Program base = parse_program(text);
        FlatteningState state = make_flattening(base, universe);
        for (const LiteralSet& trace : traces) {
            LiteralSet target = pick_target(state, trace);
            FlatteningState next = extend(state, target);
            CHECK(check_prop3(state, next, target).all_ok());
            state = next;
        }
        CHECK(state.stage() == 4);

        SolveReport report = stable_models(state.current);
        std::set<std::string> probabilistic_traces;
        for (const SolveEntry& e : report.entries) {
            CHECK(e.probabilistic);
            CHECK(e.degree.alpha_count == 8);
            probabilistic_traces.insert(e.model.intersect_with(universe).to_string());
        }
        CHECK(probabilistic_traces ==
              std::set<std::string>{"{}", "{a}", "{b}", "{a,b}"});
    }
}

TEST_SUITE_END();
