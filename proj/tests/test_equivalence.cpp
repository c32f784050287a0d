#include <random>

#include "doctest.h"
#include "generators.hpp"
#include "lpmln/equivalence.hpp"
#include "lpmln/parser.hpp"

using namespace lpmln;

namespace {

LiteralSet lits(std::initializer_list<const char*> names) {
    LiteralSet out;
    for (const char* n : names) out.insert(parse_literal(n));
    return out;
}

// The running pair: a disjunction with a dependent rule against a fact with
// a default. Weight pattern (w1, w2, w3, w4).
Program disj_form(double w1, double w2) {
    return parse_program(std::to_string(w1) + " : a v b.\n" + std::to_string(w2) + " : b :- a.");
}

Program choice_form(double w3, double w4) {
    return parse_program(std::to_string(w3) + " : b.\n" + std::to_string(w4) + " : a :- not b.");
}

}  // namespace

TEST_SUITE_BEGIN("equivalence");

TEST_CASE("every mode is reflexive") {
    std::mt19937 rng(1111);
    for (int trial = 0; trial < 40; ++trial) {
        Program m = test_gen::random_program(rng, 3, 5, true);
        CHECK(ordinary_equivalent_w(m, m).holds);
        CHECK(ordinary_equivalent_p(m, m).holds);
        CHECK(semi_strong_equivalent(m, m).holds);
        EquivalenceVerdict p = p_strong_equivalent(m, m);
        CHECK(p.holds);
        if (!m.empty()) {
            REQUIRE(p.scaling.has_value());
            CHECK(approx_equal(*p.scaling, SymbolicWeight::one()));
        }
        CHECK(w_strong_equivalent(m, m).holds);
    }
}

TEST_CASE("ordinary equivalence compares stable models over the joint signature") {
    EquivalenceVerdict v = ordinary_equivalent_w(parse_program("1 : a."), Program{});
    CHECK_FALSE(v.holds);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->kind == Witness::Kind::missing_stable_model);
    CHECK(v.witness->model == lits({"a"}));
    CHECK(v.witness->note == "stable model {a} appears only in the first program");
}

TEST_CASE("ordinary-w splits hairs that ordinary-p ignores") {
    // A tautology carries hard weight: its union with a fact shifts every
    // degree by one alpha but leaves all probabilities alone.
    Program with_taut = parse_program("alpha : a :- a.\n1 : a.");
    Program fact = parse_program("1 : a.");

    EquivalenceVerdict w = ordinary_equivalent_w(with_taut, fact);
    CHECK_FALSE(w.holds);
    REQUIRE(w.witness.has_value());
    CHECK(w.witness->kind == Witness::Kind::degree_mismatch);
    CHECK(w.witness->model == LiteralSet{});
    CHECK(w.witness->weight_first == SymbolicWeight{1, 0.0});
    CHECK(w.witness->weight_second == SymbolicWeight{0, 0.0});
    CHECK(w.witness->note ==
          "model {} has degree 1*alpha + 0 in the first program and 0*alpha + 0 in the second");

    CHECK(ordinary_equivalent_p(with_taut, fact).holds);
}

TEST_CASE("ordinary-w catches pure weight changes") {
    EquivalenceVerdict v = ordinary_equivalent_w(parse_program("1 : a."), parse_program("2 : a."));
    CHECK_FALSE(v.holds);
    CHECK(v.witness->kind == Witness::Kind::degree_mismatch);
    CHECK(v.witness->model == lits({"a"}));

    EquivalenceVerdict p = ordinary_equivalent_p(parse_program("1 : a."), parse_program("2 : a."));
    CHECK_FALSE(p.holds);
    CHECK(p.witness->kind == Witness::Kind::probability_mismatch);
}

TEST_CASE("semi-strong equivalence of the disjunction and choice forms") {
    CHECK(semi_strong_equivalent(disj_form(2, 1), choice_form(1, 1)).holds);
    // Any weights: semi-strong ignores them.
    CHECK(semi_strong_equivalent(disj_form(5, 0), choice_form(7, 3)).holds);
}

TEST_CASE("a hard constraint is semi-strongly removable") {
    CHECK(semi_strong_equivalent(parse_program("alpha : :- a."), Program{}).holds);
}

TEST_CASE("a soft fact is not semi-strongly removable") {
    EquivalenceVerdict v = semi_strong_equivalent(parse_program("1 : a."), Program{});
    CHECK_FALSE(v.holds);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->kind == Witness::Kind::missing_se_model);
    CHECK(v.witness->se_first == SEInterpretation(lits({}), lits({"a"})));
    CHECK(v.witness->note == "SE-model ({} | {a}) appears only in the second program");
}

TEST_CASE("p-strong equivalence finds the scaling constant") {
    EquivalenceVerdict v = p_strong_equivalent(disj_form(2, 1), choice_form(1, 1));
    CHECK(v.holds);
    REQUIRE(v.scaling.has_value());
    CHECK(approx_equal(*v.scaling, SymbolicWeight{0, 1.0}));

    // Symmetry inverts the constant.
    EquivalenceVerdict back = p_strong_equivalent(choice_form(1, 1), disj_form(2, 1));
    CHECK(back.holds);
    CHECK(approx_equal(*back.scaling, SymbolicWeight{0, -1.0}));
}

TEST_CASE("p-strong equivalence rejects inconsistent weightings") {
    EquivalenceVerdict v = p_strong_equivalent(disj_form(2, 1), choice_form(2, 1));
    CHECK_FALSE(v.holds);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->kind == Witness::Kind::se_weight_mismatch);

    // A failed semi-strong check propagates its witness.
    EquivalenceVerdict semi_fail = p_strong_equivalent(parse_program("1 : a."), Program{});
    CHECK_FALSE(semi_fail.holds);
    CHECK(semi_fail.mode == EquivalenceMode::p_strong);
    CHECK(semi_fail.witness->kind == Witness::Kind::missing_se_model);
}

TEST_CASE("a hard tautology scales weights by one alpha") {
    EquivalenceVerdict v = p_strong_equivalent(parse_program("alpha : a :- a."), Program{});
    CHECK(v.holds);
    REQUIRE(v.scaling.has_value());
    CHECK(approx_equal(*v.scaling, SymbolicWeight{1, 0.0}));

    EquivalenceVerdict w = w_strong_equivalent(parse_program("alpha : a :- a."), Program{});
    CHECK_FALSE(w.holds);
    CHECK(w.witness->kind == Witness::Kind::nonzero_scaling);
    CHECK(w.witness->weight_first == SymbolicWeight{1, 0.0});
}

TEST_CASE("w-strong equivalence needs the zero constant") {
    CHECK(w_strong_equivalent(disj_form(2, 0), choice_form(0, 2)).holds);

    EquivalenceVerdict v = w_strong_equivalent(disj_form(2, 1), choice_form(1, 1));
    CHECK_FALSE(v.holds);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->kind == Witness::Kind::nonzero_scaling);
    CHECK(v.witness->note == "the scaling constant 0*alpha + 1 is not 0*alpha + 0");
}

TEST_CASE("the equivalence modes form a chain") {
    std::mt19937 rng(1212);
    for (int trial = 0; trial < 40; ++trial) {
        Program m = test_gen::random_program(rng, 3, 4, true);
        Program l = (trial % 2 == 0)
                        ? m
                        : program_union(m, parse_program("alpha : a :- a.\n0 : b :- b."));
        bool w = w_strong_equivalent(l, m).holds;
        bool p = p_strong_equivalent(l, m).holds;
        bool semi = semi_strong_equivalent(l, m).holds;
        if (w) CHECK(p);
        if (p) CHECK(semi);
        // The constructed pairs are all p-strong; the tautology padding
        // breaks w-strong exactly when it carries hard weight.
        CHECK(p);
        CHECK(w == (trial % 2 == 0));
    }
}

TEST_CASE("p-strong pairs stay interchangeable under random contexts") {
    std::mt19937 rng(1313);
    Program l = disj_form(2, 1);
    Program m = choice_form(1, 1);
    REQUIRE(p_strong_equivalent(l, m).holds);
    REQUIRE_FALSE(w_strong_equivalent(l, m).holds);

    Program lz = disj_form(2, 0);
    Program mz = choice_form(0, 2);
    REQUIRE(w_strong_equivalent(lz, mz).holds);

    for (int trial = 0; trial < 40; ++trial) {
        Program n = test_gen::random_program(rng, 3, 5, true);
        CHECK(ordinary_equivalent_p(program_union(l, n), program_union(m, n)).holds);
        CHECK(ordinary_equivalent_w(program_union(lz, n), program_union(mz, n)).holds);
    }
}

TEST_CASE("the context oracle rejects a soft fact against the empty program") {
    EquivalenceVerdict v = oracle_semi_strong(parse_program("1 : a."), Program{}, 1);
    CHECK_FALSE(v.holds);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->kind == Witness::Kind::failing_context);
    REQUIRE(v.witness->context.has_value());
    CHECK(v.witness->context->empty());
    CHECK(v.witness->note ==
          "under a context of 0 rules, stable model {a} appears only in the first extended "
          "program");
}

TEST_CASE("the context oracle accepts the disjunction and choice forms") {
    EquivalenceVerdict v = oracle_semi_strong(disj_form(2, 1), choice_form(1, 1), 1);
    CHECK(v.holds);
    CHECK(v.mode == EquivalenceMode::semi_strong);
}

TEST_CASE("the context oracle agrees with the SE-model check") {
    std::mt19937 rng(1414);
    for (int trial = 0; trial < 50; ++trial) {
        Program l = test_gen::random_program(rng, 2, 3, true);
        Program m = test_gen::random_program(rng, 2, 3, true);
        OracleOptions opts;
        opts.parallel = (trial % 2 == 0);
        CHECK(oracle_semi_strong(l, m, 1, opts).holds == semi_strong_equivalent(l, m).holds);
        // A zero-weight tautology never changes the verdict.
        Program padded = program_union(l, parse_program("0 : a :- a."));
        CHECK(oracle_semi_strong(padded, l, 1, opts).holds);
    }
}

TEST_CASE("the context oracle enforces its smaller cap") {
    Program wide = parse_program("1 : a v b v c v d v e v f.");
    CHECK_THROWS_AS(oracle_semi_strong(wide, Program{}, 1), CapExceeded);
    CHECK_NOTHROW(oracle_semi_strong(wide, Program{}, 0));
}

TEST_SUITE_END();
