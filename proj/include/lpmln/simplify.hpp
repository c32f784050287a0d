#pragma once

#include <string>
#include <vector>

#include "lpmln/program.hpp"
#include "lpmln/se_models.hpp"
#include "lpmln/semantics.hpp"

namespace lpmln {

// valid: removable with probabilities preserved; semi-valid: removable with
// the stable-model set preserved (degrees must be re-adjusted); neither.
enum class Validity { valid, semi_valid, neither };

std::string to_string(Validity v);

// Syntactic shape of one weighted rule. The conditions overlap: an empty
// head sets both constr1 and constr2 (the inclusion is vacuous), and
// constr3 implies both. contra and constr2 read classical negation too:
// a positive body holding both polarities of an atom is unsatisfiable, and
// a head literal refuted by the positive body counts as covered. Both
// widenings are what makes the verdict match semantic_validity on rules
// that mix the two negations; on rules without classical negation they
// change nothing.
struct RuleClass {
    bool taut = false;     // head meets positive body
    bool contra = false;   // positive body unsatisfiable (meets the negative
                           // body or holds complementary literals)
    bool constr1 = false;  // empty head
    bool constr2 = false;  // head inside negative body + refuted literals
    bool constr3 = false;  // all three parts empty
    Validity verdict = Validity::neither;

    std::string flags_string() const;  // "TAUT", "CONSTR1,CONSTR2", "" when none
};

// Verdict by shape and weight: taut/contra/constr3 rules are valid at any
// weight; constr1/constr2 rules are valid exactly at soft weight 0 and
// semi-valid otherwise.
RuleClass classify_rule(const WeightedRule& wr);

// Verdict by meaning: equivalence of {wr} against the empty program,
// p-strong for valid, semi-strong for semi-valid.
Validity semantic_validity(const WeightedRule& wr, const SeOptions& options = {});

struct RemovedRule {
    std::size_t index;  // position in the original program
    WeightedRule rule;
    RuleClass rule_class;

    std::string log_line() const;  // "REMOVED <flags> <verdict>: <rule text>"
};

struct SimplifyResult {
    SolveReport report;
    std::vector<RemovedRule> removed;  // in original rule order
    Program solver_program;            // the program actually enumerated
};

// Drops valid rules outright and pulls semi-valid rules out of the solving
// program while keeping them in the degree accounting: stable models come
// from the reduced program, each model's degree is then recomputed over the
// reduced program plus the semi-valid rules it satisfies, and probabilities
// follow from those adjusted degrees.
SimplifyResult simplify_and_solve(const Program& m, const SolveOptions& options = {});

}  // namespace lpmln
