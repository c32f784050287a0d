#pragma once

#include <optional>
#include <string>

#include "lpmln/program.hpp"
#include "lpmln/se_models.hpp"
#include "lpmln/semantics.hpp"
#include "lpmln/weight_algebra.hpp"

namespace lpmln {

enum class EquivalenceMode { ordinary_w, ordinary_p, semi_strong, p_strong, w_strong };

std::string to_string(EquivalenceMode mode);

// Counterexample carried by a failed verdict. `note` is the display line;
// the typed fields keep the raw data for programmatic checks.
struct Witness {
    enum class Kind {
        missing_stable_model,   // model: on one side only (note names the side)
        degree_mismatch,        // model + weight_first/second
        probability_mismatch,   // model, probabilities in the note
        missing_se_model,       // se_first: on one side only
        se_weight_mismatch,     // se_first/second + weight_first/second (the two ratios)
        nonzero_scaling,        // weight_first: the offending constant
        failing_context,        // context: extension with differing stable models
    };

    Kind kind;
    std::string note;
    std::optional<LiteralSet> model;
    std::optional<SEInterpretation> se_first;
    std::optional<SEInterpretation> se_second;
    std::optional<SymbolicWeight> weight_first;
    std::optional<SymbolicWeight> weight_second;
    std::optional<Program> context;
};

struct EquivalenceVerdict {
    EquivalenceMode mode;
    bool holds = false;
    std::optional<Witness> witness;          // present iff !holds
    std::optional<SymbolicWeight> scaling;   // present iff mode == p_strong and holds
};

// Same stable models and, model by model, the same degrees.
EquivalenceVerdict ordinary_equivalent_w(const Program& l, const Program& m,
                                         const SolveOptions& options = {});

// Same stable models and, model by model, the same probabilities.
EquivalenceVerdict ordinary_equivalent_p(const Program& l, const Program& m,
                                         const SolveOptions& options = {});

// Same SE-model sets over the joint signature (weights ignored).
EquivalenceVerdict semi_strong_equivalent(const Program& l, const Program& m,
                                          const SeOptions& options = {});

// Semi-strong, and one constant (k, c) relates the SE-model weights of the
// two programs everywhere: W(l,(X,Y)) = exp(k*alpha + c) * W(m,(X,Y)).
EquivalenceVerdict p_strong_equivalent(const Program& l, const Program& m,
                                       const SeOptions& options = {});

// p-strong with the constant equal to (0, 0).
EquivalenceVerdict w_strong_equivalent(const Program& l, const Program& m,
                                       const SeOptions& options = {});

struct OracleOptions {
    std::size_t literal_cap = 6;  // joint literals plus fresh atoms
    bool parallel = true;
};

// Brute-force semi-strong check straight from the definition, restricted to
// the discriminating context family: for every pair of consistent sets
// X <= Y over the joint signature extended by `fresh_atoms` new atoms, the
// context N(X,Y) = {1: a. | a in X} u {1: a :- b. | a, b in Y-X, a != b}
// must leave both programs with the same stable models. The witness is the
// failing context of least index in that (Y, X) enumeration order.
EquivalenceVerdict oracle_semi_strong(const Program& l, const Program& m, std::size_t fresh_atoms,
                                      const OracleOptions& options = {});

}  // namespace lpmln
