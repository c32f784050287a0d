#pragma once

#include <string>
#include <vector>

#include "lpmln/program.hpp"
#include "lpmln/semantics.hpp"

namespace lpmln {

// The two hard rules steering one fresh atom a by a trace (x, not y):
//   alpha : :- x, not y, a.
//   alpha : a :- x, not y.
// x and y must be consistent, a a positive literal whose atom is outside
// x u y.
Program build_r(const LiteralSet& x, const LiteralSet& y, const Literal& a);

// A base program grown by hard facts over a universe and then, stage by
// stage, one fresh-atom gadget per chosen probabilistic stable model.
// Immutable; extend() returns the next stage.
struct FlatteningState {
    Program base;                // M
    LiteralSet universe;         // U, covering lit(M)
    std::vector<Literal> fresh;  // one atom per stage, in order
    Program current;             // the stage program

    std::size_t stage() const { return fresh.size(); }
};

// Stage 0: M plus the hard fact `alpha : a.` for every a in U. The universe
// must contain every literal of M.
FlatteningState make_flattening(const Program& m, const LiteralSet& universe);

// Stage k+1: adds the gadget for the target's trace on U under a fresh atom.
// The target must be a probabilistic stable model of the current program.
FlatteningState extend(const FlatteningState& state, const LiteralSet& target,
                       const SolveOptions& options = {});

// One extension step checked against the expected behaviour: (i) stage 0
// has every consistent subset of U stable; (ii) the new stage keeps the old
// stable models and adds exactly the fresh-atom completions of models
// tracing the target; (iii) surviving models gain degree factor e^{2*alpha},
// except e^{alpha} on the target trace; (iv) each target-trace model and its
// fresh completion share one degree in the new stage.
struct Prop3Report {
    bool base_models_ok = false;
    bool model_update_ok = false;
    bool multiplier_ok = false;
    bool degree_match_ok = false;
    std::vector<std::string> failures;

    bool all_ok() const {
        return base_models_ok && model_update_ok && multiplier_ok && degree_match_ok;
    }
};

Prop3Report check_prop3(const FlatteningState& before, const FlatteningState& after,
                        const LiteralSet& target, const SolveOptions& options = {});

}  // namespace lpmln
