#pragma once

#include <optional>
#include <vector>

#include "lpmln/program.hpp"
#include "lpmln/weight_algebra.hpp"

namespace lpmln {

// x |= r: whenever b+(r) <= x and b-(r) misses x, the head meets x.
// Throws std::invalid_argument on inconsistent x.
bool satisfies(const LiteralSet& x, const Rule& r);
bool satisfies(const LiteralSet& x, const std::vector<Rule>& rules);
bool satisfies(const LiteralSet& x, const Program& m);

// M_x: the weighted rules x satisfies, multiplicity preserved.
Program lpmln_reduct(const Program& m, const LiteralSet& x);

// P^x: drops rules whose negative body meets x, strips negative bodies.
std::vector<Rule> gl_reduct(const std::vector<Rule>& p, const LiteralSet& x);

// x is stable for M iff x is minimal among models of the program obtained by
// unweighting M_x and taking its GL-reduct by x.
bool is_stable_model(const Program& m, const LiteralSet& x);

struct SolveOptions {
    std::size_t literal_cap = 16;
    bool parallel = true;
};

struct SolveEntry {
    LiteralSet model;
    SymbolicWeight degree;
    double probability = 0.0;
    bool probabilistic = false;
};

struct SolveReport {
    std::vector<SolveEntry> entries;
};

// Enumerates consistent subsets of the universe (default lit(M)), keeps the
// stable ones, attaches degrees and limit probabilities. Sorted by degree
// descending, ties in literal order. An explicit universe must contain every
// program literal; a universe above the cap raises CapExceeded.
SolveReport stable_models(const Program& m, std::optional<LiteralSet> universe = std::nullopt,
                          const SolveOptions& options = {});

// Stable models of maximal degree (all ties). Throws NoStableModels when
// there are none.
std::vector<LiteralSet> map_inference(const Program& m, const SolveOptions& options = {});

// Total probability of stable models containing l. Throws NoStableModels
// when there are none.
double marginal(const Program& m, const Literal& l, const SolveOptions& options = {});

}  // namespace lpmln
