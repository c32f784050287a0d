#pragma once

#include <map>
#include <string>
#include <vector>

#include "lpmln/program.hpp"
#include "lpmln/semantics.hpp"
#include "lpmln/weight_algebra.hpp"

namespace lpmln {

// Pair (X, Y) with X <= Y, both consistent; validated at construction.
// Total when X = Y.
class SEInterpretation {
public:
    SEInterpretation(LiteralSet lower, LiteralSet upper);

    const LiteralSet& lower() const { return lower_; }
    const LiteralSet& upper() const { return upper_; }
    bool total() const { return lower_ == upper_; }

    std::string to_string() const;  // "({a} | {a,b})"

    friend bool operator==(const SEInterpretation&, const SEInterpretation&) = default;
    friend std::strong_ordering operator<=>(const SEInterpretation& a, const SEInterpretation& b) {
        if (auto c = a.upper_ <=> b.upper_; c != 0) return c;
        return a.lower_ <=> b.lower_;
    }

private:
    LiteralSet lower_;
    LiteralSet upper_;
};

// All SE-models of one program over one universe. Weights are keyed by the
// upper set alone: W(M,(X,Y)) only reads Y.
struct SEModelSet {
    std::vector<SEInterpretation> models;  // sorted by (upper, lower)
    std::map<LiteralSet, SymbolicWeight> weight_by_upper;

    bool contains(const SEInterpretation& se) const;
    const SymbolicWeight& weight_of(const SEInterpretation& se) const;
    bool same_models(const SEModelSet& other) const { return models == other.models; }
};

// (X, Y) is an SE-model of M iff X and Y both satisfy the program obtained
// by unweighting the reduct M_Y and taking its GL-reduct by Y. The Y side
// holds automatically; it is checked anyway in this reference predicate.
bool is_se_model(const Program& m, const SEInterpretation& se);

// W(M,(X,Y)) = degree of M_Y. The pair must be an SE-model.
SymbolicWeight se_weight(const Program& m, const SEInterpretation& se);

struct SeOptions {
    std::size_t literal_cap = 12;
    bool parallel = true;
};

// All SE-models (X, Y) with Y a consistent subset of the universe. The
// universe must contain every program literal; oversize universes raise
// CapExceeded.
SEModelSet enumerate_se_models(const Program& m, const LiteralSet& universe,
                               const SeOptions& options = {});

// Stability through SE-models: x is stable iff no proper subset x' forms an
// SE-model (x', x).
bool stable_via_se(const Program& m, const LiteralSet& x);

}  // namespace lpmln
