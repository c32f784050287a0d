#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

#include "lpmln/literal.hpp"

namespace lpmln {

// Disjunctive ASP rule  h(r) <- b+(r), not b-(r).
struct Rule {
    LiteralSet head;
    LiteralSet pos_body;
    LiteralSet neg_body;

    LiteralSet literals() const { return head.union_with(pos_body).union_with(neg_body); }

    friend bool operator==(const Rule&, const Rule&) = default;
};

// Rule weight: a real number (soft) or the infinite weight alpha (hard).
class Weight {
public:
    Weight() = default;

    static Weight alpha() { return Weight(true, 0.0); }
    static Weight soft(double value) { return Weight(false, value); }

    bool hard() const { return hard_; }
    double value() const {
        assert(!hard_);
        return value_;
    }

    friend bool operator==(const Weight&, const Weight&) = default;

private:
    Weight(bool hard, double value) : hard_(hard), value_(value) {}

    bool hard_ = false;
    double value_ = 0.0;
};

struct WeightedRule {
    Weight weight;
    Rule rule;

    friend bool operator==(const WeightedRule&, const WeightedRule&) = default;
};

// Finite list of weighted rules. Duplicates are distinct occurrences and
// each contributes to weight sums.
struct Program {
    std::vector<WeightedRule> rules;

    bool empty() const { return rules.empty(); }
    std::size_t size() const { return rules.size(); }

    // lit(M): union over all rules; the result may be inconsistent as a set.
    LiteralSet literals() const;

    friend bool operator==(const Program&, const Program&) = default;
};

// Multiset union L u N: concatenation, preserving multiplicity.
Program program_union(const Program& l, const Program& m);

// The unweighted ASP counterpart of M.
std::vector<Rule> unweight(const Program& m);

}  // namespace lpmln
