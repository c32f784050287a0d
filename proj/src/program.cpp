#include "lpmln/program.hpp"

namespace lpmln {

LiteralSet Program::literals() const {
    LiteralSet out;
    for (const WeightedRule& wr : rules) out = out.union_with(wr.rule.literals());
    return out;
}

Program program_union(const Program& l, const Program& m) {
    Program out = l;
    out.rules.insert(out.rules.end(), m.rules.begin(), m.rules.end());
    return out;
}

std::vector<Rule> unweight(const Program& m) {
    std::vector<Rule> out;
    out.reserve(m.rules.size());
    for (const WeightedRule& wr : m.rules) out.push_back(wr.rule);
    return out;
}

}  // namespace lpmln
