#include "lpmln/se_models.hpp"

#include <algorithm>
#include <stdexcept>

#include "lpmln/enumeration.hpp"
#include "lpmln/errors.hpp"

namespace lpmln {

SEInterpretation::SEInterpretation(LiteralSet lower, LiteralSet upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
    if (!upper_.is_consistent()) {
        throw std::invalid_argument("upper set is inconsistent: " + upper_.to_string());
    }
    if (!lower_.subset_of(upper_)) {
        throw std::invalid_argument("lower set " + lower_.to_string() +
                                    " is not a subset of upper set " + upper_.to_string());
    }
}

std::string SEInterpretation::to_string() const {
    return "(" + lower_.to_string() + " | " + upper_.to_string() + ")";
}

bool SEModelSet::contains(const SEInterpretation& se) const {
    return std::binary_search(models.begin(), models.end(), se);
}

const SymbolicWeight& SEModelSet::weight_of(const SEInterpretation& se) const {
    auto it = weight_by_upper.find(se.upper());
    if (it == weight_by_upper.end()) {
        throw std::invalid_argument("no SE-model has upper set " + se.upper().to_string());
    }
    return it->second;
}

bool is_se_model(const Program& m, const SEInterpretation& se) {
    std::vector<Rule> reduced = gl_reduct(unweight(lpmln_reduct(m, se.upper())), se.upper());
    return satisfies(se.lower(), reduced) && satisfies(se.upper(), reduced);
}

SymbolicWeight se_weight(const Program& m, const SEInterpretation& se) {
    if (!is_se_model(m, se)) {
        throw std::invalid_argument(se.to_string() + " is not an SE-model of the program");
    }
    return degree_of(lpmln_reduct(m, se.upper()));
}

namespace {

struct UpperSlot {
    bool consistent = false;
    SymbolicWeight weight;
    std::vector<std::uint32_t> lowers;  // ascending SE-model lower masks
};

}  // namespace

SEModelSet enumerate_se_models(const Program& m, const LiteralSet& universe,
                               const SeOptions& options) {
    if (!m.literals().subset_of(universe)) {
        throw std::invalid_argument("universe must contain every program literal");
    }
    if (universe.size() > options.literal_cap) {
        throw CapExceeded(universe.size(), options.literal_cap);
    }

    SignatureIndex index(universe);
    std::vector<MaskRule> rules = compile_rules(unweight(m), index);
    std::vector<Weight> weights;
    weights.reserve(m.size());
    for (const WeightedRule& wr : m.rules) weights.push_back(wr.weight);

    std::vector<UpperSlot> slots(index.candidate_count());
    scan_masks(index.candidate_count(), options.parallel, [&](std::uint32_t y) {
        if (!index.consistent(y)) return;
        UpperSlot& slot = slots[y];
        slot.consistent = true;
        // Reduct by y: keep satisfied rules for the weight; of those, the
        // GL step keeps rules with neg o y empty, stripped to (head, pos).
        std::vector<MaskRule> kept;
        for (std::size_t i = 0; i < rules.size(); ++i) {
            if (!mask_satisfies(y, rules[i])) continue;
            if (weights[i].hard()) {
                ++slot.weight.alpha_count;
            } else {
                slot.weight.soft_sum += weights[i].value();
            }
            if ((rules[i].neg & y) == 0) kept.push_back({rules[i].head, rules[i].pos, 0});
        }
        // Submasks descending, then reversed: y itself is always a model.
        for (std::uint32_t x = y;; x = (x - 1) & y) {
            bool all = true;
            for (const MaskRule& r : kept) {
                if (!mask_satisfies(x, r)) {
                    all = false;
                    break;
                }
            }
            if (all) slot.lowers.push_back(x);
            if (x == 0) break;
        }
        std::reverse(slot.lowers.begin(), slot.lowers.end());
    });

    SEModelSet out;
    for (std::uint64_t y = 0; y < index.candidate_count(); ++y) {
        const UpperSlot& slot = slots[y];
        if (!slot.consistent) continue;
        LiteralSet upper = index.set_of(static_cast<std::uint32_t>(y));
        out.weight_by_upper.emplace(upper, slot.weight);
        for (std::uint32_t x : slot.lowers) {
            out.models.emplace_back(index.set_of(x), upper);
        }
    }
    std::sort(out.models.begin(), out.models.end());
    return out;
}

bool stable_via_se(const Program& m, const LiteralSet& x) {
    if (!x.is_consistent()) {
        throw std::invalid_argument("interpretation contains an atom in both polarities: " +
                                    x.to_string());
    }
    std::vector<Rule> reduced = gl_reduct(unweight(lpmln_reduct(m, x)), x);
    if (x.empty()) return true;
    // Any proper subset satisfying the doubly reduced program witnesses a
    // non-total SE-model (x', x) and refutes stability.
    std::vector<Literal> base(x.items());
    std::uint32_t full = (std::uint32_t(1) << base.size()) - 1;
    for (std::uint32_t mask = 0; mask < full; ++mask) {
        LiteralSet sub;
        for (std::size_t i = 0; i < base.size(); ++i) {
            if (mask & (std::uint32_t(1) << i)) sub.insert(base[i]);
        }
        if (satisfies(sub, reduced)) return false;
    }
    return true;
}

}  // namespace lpmln
