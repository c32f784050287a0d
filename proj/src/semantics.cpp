#include "lpmln/semantics.hpp"

#include <algorithm>
#include <stdexcept>

#include "lpmln/enumeration.hpp"
#include "lpmln/errors.hpp"

namespace lpmln {
namespace {

void require_consistent(const LiteralSet& x) {
    if (!x.is_consistent()) {
        throw std::invalid_argument("interpretation contains an atom in both polarities: " +
                                    x.to_string());
    }
}

}  // namespace

bool satisfies(const LiteralSet& x, const Rule& r) {
    require_consistent(x);
    bool body = r.pos_body.subset_of(x) && !r.neg_body.intersects(x);
    return !body || r.head.intersects(x);
}

bool satisfies(const LiteralSet& x, const std::vector<Rule>& rules) {
    require_consistent(x);
    return std::all_of(rules.begin(), rules.end(),
                       [&](const Rule& r) { return satisfies(x, r); });
}

bool satisfies(const LiteralSet& x, const Program& m) {
    require_consistent(x);
    return std::all_of(m.rules.begin(), m.rules.end(),
                       [&](const WeightedRule& wr) { return satisfies(x, wr.rule); });
}

Program lpmln_reduct(const Program& m, const LiteralSet& x) {
    require_consistent(x);
    Program out;
    for (const WeightedRule& wr : m.rules) {
        if (satisfies(x, wr.rule)) out.rules.push_back(wr);
    }
    return out;
}

std::vector<Rule> gl_reduct(const std::vector<Rule>& p, const LiteralSet& x) {
    require_consistent(x);
    std::vector<Rule> out;
    for (const Rule& r : p) {
        if (!r.neg_body.intersects(x)) out.push_back({r.head, r.pos_body, {}});
    }
    return out;
}

bool is_stable_model(const Program& m, const LiteralSet& x) {
    require_consistent(x);
    std::vector<Rule> reduced = gl_reduct(unweight(lpmln_reduct(m, x)), x);
    if (!satisfies(x, reduced)) return false;
    if (x.empty()) return true;
    // Minimality over proper subsets of x. A rule with a positive body
    // literal outside x holds vacuously below x; head literals outside x
    // can never be hit, so they drop out of the compiled head mask.
    SignatureIndex index(x);
    std::vector<MaskRule> rules;
    for (const Rule& r : reduced) {
        if (!r.pos_body.subset_of(x)) continue;
        rules.push_back({index.mask_of(r.head.intersect_with(x)), index.mask_of(r.pos_body), 0});
    }
    std::uint32_t full = static_cast<std::uint32_t>(index.candidate_count() - 1);
    for (std::uint32_t y = (full - 1) & full;; y = (y - 1) & full) {
        bool all = true;
        for (const MaskRule& r : rules) {
            if (!mask_satisfies(y, r)) {
                all = false;
                break;
            }
        }
        if (all) return false;
        if (y == 0) break;
    }
    return true;
}

namespace {

struct CandidateSlot {
    bool stable = false;
    SymbolicWeight degree;
};

// Per-mask stability and degree over a compiled weighted program. Pure.
CandidateSlot evaluate_candidate(std::uint32_t x, const std::vector<MaskRule>& rules,
                                 const std::vector<Weight>& weights) {
    CandidateSlot slot;
    // Reduct of the satisfied rules: GL filter is neg & x == 0; a rule the
    // candidate satisfies with neg & x != 0 drops out and constrains nothing.
    std::vector<MaskRule> kept;
    kept.reserve(rules.size());
    for (std::size_t i = 0; i < rules.size(); ++i) {
        const MaskRule& r = rules[i];
        if (!mask_satisfies(x, r)) continue;
        if (weights[i].hard()) {
            ++slot.degree.alpha_count;
        } else {
            slot.degree.soft_sum += weights[i].value();
        }
        if ((r.neg & x) == 0) kept.push_back({r.head, r.pos, 0});
    }
    // x satisfies every kept rule by construction (the reduct kept only
    // rules x satisfies, and stripping the negative body preserves that),
    // so stability is exactly minimality.
    if (x != 0) {
        for (std::uint32_t y = (x - 1) & x;; y = (y - 1) & x) {
            bool all = true;
            for (const MaskRule& r : kept) {
                if (!mask_satisfies(y, r)) {
                    all = false;
                    break;
                }
            }
            if (all) return slot;
            if (y == 0) break;
        }
    }
    slot.stable = true;
    return slot;
}

}  // namespace

SolveReport stable_models(const Program& m, std::optional<LiteralSet> universe,
                          const SolveOptions& options) {
    LiteralSet lits = m.literals();
    LiteralSet space = universe.value_or(lits);
    if (universe && !lits.subset_of(space)) {
        throw std::invalid_argument("universe must contain every program literal");
    }
    if (space.size() > options.literal_cap) throw CapExceeded(space.size(), options.literal_cap);

    SignatureIndex index(space);
    std::vector<MaskRule> rules = compile_rules(unweight(m), index);
    std::vector<Weight> weights;
    weights.reserve(m.size());
    for (const WeightedRule& wr : m.rules) weights.push_back(wr.weight);

    std::vector<CandidateSlot> slots(index.candidate_count());
    scan_masks(index.candidate_count(), options.parallel, [&](std::uint32_t x) {
        if (index.consistent(x)) slots[x] = evaluate_candidate(x, rules, weights);
    });

    SolveReport report;
    for (std::uint64_t x = 0; x < index.candidate_count(); ++x) {
        if (!slots[x].stable) continue;
        SolveEntry entry;
        entry.model = index.set_of(static_cast<std::uint32_t>(x));
        entry.degree = slots[x].degree;
        report.entries.push_back(std::move(entry));
    }
    if (!report.entries.empty()) {
        std::vector<SymbolicWeight> degrees;
        degrees.reserve(report.entries.size());
        for (const SolveEntry& e : report.entries) degrees.push_back(e.degree);
        std::vector<double> probs = limit_distribution(degrees);
        long long kmax = 0;
        for (const SymbolicWeight& d : degrees) kmax = std::max(kmax, d.alpha_count);
        for (std::size_t i = 0; i < report.entries.size(); ++i) {
            report.entries[i].probability = probs[i];
            report.entries[i].probabilistic = report.entries[i].degree.alpha_count == kmax;
        }
        std::stable_sort(report.entries.begin(), report.entries.end(),
                         [](const SolveEntry& a, const SolveEntry& b) {
                             if (!approx_equal(a.degree, b.degree)) {
                                 return degree_less(b.degree, a.degree);
                             }
                             return a.model < b.model;
                         });
    }
    return report;
}

std::vector<LiteralSet> map_inference(const Program& m, const SolveOptions& options) {
    SolveReport report = stable_models(m, std::nullopt, options);
    if (report.entries.empty()) throw NoStableModels("no stable models: nothing to maximize");
    std::vector<LiteralSet> out;
    for (const SolveEntry& e : report.entries) {
        if (approx_equal(e.degree, report.entries.front().degree)) out.push_back(e.model);
    }
    return out;
}

double marginal(const Program& m, const Literal& l, const SolveOptions& options) {
    SolveReport report = stable_models(m, std::nullopt, options);
    if (report.entries.empty()) throw NoStableModels("no stable models: distribution undefined");
    double total = 0.0;
    for (const SolveEntry& e : report.entries) {
        if (e.model.contains(l)) total += e.probability;
    }
    return total;
}

}  // namespace lpmln
