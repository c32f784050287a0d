#include "lpmln/equivalence.hpp"

#include <algorithm>
#include <map>

#include "lpmln/enumeration.hpp"
#include "lpmln/errors.hpp"
#include "lpmln/printer.hpp"

namespace lpmln {

std::string to_string(EquivalenceMode mode) {
    switch (mode) {
        case EquivalenceMode::ordinary_w: return "ordinary-w";
        case EquivalenceMode::ordinary_p: return "ordinary-p";
        case EquivalenceMode::semi_strong: return "semi-strong";
        case EquivalenceMode::p_strong: return "p-strong";
        case EquivalenceMode::w_strong: return "w-strong";
    }
    return "?";
}

namespace {

LiteralSet joint_literals(const Program& l, const Program& m) {
    return l.literals().union_with(m.literals());
}

std::vector<LiteralSet> sorted_models(const SolveReport& report) {
    std::vector<LiteralSet> out;
    out.reserve(report.entries.size());
    for (const SolveEntry& e : report.entries) out.push_back(e.model);
    std::sort(out.begin(), out.end());
    return out;
}

// First element of the symmetric difference together with the side it came
// from; both inputs sorted.
template <typename T>
std::optional<std::pair<T, bool>> first_difference(const std::vector<T>& first,
                                                   const std::vector<T>& second) {
    auto it = first.begin();
    auto jt = second.begin();
    while (it != first.end() && jt != second.end()) {
        if (*it == *jt) {
            ++it;
            ++jt;
        } else if (*it < *jt) {
            return std::make_pair(*it, true);
        } else {
            return std::make_pair(*jt, false);
        }
    }
    if (it != first.end()) return std::make_pair(*it, true);
    if (jt != second.end()) return std::make_pair(*jt, false);
    return std::nullopt;
}

EquivalenceVerdict model_set_mismatch(EquivalenceMode mode, const LiteralSet& model,
                                      bool in_first) {
    Witness w;
    w.kind = Witness::Kind::missing_stable_model;
    w.model = model;
    w.note = "stable model " + model.to_string() + " appears only in the " +
             (in_first ? "first" : "second") + " program";
    return {mode, false, std::move(w), std::nullopt};
}

EquivalenceVerdict ordinary_common(EquivalenceMode mode, const Program& l, const Program& m,
                                   const SolveOptions& options) {
    LiteralSet joint = joint_literals(l, m);
    SolveReport rl = stable_models(l, joint, options);
    SolveReport rm = stable_models(m, joint, options);
    std::vector<LiteralSet> ml = sorted_models(rl);
    std::vector<LiteralSet> mm = sorted_models(rm);
    if (auto diff = first_difference(ml, mm)) {
        return model_set_mismatch(mode, diff->first, diff->second);
    }

    std::map<LiteralSet, const SolveEntry*> by_model;
    for (const SolveEntry& e : rm.entries) by_model[e.model] = &e;
    for (const LiteralSet& x : ml) {
        const SolveEntry* el = nullptr;
        for (const SolveEntry& e : rl.entries) {
            if (e.model == x) {
                el = &e;
                break;
            }
        }
        const SolveEntry* em = by_model.at(x);
        if (mode == EquivalenceMode::ordinary_w) {
            if (!approx_equal(el->degree, em->degree)) {
                Witness w;
                w.kind = Witness::Kind::degree_mismatch;
                w.model = x;
                w.weight_first = el->degree;
                w.weight_second = em->degree;
                w.note = "model " + x.to_string() + " has degree " + el->degree.to_string() +
                         " in the first program and " + em->degree.to_string() + " in the second";
                return {mode, false, std::move(w), std::nullopt};
            }
        } else {
            if (std::abs(el->probability - em->probability) > weight_tolerance) {
                Witness w;
                w.kind = Witness::Kind::probability_mismatch;
                w.model = x;
                w.note = "model " + x.to_string() + " has probability " +
                         format_probability(el->probability) + " in the first program and " +
                         format_probability(em->probability) + " in the second";
                return {mode, false, std::move(w), std::nullopt};
            }
        }
    }
    return {mode, true, std::nullopt, std::nullopt};
}

}  // namespace

EquivalenceVerdict ordinary_equivalent_w(const Program& l, const Program& m,
                                         const SolveOptions& options) {
    return ordinary_common(EquivalenceMode::ordinary_w, l, m, options);
}

EquivalenceVerdict ordinary_equivalent_p(const Program& l, const Program& m,
                                         const SolveOptions& options) {
    return ordinary_common(EquivalenceMode::ordinary_p, l, m, options);
}

EquivalenceVerdict semi_strong_equivalent(const Program& l, const Program& m,
                                          const SeOptions& options) {
    LiteralSet joint = joint_literals(l, m);
    SEModelSet sl = enumerate_se_models(l, joint, options);
    SEModelSet sm = enumerate_se_models(m, joint, options);
    if (auto diff = first_difference(sl.models, sm.models)) {
        Witness w;
        w.kind = Witness::Kind::missing_se_model;
        w.se_first = diff->first;
        w.note = "SE-model " + diff->first.to_string() + " appears only in the " +
                 (diff->second ? "first" : "second") + " program";
        return {EquivalenceMode::semi_strong, false, std::move(w), std::nullopt};
    }
    return {EquivalenceMode::semi_strong, true, std::nullopt, std::nullopt};
}

EquivalenceVerdict p_strong_equivalent(const Program& l, const Program& m,
                                       const SeOptions& options) {
    EquivalenceVerdict semi = semi_strong_equivalent(l, m, options);
    if (!semi.holds) {
        return {EquivalenceMode::p_strong, false, std::move(semi.witness), std::nullopt};
    }
    // Shared SE-model sets make the weight maps range over the same upper
    // sets (every consistent subset: total pairs are always SE-models).
    LiteralSet joint = joint_literals(l, m);
    SEModelSet sl = enumerate_se_models(l, joint, options);
    SEModelSet sm = enumerate_se_models(m, joint, options);
    std::optional<SymbolicWeight> scaling;
    std::optional<LiteralSet> scaling_upper;
    for (const auto& [upper, wl] : sl.weight_by_upper) {
        SymbolicWeight diff = wl.divided_by(sm.weight_by_upper.at(upper));
        if (!scaling) {
            scaling = diff;
            scaling_upper = upper;
        } else if (!approx_equal(*scaling, diff)) {
            Witness w;
            w.kind = Witness::Kind::se_weight_mismatch;
            w.se_first = SEInterpretation(*scaling_upper, *scaling_upper);
            w.se_second = SEInterpretation(upper, upper);
            w.weight_first = *scaling;
            w.weight_second = diff;
            w.note = "SE-models " + w.se_first->to_string() + " and " + w.se_second->to_string() +
                     " relate the weights by " + scaling->to_string() + " and " + diff.to_string();
            return {EquivalenceMode::p_strong, false, std::move(w), std::nullopt};
        }
    }
    return {EquivalenceMode::p_strong, true, std::nullopt, scaling};
}

EquivalenceVerdict w_strong_equivalent(const Program& l, const Program& m,
                                       const SeOptions& options) {
    EquivalenceVerdict p = p_strong_equivalent(l, m, options);
    if (!p.holds) {
        return {EquivalenceMode::w_strong, false, std::move(p.witness), std::nullopt};
    }
    if (!approx_equal(*p.scaling, SymbolicWeight::one())) {
        Witness w;
        w.kind = Witness::Kind::nonzero_scaling;
        w.weight_first = *p.scaling;
        w.note = "the scaling constant " + p.scaling->to_string() + " is not 0*alpha + 0";
        return {EquivalenceMode::w_strong, false, std::move(w), std::nullopt};
    }
    return {EquivalenceMode::w_strong, true, std::nullopt, std::nullopt};
}

EquivalenceVerdict oracle_semi_strong(const Program& l, const Program& m, std::size_t fresh_atoms,
                                      const OracleOptions& options) {
    LiteralSet extended = joint_literals(l, m);
    std::size_t added = 0;
    for (std::size_t n = 1; added < fresh_atoms; ++n) {
        std::string name = "__o" + std::to_string(n);
        if (extended.contains_atom(name)) continue;
        extended.insert(Literal::positive(name));
        ++added;
    }
    if (extended.size() > options.literal_cap) {
        throw CapExceeded(extended.size(), options.literal_cap);
    }

    SignatureIndex index(extended);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;  // (y, x), x <= y
    for (std::uint64_t y = 0; y < index.candidate_count(); ++y) {
        if (!index.consistent(static_cast<std::uint32_t>(y))) continue;
        std::uint32_t ym = static_cast<std::uint32_t>(y);
        std::vector<std::uint32_t> lowers;
        for (std::uint32_t x = ym;; x = (x - 1) & ym) {
            lowers.push_back(x);
            if (x == 0) break;
        }
        for (auto it = lowers.rbegin(); it != lowers.rend(); ++it) pairs.emplace_back(ym, *it);
    }

    auto context_of = [&](std::size_t i) {
        LiteralSet x = index.set_of(pairs[i].second);
        LiteralSet gap = index.set_of(pairs[i].first).minus(x);
        Program n;
        for (const Literal& a : x) n.rules.push_back({Weight::soft(1), {{a}, {}, {}}});
        for (const Literal& a : gap) {
            for (const Literal& b : gap) {
                if (a == b) continue;
                n.rules.push_back({Weight::soft(1), {{a}, {b}, {}}});
            }
        }
        return n;
    };

    SolveOptions inner;
    inner.parallel = false;
    std::vector<char> failed(pairs.size(), 0);
    scan_masks(pairs.size(), options.parallel, [&](std::uint32_t i) {
        Program n = context_of(i);
        std::vector<LiteralSet> ml = sorted_models(stable_models(program_union(l, n), {}, inner));
        std::vector<LiteralSet> mm = sorted_models(stable_models(program_union(m, n), {}, inner));
        if (ml != mm) failed[i] = 1;
    });

    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (!failed[i]) continue;
        Program n = context_of(i);
        std::vector<LiteralSet> ml = sorted_models(stable_models(program_union(l, n), {}, inner));
        std::vector<LiteralSet> mm = sorted_models(stable_models(program_union(m, n), {}, inner));
        auto diff = first_difference(ml, mm);
        Witness w;
        w.kind = Witness::Kind::failing_context;
        w.context = n;
        w.note = "under a context of " + std::to_string(n.size()) +
                 " rules, stable model " + diff->first.to_string() + " appears only in the " +
                 (diff->second ? "first" : "second") + " extended program";
        return {EquivalenceMode::semi_strong, false, std::move(w), std::nullopt};
    }
    return {EquivalenceMode::semi_strong, true, std::nullopt, std::nullopt};
}

}  // namespace lpmln
