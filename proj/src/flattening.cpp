#include "lpmln/flattening.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "lpmln/enumeration.hpp"

namespace lpmln {

Program build_r(const LiteralSet& x, const LiteralSet& y, const Literal& a) {
    if (!x.is_consistent() || !y.is_consistent()) {
        throw std::invalid_argument("trace sets must be consistent");
    }
    if (a.negated()) {
        throw std::invalid_argument("steering literal must be positive: " + a.to_string());
    }
    if (x.contains_atom(a.atom()) || y.contains_atom(a.atom())) {
        throw std::invalid_argument("steering atom " + a.atom() + " occurs in the trace sets");
    }
    Program out;
    LiteralSet guard = x;
    guard.insert(a);
    out.rules.push_back({Weight::alpha(), {{}, guard, y}});
    out.rules.push_back({Weight::alpha(), {{a}, x, y}});
    return out;
}

FlatteningState make_flattening(const Program& m, const LiteralSet& universe) {
    if (!m.literals().subset_of(universe)) {
        throw std::invalid_argument("universe must contain every program literal");
    }
    FlatteningState state;
    state.base = m;
    state.universe = universe;
    state.current = m;
    for (const Literal& a : universe) {
        state.current.rules.push_back({Weight::alpha(), {{a}, {}, {}}});
    }
    return state;
}

FlatteningState extend(const FlatteningState& state, const LiteralSet& target,
                       const SolveOptions& options) {
    SolveReport report = stable_models(state.current, std::nullopt, options);
    bool probabilistic = false;
    for (const SolveEntry& e : report.entries) {
        if (e.model == target) {
            probabilistic = e.probabilistic;
            break;
        }
    }
    if (!probabilistic) {
        throw std::invalid_argument("target " + target.to_string() +
                                    " is not a probabilistic stable model of the current stage");
    }

    LiteralSet known = state.current.literals();
    Literal a = Literal::positive("");
    for (std::size_t n = state.stage() + 1;; ++n) {
        std::string name = "__f" + std::to_string(n);
        if (known.contains_atom(name)) continue;
        a = Literal::positive(name);
        break;
    }

    FlatteningState next = state;
    next.fresh.push_back(a);
    next.current = program_union(
        state.current,
        build_r(target.intersect_with(state.universe), state.universe.minus(target), a));
    return next;
}

namespace {

std::vector<LiteralSet> consistent_subsets(const LiteralSet& universe) {
    SignatureIndex index(universe);
    std::vector<LiteralSet> out;
    for (std::uint64_t mask = 0; mask < index.candidate_count(); ++mask) {
        if (index.consistent(static_cast<std::uint32_t>(mask))) {
            out.push_back(index.set_of(static_cast<std::uint32_t>(mask)));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string set_list(const std::vector<LiteralSet>& sets) {
    std::string out;
    for (const LiteralSet& s : sets) {
        if (!out.empty()) out += " ";
        out += s.to_string();
    }
    return out.empty() ? "(none)" : out;
}

}  // namespace

Prop3Report check_prop3(const FlatteningState& before, const FlatteningState& after,
                        const LiteralSet& target, const SolveOptions& options) {
    Prop3Report report;
    const LiteralSet& u = before.universe;
    Literal a = after.fresh.back();
    LiteralSet trace = target.intersect_with(u);

    std::map<LiteralSet, SymbolicWeight> deg_before, deg_after;
    std::vector<LiteralSet> sm_before, sm_after;
    for (const SolveEntry& e : stable_models(before.current, std::nullopt, options).entries) {
        deg_before.emplace(e.model, e.degree);
        sm_before.push_back(e.model);
    }
    for (const SolveEntry& e : stable_models(after.current, std::nullopt, options).entries) {
        deg_after.emplace(e.model, e.degree);
        sm_after.push_back(e.model);
    }
    std::sort(sm_before.begin(), sm_before.end());
    std::sort(sm_after.begin(), sm_after.end());

    // (i) stage 0 over U: every consistent subset is stable.
    std::vector<LiteralSet> sm_zero;
    FlatteningState zero = make_flattening(before.base, u);
    for (const SolveEntry& e : stable_models(zero.current, std::nullopt, options).entries) {
        sm_zero.push_back(e.model);
    }
    std::sort(sm_zero.begin(), sm_zero.end());
    std::vector<LiteralSet> expected_zero = consistent_subsets(u);
    report.base_models_ok = sm_zero == expected_zero;
    if (!report.base_models_ok) {
        report.failures.push_back("stage 0 stable models " + set_list(sm_zero) +
                                  " differ from the consistent subsets " +
                                  set_list(expected_zero));
    }

    // (ii) new stage adds exactly the fresh completions of target-trace models.
    std::vector<LiteralSet> expected_after = sm_before;
    for (const LiteralSet& y : sm_before) {
        if (y.intersect_with(u) == trace) {
            LiteralSet grown = y;
            grown.insert(a);
            expected_after.push_back(grown);
        }
    }
    std::sort(expected_after.begin(), expected_after.end());
    report.model_update_ok = sm_after == expected_after;
    if (!report.model_update_ok) {
        report.failures.push_back("new-stage stable models " + set_list(sm_after) +
                                  " differ from the expected " + set_list(expected_after));
    }

    // (iii) surviving models scale by e^{2a}, or e^{a} on the target trace.
    report.multiplier_ok = true;
    for (const LiteralSet& y : sm_before) {
        auto it = deg_after.find(y);
        if (it == deg_after.end()) {
            report.multiplier_ok = false;
            report.failures.push_back("model " + y.to_string() + " vanished in the new stage");
            continue;
        }
        SymbolicWeight factor{y.intersect_with(u) == trace ? 1 : 2, 0.0};
        SymbolicWeight expected = deg_before.at(y).times(factor);
        if (!approx_equal(it->second, expected)) {
            report.multiplier_ok = false;
            report.failures.push_back("model " + y.to_string() + " has degree " +
                                      it->second.to_string() + ", expected " +
                                      expected.to_string());
        }
    }

    // (iv) a model and its fresh completion share one degree.
    report.degree_match_ok = true;
    for (const LiteralSet& y : sm_before) {
        if (y.intersect_with(u) != trace) continue;
        LiteralSet grown = y;
        grown.insert(a);
        auto base_it = deg_after.find(y);
        auto grown_it = deg_after.find(grown);
        if (base_it == deg_after.end() || grown_it == deg_after.end()) {
            report.degree_match_ok = false;
            report.failures.push_back("model " + y.to_string() +
                                      " or its completion is missing in the new stage");
            continue;
        }
        if (!approx_equal(base_it->second, grown_it->second)) {
            report.degree_match_ok = false;
            report.failures.push_back("models " + y.to_string() + " and " + grown.to_string() +
                                      " have degrees " + base_it->second.to_string() + " and " +
                                      grown_it->second.to_string());
        }
    }
    return report;
}

}  // namespace lpmln
