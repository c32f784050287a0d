#include "lpmln/simplify.hpp"

#include <algorithm>

#include "lpmln/equivalence.hpp"
#include "lpmln/printer.hpp"

namespace lpmln {

std::string to_string(Validity v) {
    switch (v) {
        case Validity::valid: return "valid";
        case Validity::semi_valid: return "semi-valid";
        case Validity::neither: return "neither";
    }
    return "?";
}

std::string RuleClass::flags_string() const {
    std::string out;
    auto add = [&](bool flag, const char* name) {
        if (!flag) return;
        if (!out.empty()) out += ",";
        out += name;
    };
    add(taut, "TAUT");
    add(contra, "CONTRA");
    add(constr1, "CONSTR1");
    add(constr2, "CONSTR2");
    add(constr3, "CONSTR3");
    return out;
}

RuleClass classify_rule(const WeightedRule& wr) {
    const Rule& r = wr.rule;
    // A head literal whose complement sits in the positive body can never be
    // the reason the head fires; for coverage purposes it acts like a
    // negative-body member.
    LiteralSet refuted;
    for (const Literal& l : r.pos_body) refuted.insert(l.complement());
    RuleClass c;
    c.taut = r.head.intersects(r.pos_body);
    c.contra = r.pos_body.intersects(r.neg_body) || !r.pos_body.is_consistent();
    c.constr1 = r.head.empty();
    c.constr2 = r.head.subset_of(r.neg_body.union_with(refuted));
    c.constr3 = r.head.empty() && r.pos_body.empty() && r.neg_body.empty();
    bool weight_zero = !wr.weight.hard() && wr.weight.value() == 0.0;
    if (c.taut || c.contra || c.constr3 || ((c.constr1 || c.constr2) && weight_zero)) {
        c.verdict = Validity::valid;
    } else if (c.constr1 || c.constr2) {
        c.verdict = Validity::semi_valid;
    } else {
        c.verdict = Validity::neither;
    }
    return c;
}

Validity semantic_validity(const WeightedRule& wr, const SeOptions& options) {
    Program single;
    single.rules.push_back(wr);
    Program empty;
    if (p_strong_equivalent(single, empty, options).holds) return Validity::valid;
    if (semi_strong_equivalent(single, empty, options).holds) return Validity::semi_valid;
    return Validity::neither;
}

std::string RemovedRule::log_line() const {
    return "REMOVED " + rule_class.flags_string() + " " + to_string(rule_class.verdict) + ": " +
           print_rule(rule);
}

SimplifyResult simplify_and_solve(const Program& m, const SolveOptions& options) {
    SimplifyResult out;
    Program retained;  // semi-valid rules, still counted in degrees
    for (std::size_t i = 0; i < m.rules.size(); ++i) {
        RuleClass c = classify_rule(m.rules[i]);
        if (c.verdict == Validity::neither) {
            out.solver_program.rules.push_back(m.rules[i]);
        } else {
            if (c.verdict == Validity::semi_valid) retained.rules.push_back(m.rules[i]);
            out.removed.push_back({i, m.rules[i], c});
        }
    }

    out.report = stable_models(out.solver_program, std::nullopt, options);
    Program accounted = program_union(out.solver_program, retained);
    std::vector<SymbolicWeight> degrees;
    degrees.reserve(out.report.entries.size());
    for (SolveEntry& e : out.report.entries) {
        e.degree = degree_of(lpmln_reduct(accounted, e.model));
        degrees.push_back(e.degree);
    }
    if (!out.report.entries.empty()) {
        std::vector<double> probs = limit_distribution(degrees);
        long long kmax = 0;
        for (const SymbolicWeight& d : degrees) kmax = std::max(kmax, d.alpha_count);
        for (std::size_t i = 0; i < out.report.entries.size(); ++i) {
            out.report.entries[i].probability = probs[i];
            out.report.entries[i].probabilistic = degrees[i].alpha_count == kmax;
        }
        std::stable_sort(out.report.entries.begin(), out.report.entries.end(),
                         [](const SolveEntry& a, const SolveEntry& b) {
                             if (!approx_equal(a.degree, b.degree)) {
                                 return degree_less(b.degree, a.degree);
                             }
                             return a.model < b.model;
                         });
    }
    return out;
}

}  // namespace lpmln
