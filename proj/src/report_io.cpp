#include "lpmln/report_io.hpp"

#include <cmath>

#include "json.hpp"
#include "lpmln/printer.hpp"

namespace lpmln {
namespace {

using nlohmann::json;

double round6(double value) { return std::round(value * 1e6) / 1e6; }

json json_literals(const LiteralSet& s) {
    json out = json::array();
    for (const Literal& l : s) out.push_back(l.to_string());
    return out;
}

json json_program(const Program& p) {
    json out = json::array();
    for (const WeightedRule& wr : p.rules) out.push_back(print_rule(wr));
    return out;
}

std::string render_table(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> widths;
    for (const auto& row : rows) {
        if (widths.size() < row.size()) widths.resize(row.size());
        for (std::size_t i = 0; i < row.size(); ++i) {
            widths[i] = std::max(widths[i], row[i].size());
        }
    }
    std::string out;
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out += row[i];
            if (i + 1 < row.size()) out += std::string(widths[i] - row[i].size() + 2, ' ');
        }
        out += "\n";
    }
    return out;
}

std::vector<std::vector<std::string>> report_rows(const SolveReport& report) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"model", "degree", "probability", "probabilistic"});
    for (const SolveEntry& e : report.entries) {
        rows.push_back({e.model.to_string(), e.degree.to_string(),
                        format_probability(e.probability), e.probabilistic ? "true" : "false"});
    }
    return rows;
}

json report_json(const SolveReport& report) {
    json entries = json::array();
    for (const SolveEntry& e : report.entries) {
        entries.push_back({{"model", json_literals(e.model)},
                           {"degree", e.degree.to_string()},
                           {"probability", round6(e.probability)},
                           {"probabilistic", e.probabilistic}});
    }
    return {{"entries", entries}};
}

const char* kind_name(Witness::Kind kind) {
    switch (kind) {
        case Witness::Kind::missing_stable_model: return "missing-stable-model";
        case Witness::Kind::degree_mismatch: return "degree-mismatch";
        case Witness::Kind::probability_mismatch: return "probability-mismatch";
        case Witness::Kind::missing_se_model: return "missing-se-model";
        case Witness::Kind::se_weight_mismatch: return "se-weight-mismatch";
        case Witness::Kind::nonzero_scaling: return "nonzero-scaling";
        case Witness::Kind::failing_context: return "failing-context";
    }
    return "?";
}

}  // namespace

std::string render_report(const SolveReport& report, ReportFormat format) {
    if (format == ReportFormat::json) return report_json(report).dump(2) + "\n";
    return render_table(report_rows(report));
}

std::string render_simplify(const SimplifyResult& result, ReportFormat format) {
    if (format == ReportFormat::json) {
        json removed = json::array();
        for (const RemovedRule& r : result.removed) {
            removed.push_back({{"flags", r.rule_class.flags_string()},
                               {"verdict", to_string(r.rule_class.verdict)},
                               {"rule", print_rule(r.rule)}});
        }
        json out = report_json(result.report);
        out["removed"] = removed;
        return out.dump(2) + "\n";
    }
    std::string out;
    for (const RemovedRule& r : result.removed) out += r.log_line() + "\n";
    out += render_table(report_rows(result.report));
    return out;
}

std::string render_se_models(const SEModelSet& set, ReportFormat format) {
    if (format == ReportFormat::json) {
        json models = json::array();
        for (const SEInterpretation& se : set.models) {
            models.push_back({{"lower", json_literals(se.lower())},
                              {"upper", json_literals(se.upper())},
                              {"weight", set.weight_of(se).to_string()}});
        }
        return json{{"models", models}}.dump(2) + "\n";
    }
    std::string out;
    for (const SEInterpretation& se : set.models) {
        out += se.to_string() + " :: " + set.weight_of(se).to_string() + "\n";
    }
    return out;
}

std::string render_verdict(const EquivalenceVerdict& verdict, ReportFormat format) {
    if (format == ReportFormat::json) {
        json out = {{"mode", to_string(verdict.mode)}, {"holds", verdict.holds}};
        if (verdict.scaling) out["scaling"] = verdict.scaling->to_string();
        if (verdict.witness) {
            json w = {{"kind", kind_name(verdict.witness->kind)}, {"note", verdict.witness->note}};
            if (verdict.witness->model) w["model"] = json_literals(*verdict.witness->model);
            if (verdict.witness->se_first) w["se_first"] = verdict.witness->se_first->to_string();
            if (verdict.witness->se_second) {
                w["se_second"] = verdict.witness->se_second->to_string();
            }
            if (verdict.witness->weight_first) {
                w["weight_first"] = verdict.witness->weight_first->to_string();
            }
            if (verdict.witness->weight_second) {
                w["weight_second"] = verdict.witness->weight_second->to_string();
            }
            if (verdict.witness->context) w["context"] = json_program(*verdict.witness->context);
            out["witness"] = w;
        }
        return out.dump(2) + "\n";
    }
    std::string out = "mode: " + to_string(verdict.mode) + "\n";
    out += std::string("holds: ") + (verdict.holds ? "true" : "false") + "\n";
    if (verdict.scaling) out += "scaling: " + verdict.scaling->to_string() + "\n";
    if (verdict.witness) {
        out += "witness: " + verdict.witness->note + "\n";
        if (verdict.witness->context) {
            out += "context:\n" + print_program(*verdict.witness->context);
        }
    }
    return out;
}

std::string render_marginal(const Literal& l, double probability, ReportFormat format) {
    if (format == ReportFormat::json) {
        return json{{"literal", l.to_string()}, {"marginal", round6(probability)}}.dump(2) + "\n";
    }
    return format_probability(probability) + "\n";
}

std::string render_classify(const Program& p, ReportFormat format) {
    if (format == ReportFormat::json) {
        json rules = json::array();
        for (const WeightedRule& wr : p.rules) {
            RuleClass c = classify_rule(wr);
            rules.push_back({{"rule", print_rule(wr)},
                             {"flags", c.flags_string()},
                             {"verdict", to_string(c.verdict)}});
        }
        return json{{"rules", rules}}.dump(2) + "\n";
    }
    std::string out;
    for (const WeightedRule& wr : p.rules) {
        RuleClass c = classify_rule(wr);
        std::string flags = c.flags_string();
        out += flags.empty() ? to_string(c.verdict) : flags + " " + to_string(c.verdict);
        out += "\n";
    }
    return out;
}

}  // namespace lpmln
