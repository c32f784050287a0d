#pragma once

#include <string>
#include <vector>

#include "lpmln/equivalence.hpp"
#include "lpmln/se_models.hpp"
#include "lpmln/semantics.hpp"
#include "lpmln/simplify.hpp"

namespace lpmln {

enum class ReportFormat { table, json };

// Solve output: aligned four-column table, or a {"entries": [...]} document.
std::string render_report(const SolveReport& report, ReportFormat format);

// Solve output preceded by the removal log.
std::string render_simplify(const SimplifyResult& result, ReportFormat format);

// One `(X | Y) :: k*alpha + c` line per SE-model.
std::string render_se_models(const SEModelSet& set, ReportFormat format);

// mode/holds plus scaling or witness; a failing context is printed in full.
std::string render_verdict(const EquivalenceVerdict& verdict, ReportFormat format);

// Single probability for one literal.
std::string render_marginal(const Literal& l, double probability, ReportFormat format);

// One flags-and-verdict line per rule, in program order.
std::string render_classify(const Program& p, ReportFormat format);

}  // namespace lpmln
