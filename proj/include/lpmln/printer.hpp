#pragma once

#include <string>

#include "lpmln/program.hpp"

namespace lpmln {

// Shortest decimal form that round-trips to the same double; "-0" prints as "0".
std::string format_real(double value);

// Fixed 6-decimal form used for every printed probability.
std::string format_probability(double value);

std::string print_weight(const Weight& w);

// Canonical rule text without weight or trailing dot: "a v b", "b :- not a",
// ":- a, b", ":- ." for the all-empty rule.
std::string print_rule(const Rule& r);

// "weight : rule." on one line.
std::string print_rule(const WeightedRule& wr);

// One rule per line; empty program prints as the empty string.
std::string print_program(const Program& p);

}  // namespace lpmln
