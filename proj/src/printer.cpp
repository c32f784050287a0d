#include "lpmln/printer.hpp"

#include <charconv>
#include <cstdio>

namespace lpmln {

std::string format_real(double value) {
    if (value == 0.0) return "0";  // merges -0
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    (void)ec;
    return std::string(buf, end);
}

std::string format_probability(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", value);
    return buf;
}

std::string print_weight(const Weight& w) { return w.hard() ? "alpha" : format_real(w.value()); }

std::string print_rule(const Rule& r) {
    std::string out;
    bool first = true;
    for (const Literal& l : r.head) {
        if (!first) out += " v ";
        out += l.to_string();
        first = false;
    }
    if (!r.pos_body.empty() || !r.neg_body.empty()) {
        if (!out.empty()) out += " ";
        out += ":-";
        first = true;
        for (const Literal& l : r.pos_body) {
            out += first ? " " : ", ";
            out += l.to_string();
            first = false;
        }
        for (const Literal& l : r.neg_body) {
            out += first ? " not " : ", not ";
            out += l.to_string();
            first = false;
        }
    } else if (r.head.empty()) {
        out = ":-";
    }
    return out;
}

std::string print_rule(const WeightedRule& wr) {
    return print_weight(wr.weight) + " : " + print_rule(wr.rule) + ".";
}

std::string print_program(const Program& p) {
    std::string out;
    for (const WeightedRule& wr : p.rules) {
        out += print_rule(wr);
        out += "\n";
    }
    return out;
}

}  // namespace lpmln
