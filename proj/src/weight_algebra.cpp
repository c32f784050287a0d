#include "lpmln/weight_algebra.hpp"

#include <algorithm>
#include <cmath>

#include "lpmln/printer.hpp"

namespace lpmln {

std::string SymbolicWeight::to_string() const {
    std::string out = std::to_string(alpha_count) + "*alpha ";
    double c = soft_sum == 0.0 ? 0.0 : soft_sum;  // merges -0
    if (c < 0) {
        out += "- " + format_real(-c);
    } else {
        out += "+ " + format_real(c);
    }
    return out;
}

bool approx_equal(const SymbolicWeight& a, const SymbolicWeight& b) {
    return a.alpha_count == b.alpha_count && std::abs(a.soft_sum - b.soft_sum) <= weight_tolerance;
}

bool degree_less(const SymbolicWeight& a, const SymbolicWeight& b) {
    if (a.alpha_count != b.alpha_count) return a.alpha_count < b.alpha_count;
    return a.soft_sum < b.soft_sum;
}

SymbolicWeight degree_of(const Program& m) {
    SymbolicWeight out;
    for (const WeightedRule& wr : m.rules) {
        if (wr.weight.hard()) {
            ++out.alpha_count;
        } else {
            out.soft_sum += wr.weight.value();
        }
    }
    return out;
}

std::vector<double> limit_distribution(const std::vector<SymbolicWeight>& degrees) {
    if (degrees.empty()) throw NoStableModels("no stable models: distribution undefined");
    long long kmax = degrees.front().alpha_count;
    for (const SymbolicWeight& d : degrees) kmax = std::max(kmax, d.alpha_count);
    double cmax = 0.0;
    bool seen = false;
    for (const SymbolicWeight& d : degrees) {
        if (d.alpha_count == kmax && (!seen || d.soft_sum > cmax)) {
            cmax = d.soft_sum;
            seen = true;
        }
    }
    double denom = 0.0;
    for (const SymbolicWeight& d : degrees) {
        if (d.alpha_count == kmax) denom += std::exp(d.soft_sum - cmax);
    }
    std::vector<double> out;
    out.reserve(degrees.size());
    for (const SymbolicWeight& d : degrees) {
        out.push_back(d.alpha_count == kmax ? std::exp(d.soft_sum - cmax) / denom : 0.0);
    }
    return out;
}

}  // namespace lpmln
