#pragma once

#include <string>
#include <vector>

#include "lpmln/errors.hpp"
#include "lpmln/program.hpp"

namespace lpmln {

// Absolute tolerance for comparing soft-weight sums and probabilities.
inline constexpr double weight_tolerance = 1e-9;

// A degree exp(k*alpha + c), stored as the exponent pair. Program degrees
// have k >= 0; scaling constants may go negative through divide().
struct SymbolicWeight {
    long long alpha_count = 0;  // k
    double soft_sum = 0.0;      // c

    static SymbolicWeight one() { return {0, 0.0}; }

    SymbolicWeight times(const SymbolicWeight& o) const {
        return {alpha_count + o.alpha_count, soft_sum + o.soft_sum};
    }
    SymbolicWeight divided_by(const SymbolicWeight& o) const {
        return {alpha_count - o.alpha_count, soft_sum - o.soft_sum};
    }

    // Numeric value at a finite alpha; for order checks, not for limits.
    double exponent_at(double alpha) const { return double(alpha_count) * alpha + soft_sum; }

    std::string to_string() const;  // "2*alpha + 1", "0*alpha - 0.5"

    // Exact equality; use approx_equal for computed sums.
    friend bool operator==(const SymbolicWeight&, const SymbolicWeight&) = default;
};

// k exact, c within tolerance.
bool approx_equal(const SymbolicWeight& a, const SymbolicWeight& b);

// Lexicographic (k, c): the order of exp(k*alpha + c) as alpha -> infinity.
bool degree_less(const SymbolicWeight& a, const SymbolicWeight& b);
inline bool dominates(const SymbolicWeight& a, const SymbolicWeight& b) {
    return degree_less(b, a);
}

// W of a rule multiset: k = hard-rule count, c = soft-weight sum.
SymbolicWeight degree_of(const Program& m);

// alpha -> infinity limit of normalized degrees: mass concentrates on the
// maximal alpha_count; within it, softmax of the soft sums (log-sum-exp).
// Output sums to 1 within tolerance.
std::vector<double> limit_distribution(const std::vector<SymbolicWeight>& degrees);

}  // namespace lpmln
