#pragma once

#include <cstdint>
#include <vector>

#include "lpmln/literal.hpp"
#include "lpmln/program.hpp"

namespace lpmln {

// Maps a fixed literal universe (at most 32 literals) to bit positions so
// candidate sets become masks. Bit order follows the sorted literal order,
// which keeps mask order aligned with set order.
class SignatureIndex {
public:
    explicit SignatureIndex(const LiteralSet& universe);

    std::size_t size() const { return literals_.size(); }
    std::uint64_t candidate_count() const { return std::uint64_t(1) << literals_.size(); }

    // Every literal of s must be in the universe.
    std::uint32_t mask_of(const LiteralSet& s) const;
    LiteralSet set_of(std::uint32_t mask) const;

    // No atom present in both polarities.
    bool consistent(std::uint32_t mask) const { return (mask & shifted_complement(mask)) == 0; }

    const std::vector<Literal>& literals() const { return literals_; }

private:
    // Mask holding, for each set bit, the bit of its complement literal.
    std::uint32_t shifted_complement(std::uint32_t mask) const;

    std::vector<Literal> literals_;
    std::vector<int> complement_;  // bit of the complement literal, -1 if absent
};

// A rule with its three literal sets compiled to masks over one index.
struct MaskRule {
    std::uint32_t head = 0;
    std::uint32_t pos = 0;
    std::uint32_t neg = 0;
};

std::vector<MaskRule> compile_rules(const std::vector<Rule>& rules, const SignatureIndex& index);

inline bool mask_satisfies(std::uint32_t x, const MaskRule& r) {
    bool body = (r.pos & ~x) == 0 && (r.neg & x) == 0;
    return !body || (r.head & x) != 0;
}

// Candidate scan kernels. Work per mask must be independent; results go into
// preallocated per-mask slots so the parallel scan stays deterministic.
template <typename F>
void scan_masks_serial(std::uint64_t count, F&& f) {
    for (std::uint64_t m = 0; m < count; ++m) f(static_cast<std::uint32_t>(m));
}

template <typename F>
void scan_masks_parallel(std::uint64_t count, F&& f) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64)
    for (long long m = 0; m < static_cast<long long>(count); ++m) {
        f(static_cast<std::uint32_t>(m));
    }
#else
    scan_masks_serial(count, f);
#endif
}

template <typename F>
void scan_masks(std::uint64_t count, bool parallel, F&& f) {
    if (parallel) {
        scan_masks_parallel(count, static_cast<F&&>(f));
    } else {
        scan_masks_serial(count, static_cast<F&&>(f));
    }
}

}  // namespace lpmln
