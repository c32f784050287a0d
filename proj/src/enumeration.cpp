#include "lpmln/enumeration.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace lpmln {

SignatureIndex::SignatureIndex(const LiteralSet& universe)
    : literals_(universe.items().begin(), universe.items().end()) {
    if (literals_.size() > 32) throw std::length_error("signature index limited to 32 literals");
    complement_.assign(literals_.size(), -1);
    for (std::size_t i = 0; i < literals_.size(); ++i) {
        auto it = std::lower_bound(literals_.begin(), literals_.end(), literals_[i].complement());
        if (it != literals_.end() && *it == literals_[i].complement()) {
            complement_[i] = static_cast<int>(it - literals_.begin());
        }
    }
}

std::uint32_t SignatureIndex::mask_of(const LiteralSet& s) const {
    std::uint32_t mask = 0;
    for (const Literal& l : s) {
        auto it = std::lower_bound(literals_.begin(), literals_.end(), l);
        assert(it != literals_.end() && *it == l);
        mask |= std::uint32_t(1) << (it - literals_.begin());
    }
    return mask;
}

LiteralSet SignatureIndex::set_of(std::uint32_t mask) const {
    std::vector<Literal> out;
    for (std::size_t i = 0; i < literals_.size(); ++i) {
        if (mask & (std::uint32_t(1) << i)) out.push_back(literals_[i]);
    }
    return LiteralSet(std::move(out));
}

std::uint32_t SignatureIndex::shifted_complement(std::uint32_t mask) const {
    std::uint32_t out = 0;
    for (std::size_t i = 0; i < literals_.size(); ++i) {
        if ((mask & (std::uint32_t(1) << i)) && complement_[i] >= 0) {
            out |= std::uint32_t(1) << complement_[i];
        }
    }
    return out;
}

std::vector<MaskRule> compile_rules(const std::vector<Rule>& rules, const SignatureIndex& index) {
    std::vector<MaskRule> out;
    out.reserve(rules.size());
    for (const Rule& r : rules) {
        out.push_back({index.mask_of(r.head), index.mask_of(r.pos_body), index.mask_of(r.neg_body)});
    }
    return out;
}

}  // namespace lpmln
