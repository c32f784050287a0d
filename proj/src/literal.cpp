#include "lpmln/literal.hpp"

#include <algorithm>

namespace lpmln {

LiteralSet::LiteralSet(std::initializer_list<Literal> lits)
    : LiteralSet(std::vector<Literal>(lits)) {}

LiteralSet::LiteralSet(std::vector<Literal> lits) : items_(std::move(lits)) {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

bool LiteralSet::contains(const Literal& l) const {
    return std::binary_search(items_.begin(), items_.end(), l);
}

bool LiteralSet::contains_atom(const std::string& atom) const {
    return contains(Literal::positive(atom)) || contains(Literal::negative(atom));
}

bool LiteralSet::is_consistent() const {
    for (const Literal& l : items_) {
        if (!l.negated() && contains(l.complement())) return false;
    }
    return true;
}

bool LiteralSet::subset_of(const LiteralSet& other) const {
    return std::includes(other.items_.begin(), other.items_.end(), items_.begin(), items_.end());
}

bool LiteralSet::proper_subset_of(const LiteralSet& other) const {
    return size() < other.size() && subset_of(other);
}

bool LiteralSet::intersects(const LiteralSet& other) const {
    auto it = items_.begin();
    auto jt = other.items_.begin();
    while (it != items_.end() && jt != other.items_.end()) {
        if (*it == *jt) return true;
        if (*it < *jt) ++it; else ++jt;
    }
    return false;
}

void LiteralSet::insert(const Literal& l) {
    auto it = std::lower_bound(items_.begin(), items_.end(), l);
    if (it == items_.end() || *it != l) items_.insert(it, l);
}

LiteralSet LiteralSet::union_with(const LiteralSet& other) const {
    std::vector<Literal> out;
    out.reserve(size() + other.size());
    std::set_union(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                   std::back_inserter(out));
    return LiteralSet(std::move(out));
}

LiteralSet LiteralSet::intersect_with(const LiteralSet& other) const {
    std::vector<Literal> out;
    std::set_intersection(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                          std::back_inserter(out));
    return LiteralSet(std::move(out));
}

LiteralSet LiteralSet::minus(const LiteralSet& other) const {
    std::vector<Literal> out;
    std::set_difference(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                        std::back_inserter(out));
    return LiteralSet(std::move(out));
}

std::string LiteralSet::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < items_.size(); ++i) {
        if (i > 0) out += ",";
        out += items_[i].to_string();
    }
    out += "}";
    return out;
}

std::strong_ordering operator<=>(const LiteralSet& lhs, const LiteralSet& rhs) {
    return std::lexicographical_compare_three_way(lhs.items_.begin(), lhs.items_.end(),
                                                  rhs.items_.begin(), rhs.items_.end());
}

}  // namespace lpmln
