#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace lpmln {

// A ground literal: an atom or its classical negation ("-a").
// Default negation ("not") is rule structure, not part of the literal.
class Literal {
public:
    Literal() = default;

    static Literal positive(std::string atom) { return Literal(std::move(atom), false); }
    static Literal negative(std::string atom) { return Literal(std::move(atom), true); }

    const std::string& atom() const { return atom_; }
    bool negated() const { return negated_; }

    Literal complement() const { return Literal(atom_, !negated_); }

    std::string to_string() const { return negated_ ? "-" + atom_ : atom_; }

    friend bool operator==(const Literal&, const Literal&) = default;
    friend std::strong_ordering operator<=>(const Literal& lhs, const Literal& rhs) {
        if (auto c = lhs.atom_ <=> rhs.atom_; c != 0) return c;
        return lhs.negated_ <=> rhs.negated_;
    }

private:
    Literal(std::string atom, bool negated) : atom_(std::move(atom)), negated_(negated) {}

    std::string atom_;
    bool negated_ = false;
};

// Finite set of ground literals, kept sorted and duplicate-free.
// The set itself may be inconsistent (both polarities of one atom);
// is_consistent() is the predicate callers check where consistency matters.
class LiteralSet {
public:
    LiteralSet() = default;
    LiteralSet(std::initializer_list<Literal> lits);
    explicit LiteralSet(std::vector<Literal> lits);

    bool empty() const { return items_.empty(); }
    std::size_t size() const { return items_.size(); }

    bool contains(const Literal& l) const;
    bool contains_atom(const std::string& atom) const;
    bool is_consistent() const;
    bool subset_of(const LiteralSet& other) const;
    bool proper_subset_of(const LiteralSet& other) const;
    bool intersects(const LiteralSet& other) const;

    void insert(const Literal& l);

    LiteralSet union_with(const LiteralSet& other) const;
    LiteralSet intersect_with(const LiteralSet& other) const;
    LiteralSet minus(const LiteralSet& other) const;

    const std::vector<Literal>& items() const { return items_; }
    auto begin() const { return items_.begin(); }
    auto end() const { return items_.end(); }

    std::string to_string() const;  // "{}", "{a,-b}"

    friend bool operator==(const LiteralSet&, const LiteralSet&) = default;
    friend std::strong_ordering operator<=>(const LiteralSet& lhs, const LiteralSet& rhs);

private:
    std::vector<Literal> items_;
};

}  // namespace lpmln
