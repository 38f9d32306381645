#pragma once

#include <map>
#include <set>
#include <vector>

#include "splitiv/dvr.hpp"
#include "splitiv/numeric.hpp"

namespace splitiv {

/// Finite union of residue classes of powers of M, kept in canonical form:
/// no stored class contains another, and whenever all q siblings of a class
/// are present they are merged into their parent. Canonical form is unique
/// for a given subset of R, so equality of unions is equality of sets.
///
/// The sigma measure assigns q^-level to a class; it is finitely additive,
/// and two nested unions are equal iff their measures agree.
class ClassUnion {
public:
    explicit ClassUnion(const DvrContext& ctx) : ctx_(ctx) {}

    const DvrContext& ctx() const { return ctx_; }

    void insert(const ResidueClass& c);
    void merge(const ClassUnion& other);

    bool empty() const { return levels_.empty(); }
    std::size_t class_count() const;

    bool contains(const Element& a) const;
    bool contains_class(const ResidueClass& c) const;

    /// True iff other is a subset of *this.
    bool contains_union(const ClassUnion& other) const;

    Rational measure() const;

    /// Canonical classes, sorted by (level, representative index).
    std::vector<ResidueClass> classes() const;

    friend bool operator==(const ClassUnion& a, const ClassUnion& b) {
        return a.ctx_.same_domain(b.ctx_) && a.levels_ == b.levels_;
    }
    friend bool operator!=(const ClassUnion& a, const ClassUnion& b) { return !(a == b); }

private:
    bool covered(int level, const BigInt& index) const;

    DvrContext ctx_;
    // level -> canonical representative indices of the stored classes
    std::map<int, std::set<BigInt>> levels_;
};

/// sigma(u): sum of q^-level over the canonical classes.
Rational measure(const ClassUnion& u);

}  // namespace splitiv
