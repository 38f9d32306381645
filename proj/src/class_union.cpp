#include "splitiv/class_union.hpp"

namespace splitiv {

namespace {

BigInt qpow(std::int64_t q, int e) {
    BigInt acc = 1;
    for (int i = 0; i < e; ++i) acc *= q;
    return acc;
}

}  // namespace

bool ClassUnion::covered(int level, const BigInt& index) const {
    for (const auto& [l, reps] : levels_) {
        if (l > level) break;
        if (reps.count(index % qpow(ctx_.q(), l))) return true;
    }
    return false;
}

void ClassUnion::insert(const ResidueClass& c) {
    BigInt idx = ctx_.rep_index(c.rep);
    int level = c.level;
    if (covered(level, idx)) return;

    // Drop stored classes strictly inside the new one.
    BigInt qp = qpow(ctx_.q(), level);
    for (auto it = levels_.upper_bound(level); it != levels_.end();) {
        auto& reps = it->second;
        for (auto rit = reps.begin(); rit != reps.end();)
            rit = (*rit % qp == idx) ? reps.erase(rit) : std::next(rit);
        it = reps.empty() ? levels_.erase(it) : std::next(it);
    }

    levels_[level].insert(idx);

    // Merge complete sibling families into their parent, cascading upward.
    while (level > 0) {
        BigInt parent_pow = qpow(ctx_.q(), level - 1);
        BigInt parent = idx % parent_pow;
        auto& reps = levels_[level];
        bool complete = true;
        for (std::int64_t d = 0; d < ctx_.q() && complete; ++d)
            complete = reps.count(parent + d * parent_pow) > 0;
        if (!complete) break;
        for (std::int64_t d = 0; d < ctx_.q(); ++d) reps.erase(parent + d * parent_pow);
        if (reps.empty()) levels_.erase(level);
        --level;
        idx = parent;
        levels_[level].insert(idx);
    }
}

void ClassUnion::merge(const ClassUnion& other) {
    for (const auto& c : other.classes()) insert(c);
}

std::size_t ClassUnion::class_count() const {
    std::size_t n = 0;
    for (const auto& [l, reps] : levels_) n += reps.size();
    return n;
}

bool ClassUnion::contains(const Element& a) const {
    for (const auto& [l, reps] : levels_)
        if (reps.count(ctx_.rep_index(ctx_.truncate(a, l)))) return true;
    return false;
}

bool ClassUnion::contains_class(const ResidueClass& c) const {
    // In sibling-merged canonical form a contained class always lies inside
    // a single stored class, so ancestor lookups decide containment.
    return covered(c.level, ctx_.rep_index(c.rep));
}

bool ClassUnion::contains_union(const ClassUnion& other) const {
    for (const auto& [l, reps] : other.levels_) {
        for (const auto& idx : reps)
            if (!covered(l, idx)) return false;
    }
    return true;
}

Rational ClassUnion::measure() const {
    Rational total = 0;
    for (const auto& [l, reps] : levels_)
        total += Rational(BigInt(reps.size()), qpow(ctx_.q(), l));
    return total;
}

std::vector<ResidueClass> ClassUnion::classes() const {
    std::vector<ResidueClass> out;
    out.reserve(class_count());
    for (const auto& [l, reps] : levels_)
        for (const auto& idx : reps) out.push_back(ResidueClass{ctx_.rep_from_index(idx, l), l});
    return out;
}

Rational measure(const ClassUnion& u) { return u.measure(); }

}  // namespace splitiv
