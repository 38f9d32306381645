#include "splitiv/partition.hpp"

#include <algorithm>
#include <map>

#include "splitiv/detail/digits.hpp"

namespace splitiv {

namespace detail {

namespace {

bool fits_small(const BigInt& v) {
    static const BigInt lo = -(BigInt(1) << 62);
    static const BigInt hi = BigInt(1) << 62;
    return lo < v && v < hi;
}

}  // namespace

DigitTable::DigitTable(const DvrContext& ctx, const std::vector<Element>& elems) : ctx_(ctx) {
    rows_.resize(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (ctx.backend() == Backend::fqt) {
            rows_[i].coeffs = &elems[i].c;
        } else if (fits_small(elems[i].z)) {
            rows_[i].is_small = true;
            rows_[i].small = elems[i].z.convert_to<std::int64_t>();
        } else {
            rows_[i].big = elems[i].z;
        }
    }
}

std::int64_t DigitTable::digit(std::size_t i, int level) {
    Row& row = rows_[i];
    if (row.coeffs)
        return level < static_cast<int>(row.coeffs->size()) ? (*row.coeffs)[level] : 0;
    const std::int64_t p = ctx_.p();
    while (static_cast<int>(row.digits.size()) <= level) {
        if (row.is_small) {
            std::int64_t r = row.small % p;
            if (r < 0) r += p;
            row.digits.push_back(r);
            row.small = (row.small - r) / p;
        } else {
            BigInt r = row.big % p;
            if (r < 0) r += p;
            row.digits.push_back(r.convert_to<std::int64_t>());
            row.big = (row.big - r) / p;
            if (fits_small(row.big)) {
                row.is_small = true;
                row.small = row.big.convert_to<std::int64_t>();
            }
        }
    }
    return row.digits[level];
}

}  // namespace detail

namespace {

std::vector<Element> sorted_distinct(const DvrContext& ctx, std::vector<Element> s,
                                     const char* who) {
    if (s.empty()) fail(Errc::invalid_argument, std::string(who) + ": empty set");
    std::sort(s.begin(), s.end(),
              [&](const Element& a, const Element& b) { return ctx.cmp(a, b) < 0; });
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i - 1] == s[i]) fail(Errc::invalid_argument, std::string(who) + ": duplicate element");
    return s;
}

void build_blocks(const DvrContext& ctx, const std::vector<Element>& s, detail::DigitTable& digits,
                  int level, std::vector<std::size_t>& members, std::vector<PartitionBlock>& out) {
    if (members.size() > 1) {
        std::map<std::int64_t, std::vector<std::size_t>> groups;
        for (std::size_t i : members) groups[digits.digit(i, level)].push_back(i);
        if (static_cast<std::int64_t>(groups.size()) == ctx.q()) {
            for (auto& [d, group] : groups) build_blocks(ctx, s, digits, level + 1, group, out);
            return;
        }
    }
    // This class keeps a subclass disjoint from S: it is a block.
    PartitionBlock block;
    block.rho = level;
    block.members.reserve(members.size());
    for (std::size_t i : members) block.members.push_back(s[i]);
    block.srep = block.members.front();  // members arrive sorted
    block.cls = class_of(ctx, block.srep, level);
    out.push_back(std::move(block));
}

}  // namespace

std::size_t PointedPartition::block_of(const Element& a) const {
    for (std::size_t i = 0; i < blocks.size(); ++i)
        if (class_contains(ctx, blocks[i].cls, a)) return i;
    fail(Errc::internal, "partition blocks do not cover the element");
}

PointedPartition associated_partition(const DvrContext& ctx, std::vector<Element> s) {
    s = sorted_distinct(ctx, std::move(s), "associated_partition");
    detail::DigitTable digits(ctx, s);
    std::vector<std::size_t> all(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) all[i] = i;
    std::vector<PartitionBlock> blocks;
    build_blocks(ctx, s, digits, 0, all, blocks);
    std::sort(blocks.begin(), blocks.end(), [&](const PartitionBlock& a, const PartitionBlock& b) {
        return ctx.cmp(a.srep, b.srep) < 0;
    });
    return PointedPartition{ctx, std::move(blocks)};
}

BalanceCertificate is_balanced(const DvrContext& ctx, const std::vector<Element>& s) {
    std::vector<Element> sorted = sorted_distinct(ctx, s, "is_balanced");
    BalanceCertificate cert;
    std::vector<ResidueClass> classes;
    classes.reserve(sorted.size());
    for (const Element& a : sorted) {
        std::int64_t n = 0;
        for (const Element& b : sorted) {
            if (a == b) continue;
            n = std::max(n, valuation_diff(ctx, a, b).finite() + 1);
        }
        cert.levels.emplace_back(a, static_cast<int>(n));
        classes.push_back(class_of(ctx, a, static_cast<int>(n)));
    }
    ClassUnion u(ctx);
    for (const auto& c : classes) u.insert(c);
    cert.union_measure = u.measure();
    cert.balanced = cert.union_measure == 1;
    if (!cert.balanced)
        cert.uncovered = class_member_outside(ctx, ResidueClass{ctx.zero(), 0}, classes);
    return cert;
}

ClassUnion rich_set(const PointedPartition& p) {
    ClassUnion u(p.ctx);
    for (const auto& block : p.blocks)
        for (const Element& m : block.members) u.insert(class_of(p.ctx, m, block.rho + 1));
    return u;
}

std::vector<std::vector<ResidueClass>> poor_neighborhoods(const PointedPartition& p) {
    std::vector<std::vector<ResidueClass>> out;
    out.reserve(p.blocks.size());
    for (const auto& block : p.blocks) {
        std::vector<ResidueClass> poor;
        for (const auto& sub : subclasses(p.ctx, block.cls)) {
            bool rich = false;
            for (const Element& m : block.members)
                if (class_contains(p.ctx, sub, m)) {
                    rich = true;
                    break;
                }
            if (!rich) poor.push_back(sub);
        }
        if (poor.empty()) fail(Errc::internal, "partition block without a poor neighborhood");
        out.push_back(std::move(poor));
    }
    return out;
}

std::pair<std::vector<Element>, PointedPartition> balanced_subset(const DvrContext& ctx,
                                                                  const std::vector<Element>& s) {
    PointedPartition p = associated_partition(ctx, s);
    std::vector<Element> sub;
    sub.reserve(p.blocks.size());
    for (const auto& block : p.blocks) sub.push_back(block.srep);
    return {std::move(sub), std::move(p)};
}

namespace {

struct BalancedEnumerator {
    const DvrContext& ctx;
    int max_level;
    std::int64_t max_size;
    const std::function<bool(const std::vector<Element>&)>& yield;
    bool stopped = false;

    // Decide each pending class in order: keep it as a block or split it
    // into its q subclasses. Each distinct decision tree is one partition.
    void partitions(std::vector<ResidueClass> pending, std::vector<ResidueClass> blocks) {
        if (stopped) return;
        if (static_cast<std::int64_t>(pending.size() + blocks.size()) > max_size) return;
        if (pending.empty()) {
            emit(blocks);
            return;
        }
        ResidueClass head = pending.back();
        pending.pop_back();

        auto kept = blocks;
        kept.push_back(head);
        partitions(pending, std::move(kept));

        if (stopped || head.level >= max_level) return;
        auto split = subclasses(ctx, head);
        for (auto it = split.rbegin(); it != split.rend(); ++it) pending.push_back(*it);
        partitions(std::move(pending), std::move(blocks));
    }

    // One representative per block, running over all canonical level-n
    // representatives inside the block.
    void emit(const std::vector<ResidueClass>& blocks) {
        std::vector<BigInt> strides, bases, counts;
        for (const auto& b : blocks) {
            BigInt stride = 1;
            for (int i = 0; i < b.level; ++i) stride *= ctx.q();
            BigInt count = 1;
            for (int i = b.level; i < max_level; ++i) count *= ctx.q();
            bases.push_back(ctx.rep_index(b.rep));
            strides.push_back(stride);
            counts.push_back(count);
        }
        std::vector<BigInt> pick(blocks.size(), 0);
        std::vector<Element> set(blocks.size());
        while (true) {
            for (std::size_t i = 0; i < blocks.size(); ++i)
                set[i] = ctx.rep_from_index(bases[i] + pick[i] * strides[i], max_level);
            std::vector<Element> sorted = set;
            std::sort(sorted.begin(), sorted.end(),
                      [&](const Element& a, const Element& b) { return ctx.cmp(a, b) < 0; });
            if (!yield(sorted)) {
                stopped = true;
                return;
            }
            std::size_t i = blocks.size();
            while (i-- > 0) {
                if (++pick[i] < counts[i]) break;
                pick[i] = 0;
                if (i == 0) return;
            }
        }
    }
};

}  // namespace

void enumerate_balanced(const DvrContext& ctx, int max_level, std::int64_t max_size,
                        const std::function<bool(const std::vector<Element>&)>& yield) {
    if (max_level < 1) fail(Errc::invalid_argument, "enumerate_balanced: max_level must be >= 1");
    if (max_size < 1) fail(Errc::invalid_argument, "enumerate_balanced: max_size must be >= 1");
    BalancedEnumerator gen{ctx, max_level, max_size, yield};
    gen.partitions({ResidueClass{ctx.zero(), 0}}, {});
}

std::vector<std::vector<Element>> enumerate_balanced_collect(const DvrContext& ctx, int max_level,
                                                             std::int64_t max_size) {
    std::vector<std::vector<Element>> out;
    enumerate_balanced(ctx, max_level, max_size, [&](const std::vector<Element>& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

}  // namespace splitiv
