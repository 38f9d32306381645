#include "splitiv/equalizer.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "splitiv/detail/digits.hpp"

namespace splitiv {

namespace {

void require_positive(const std::vector<BigInt>& mult) {
    for (const auto& m : mult)
        if (m < 1) fail(Errc::invalid_argument, "multiplicities must be positive");
}

/// Sum of multiplicities per block, in block order. Roots must be sorted in
/// the context order (as SplitPolynomial keeps them).
std::vector<BigInt> block_mults(const PointedPartition& p, const std::vector<Element>& roots,
                                const std::vector<BigInt>& mult) {
    if (roots.size() != mult.size())
        fail(Errc::invalid_argument, "roots and multiplicities must align");
    const DvrContext& ctx = p.ctx;
    auto less = [&](const Element& a, const Element& b) { return ctx.cmp(a, b) < 0; };
    if (!std::is_sorted(roots.begin(), roots.end(), less))
        fail(Errc::invalid_argument, "roots must be sorted");
    std::vector<BigInt> sums(p.blocks.size(), 0);
    std::size_t assigned = 0;
    for (std::size_t b = 0; b < p.blocks.size(); ++b) {
        for (const Element& m : p.blocks[b].members) {
            auto it = std::lower_bound(roots.begin(), roots.end(), m, less);
            if (it == roots.end() || !(*it == m))
                fail(Errc::internal, "partition member missing from roots");
            sums[b] += mult[it - roots.begin()];
            ++assigned;
        }
    }
    if (assigned != roots.size()) fail(Errc::internal, "partition does not cover all roots");
    return sums;
}

std::string balance_failure_message(const DvrContext& ctx, const std::vector<Element>& s) {
    BalanceCertificate cert = is_balanced(ctx, s);
    std::ostringstream os;
    os << "set is not balanced: separating neighborhoods have measure "
       << cert.union_measure.str();
    if (cert.uncovered) os << ", leaving " << ctx.format(*cert.uncovered) << " uncovered";
    return os.str();
}

bool partition_is_balanced(const PointedPartition& p) {
    for (const auto& block : p.blocks)
        if (block.members.size() != 1) return false;
    return true;
}

}  // namespace

SplitPolynomial make_split_polynomial(const DvrContext& ctx, std::vector<Element> roots,
                                      std::vector<BigInt> mult, BigInt const_val) {
    if (roots.empty()) fail(Errc::invalid_argument, "root set must be nonempty");
    if (roots.size() != mult.size())
        fail(Errc::invalid_argument, "roots and multiplicities must align");
    require_positive(mult);
    std::vector<std::size_t> order(roots.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return ctx.cmp(roots[a], roots[b]) < 0;
    });
    SplitPolynomial poly{ctx, {}, {}, std::move(const_val)};
    poly.roots.reserve(roots.size());
    poly.mult.reserve(roots.size());
    for (std::size_t i : order) {
        if (!poly.roots.empty() && poly.roots.back() == roots[i])
            fail(Errc::invalid_argument, "duplicate root");
        poly.roots.push_back(std::move(roots[i]));
        poly.mult.push_back(std::move(mult[i]));
    }
    return poly;
}

std::vector<BigInt> poor_values(const PointedPartition& p, const PartitionMatrix& a,
                                const std::vector<Element>& roots,
                                const std::vector<BigInt>& mult) {
    require_positive(mult);
    std::vector<BigInt> sums = block_mults(p, roots, mult);
    std::vector<BigInt> values(p.blocks.size(), 0);
    for (std::size_t u = 0; u < p.blocks.size(); ++u)
        for (std::size_t t = 0; t < p.blocks.size(); ++t)
            if (a.rows[u][t] != 0) values[u] += a.rows[u][t] * sums[t];
    return values;
}

std::vector<BigInt> poor_values(const PointedPartition& p, const std::vector<Element>& roots,
                                const std::vector<BigInt>& mult) {
    return poor_values(p, partition_matrix(p), roots, mult);
}

std::vector<BigInt> poor_values(const DvrContext& ctx, const std::vector<Element>& roots,
                                const std::vector<BigInt>& mult) {
    PointedPartition p = associated_partition(ctx, roots);
    return poor_values(p, roots, mult);
}

BigInt fixed_divisor_val(const DvrContext& ctx, const std::vector<Element>& roots,
                         const std::vector<BigInt>& mult) {
    std::vector<BigInt> values = poor_values(ctx, roots, mult);
    return *std::min_element(values.begin(), values.end());
}

ClassUnion posh_set(const PointedPartition& p, const std::vector<Element>& roots,
                    const std::vector<BigInt>& mult) {
    std::vector<BigInt> values = poor_values(p, roots, mult);
    BigInt min_value = *std::min_element(values.begin(), values.end());
    ClassUnion posh = rich_set(p);
    std::vector<std::vector<ResidueClass>> poor = poor_neighborhoods(p);
    for (std::size_t u = 0; u < p.blocks.size(); ++u)
        if (values[u] > min_value)
            for (const auto& c : poor[u]) posh.insert(c);
    return posh;
}

ClassUnion posh_set(const DvrContext& ctx, const std::vector<Element>& roots,
                    const std::vector<BigInt>& mult) {
    PointedPartition p = associated_partition(ctx, roots);
    return posh_set(p, roots, mult);
}

SplitPolynomial equalizing_polynomial(const DvrContext& ctx, const std::vector<Element>& s) {
    PointedPartition p = associated_partition(ctx, s);
    if (!partition_is_balanced(p)) fail(Errc::not_balanced, balance_failure_message(ctx, s));
    MultiplicityVector solution = solve_equalizing(partition_matrix(p));
    SplitPolynomial poly{ctx, {}, std::move(solution.m), std::move(solution.e)};
    poly.roots.reserve(p.blocks.size());
    for (const auto& block : p.blocks) poly.roots.push_back(block.srep);
    return poly;
}

namespace {

struct LcmBuilder {
    const DvrContext& ctx;
    detail::DigitTable& digits;
    const std::vector<Element>& roots;
    std::vector<BigInt>& mult;

    struct NodeValue {
        BigInt poor_value;  // common value of v(f_C) on poor neighborhoods inside C
        BigInt weight;      // total multiplicity of the roots inside C
    };

    NodeValue build(int level, const std::vector<std::size_t>& members) {
        std::map<std::int64_t, std::vector<std::size_t>> groups;
        if (members.size() > 1)
            for (std::size_t i : members) groups[digits.digit(i, level)].push_back(i);
        if (members.size() == 1 || static_cast<std::int64_t>(groups.size()) != ctx.q()) {
            // A block of the partition; balancedness gives a single root.
            if (members.size() != 1) fail(Errc::internal, "unbalanced block in lcm construction");
            mult[members.front()] = 1;
            return NodeValue{BigInt(level), BigInt(1)};
        }
        std::vector<NodeValue> child_values;
        std::vector<std::vector<std::size_t>> child_members;
        for (auto& [d, group] : groups) {
            child_values.push_back(build(level + 1, group));
            child_members.push_back(group);
        }
        // Children separate pairwise at exactly this level, so f_i takes the
        // value level * weight_i on the other children.
        BigInt scale_lcm = 1;
        std::vector<BigInt> gaps;
        gaps.reserve(child_values.size());
        for (const auto& cv : child_values) {
            BigInt gap = cv.poor_value - BigInt(level) * cv.weight;
            if (gap <= 0) fail(Errc::internal, "non-positive valuation gap in lcm construction");
            scale_lcm = boost::multiprecision::lcm(scale_lcm, gap);
            gaps.push_back(std::move(gap));
        }
        NodeValue out{scale_lcm, BigInt(0)};
        for (std::size_t i = 0; i < child_values.size(); ++i) {
            BigInt factor = scale_lcm / gaps[i];
            for (std::size_t j : child_members[i]) mult[j] *= factor;
            out.poor_value += factor * BigInt(level) * child_values[i].weight;
            out.weight += factor * child_values[i].weight;
        }
        return out;
    }
};

}  // namespace

SplitPolynomial equalizing_polynomial_lcm(const DvrContext& ctx, const std::vector<Element>& s) {
    PointedPartition p = associated_partition(ctx, s);
    if (!partition_is_balanced(p)) fail(Errc::not_balanced, balance_failure_message(ctx, s));

    std::vector<Element> sorted;
    sorted.reserve(p.blocks.size());
    for (const auto& block : p.blocks) sorted.push_back(block.srep);

    detail::DigitTable digits(ctx, sorted);
    std::vector<BigInt> mult(sorted.size(), 1);
    std::vector<std::size_t> all(sorted.size());
    std::iota(all.begin(), all.end(), 0);
    LcmBuilder builder{ctx, digits, sorted, mult};
    auto root_value = builder.build(0, all);

    BigInt g = 0;
    for (const auto& m : mult) g = boost::multiprecision::gcd(g, m);
    for (auto& m : mult) m /= g;
    if (root_value.poor_value % g != 0)
        fail(Errc::internal, "gcd does not divide the equalized value");
    return SplitPolynomial{ctx, std::move(sorted), std::move(mult), root_value.poor_value / g};
}

}  // namespace splitiv
