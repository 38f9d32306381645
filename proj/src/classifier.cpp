#include "splitiv/classifier.hpp"

#include <algorithm>

namespace splitiv {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::absolutely_irreducible: return "absolutely-irreducible";
        case Verdict::not_absolutely_irreducible: return "not-absolutely-irreducible";
        case Verdict::not_integer_valued: return "not-integer-valued";
        case Verdict::not_image_primitive: return "not-image-primitive";
    }
    return "unknown";
}

const char* failed_condition_name(FailedCondition c) {
    switch (c) {
        case FailedCondition::not_balanced: return "not-balanced";
        case FailedCondition::wrong_multiplicities: return "wrong-multiplicities";
        case FailedCondition::wrong_constant: return "wrong-constant";
        case FailedCondition::size_congruence_prefilter: return "size-congruence-prefilter";
    }
    return "unknown";
}

ClassificationReport classify(const SplitPolynomial& poly) {
    const DvrContext& ctx = poly.ctx;
    ClassificationReport report;

    PointedPartition p = associated_partition(ctx, poly.roots);
    PartitionMatrix a = partition_matrix(p);
    std::vector<BigInt> values = poor_values(p, a, poly.roots, poly.mult);
    BigInt fixval = *std::min_element(values.begin(), values.end());

    if (poly.const_val != fixval) {
        report.verdict = poly.const_val > fixval ? Verdict::not_integer_valued
                                                 : Verdict::not_image_primitive;
        report.failed_condition = FailedCondition::wrong_constant;
        report.expected_const_val = fixval;
        return report;
    }

    // Fast size prefilter: balanced sets always have |S| = 1 mod q-1.
    if (ctx.q() > 2 &&
        (poly.roots.size() % (ctx.q() - 1)) != (1 % static_cast<std::size_t>(ctx.q() - 1))) {
        report.verdict = Verdict::not_absolutely_irreducible;
        report.failed_condition = FailedCondition::size_congruence_prefilter;
        return report;
    }

    // Balanced iff every block of C_S holds exactly one element of S.
    bool balanced = true;
    for (const auto& block : p.blocks)
        if (block.members.size() != 1) {
            balanced = false;
            break;
        }
    if (!balanced) {
        report.verdict = Verdict::not_absolutely_irreducible;
        report.failed_condition = FailedCondition::not_balanced;
        report.balance_certificate = is_balanced(ctx, poly.roots);
        return report;
    }

    MultiplicityVector solution = solve_equalizing(a);
    if (poly.mult != solution.m) {
        report.verdict = Verdict::not_absolutely_irreducible;
        report.failed_condition = FailedCondition::wrong_multiplicities;
        report.expected_mult = std::move(solution.m);
        report.expected_e = std::move(solution.e);
        return report;
    }

    report.verdict = Verdict::absolutely_irreducible;
    return report;
}

Verdict classify_linear_kr(const DvrContext& ctx, std::int64_t a_val, bool b_is_unit) {
    (void)ctx;
    if (a_val < 0) fail(Errc::invalid_argument, "v(a) must be non-negative");
    if (a_val == 0) fail(Errc::root_in_r, "a is a unit, so the root b/a lies in R");
    return b_is_unit ? Verdict::absolutely_irreducible : Verdict::not_absolutely_irreducible;
}

}  // namespace splitiv
