#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "splitiv/classifier.hpp"
#include "test_util.hpp"

using namespace splitiv;
using namespace splitiv::testing;

namespace {

ClassificationReport classify_zp(const DvrContext& ctx, std::initializer_list<std::int64_t> roots,
                                 std::initializer_list<std::int64_t> mult, std::int64_t const_val) {
    return classify(make_split_polynomial(ctx, els(ctx, roots), bigs(mult), BigInt(const_val)));
}

}  // namespace

TEST_CASE("classify, spec instances") {
    auto z2 = DvrContext::make_zp(2);

    auto r = classify_zp(z2, {0, 1}, {1, 1}, 1);
    CHECK(r.verdict == Verdict::absolutely_irreducible);
    CHECK(!r.failed_condition);

    r = classify_zp(z2, {0, 1}, {2, 1}, 1);
    CHECK(r.verdict == Verdict::not_absolutely_irreducible);
    CHECK(r.failed_condition == FailedCondition::wrong_multiplicities);
    REQUIRE(r.expected_mult);
    CHECK(*r.expected_mult == bigs({1, 1}));
    CHECK(*r.expected_e == 1);

    r = classify_zp(z2, {0, 2}, {1, 1}, 0);
    CHECK(r.verdict == Verdict::not_absolutely_irreducible);
    CHECK(r.failed_condition == FailedCondition::not_balanced);
    REQUIRE(r.balance_certificate);
    CHECK(!r.balance_certificate->balanced);
    CHECK(r.balance_certificate->union_measure == Rational(1, 2));

    auto z3 = DvrContext::make_zp(3);
    r = classify_zp(z3, {0, 1}, {1, 1}, 0);
    CHECK(r.verdict == Verdict::not_absolutely_irreducible);
    CHECK(r.failed_condition == FailedCondition::size_congruence_prefilter);
}

TEST_CASE("constant failures") {
    auto z2 = DvrContext::make_zp(2);

    auto r = classify_zp(z2, {0, 1}, {1, 1}, 2);
    CHECK(r.verdict == Verdict::not_integer_valued);
    CHECK(r.failed_condition == FailedCondition::wrong_constant);
    CHECK(*r.expected_const_val == 1);

    r = classify_zp(z2, {0, 1}, {1, 1}, 0);
    CHECK(r.verdict == Verdict::not_image_primitive);
    CHECK(*r.expected_const_val == 1);

    // x - s is image-primitive only with const_val 0.
    r = classify_zp(z2, {5}, {1}, 0);
    CHECK(r.verdict == Verdict::absolutely_irreducible);
    r = classify_zp(z2, {5}, {1}, 1);
    CHECK(r.verdict == Verdict::not_integer_valued);
}

TEST_CASE("power rejection") {
    auto z2 = DvrContext::make_zp(2);
    for (auto scale : {2, 3}) {
        auto r = classify_zp(z2, {0, 1, 2}, {1 * scale, 3 * scale, 1 * scale}, 3 * scale);
        CHECK(r.verdict == Verdict::not_absolutely_irreducible);
        CHECK(r.failed_condition == FailedCondition::wrong_multiplicities);
        CHECK(*r.expected_mult == bigs({1, 3, 1}));
    }
    // Squared singleton.
    auto r = classify_zp(z2, {0}, {2}, 0);
    CHECK(r.verdict == Verdict::not_absolutely_irreducible);
    CHECK(r.failed_condition == FailedCondition::wrong_multiplicities);
}

TEST_CASE("bijection roundtrip on enumerated balanced sets") {
    for (auto& ctx : {DvrContext::make_zp(2), DvrContext::make_zp(3), DvrContext::make_fqt(2, 1)}) {
        std::size_t count = 0;
        enumerate_balanced(ctx, 2, 100, [&](const std::vector<Element>& s) {
            SplitPolynomial f = equalizing_polynomial(ctx, s);
            CHECK(f.roots == s);  // the root set comes back unchanged
            ClassificationReport r = classify(f);
            CHECK(r.verdict == Verdict::absolutely_irreducible);
            ++count;
            return true;
        });
        CHECK(count > 0);
    }
}

TEST_CASE("classify_linear_kr") {
    auto z2 = DvrContext::make_zp(2);
    CHECK(classify_linear_kr(z2, 1, true) == Verdict::absolutely_irreducible);
    CHECK(classify_linear_kr(z2, 3, true) == Verdict::absolutely_irreducible);
    CHECK(classify_linear_kr(z2, 2, false) == Verdict::not_absolutely_irreducible);
    CHECK_THROWS_AS(classify_linear_kr(z2, 0, true), Error);
}

TEST_CASE("verdict and condition names") {
    CHECK(std::string(verdict_name(Verdict::absolutely_irreducible)) == "absolutely-irreducible");
    CHECK(std::string(verdict_name(Verdict::not_integer_valued)) == "not-integer-valued");
    CHECK(std::string(failed_condition_name(FailedCondition::size_congruence_prefilter)) ==
          "size-congruence-prefilter");
}
