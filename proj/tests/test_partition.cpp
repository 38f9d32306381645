#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "splitiv/partition.hpp"
#include "test_util.hpp"

using namespace splitiv;
using namespace splitiv::testing;

namespace {

std::vector<std::pair<Element, int>> block_shapes(const PointedPartition& p) {
    std::vector<std::pair<Element, int>> out;
    for (const auto& b : p.blocks) out.emplace_back(b.cls.rep, b.rho);
    return out;
}

}  // namespace

TEST_CASE("associated partition, hand-run instances") {
    auto z2 = DvrContext::make_zp(2);

    auto p = associated_partition(z2, els(z2, {0}));
    REQUIRE(p.blocks.size() == 1);
    CHECK(p.blocks[0].rho == 0);
    CHECK(p.blocks[0].cls == ResidueClass{el(z2, 0), 0});

    p = associated_partition(z2, els(z2, {0, 1}));
    REQUIRE(p.blocks.size() == 2);
    CHECK(block_shapes(p) == std::vector<std::pair<Element, int>>{{el(z2, 0), 1}, {el(z2, 1), 1}});

    p = associated_partition(z2, els(z2, {0, 1, 2}));
    REQUIRE(p.blocks.size() == 3);
    CHECK(block_shapes(p) ==
          std::vector<std::pair<Element, int>>{{el(z2, 0), 2}, {el(z2, 1), 1}, {el(z2, 2), 2}});

    // With q = 5 the single residue class of S forces R itself to stay one block.
    auto z5 = DvrContext::make_zp(5);
    p = associated_partition(z5, els(z5, {0, 1}));
    REQUIRE(p.blocks.size() == 1);
    CHECK(p.blocks[0].rho == 0);
    CHECK(p.blocks[0].members.size() == 2);
}

TEST_CASE("blocks partition R and carry the defining property") {
    std::mt19937_64 rng(23);
    for (auto& ctx : {DvrContext::make_zp(2), DvrContext::make_zp(3), DvrContext::make_fqt(2, 1)}) {
        for (int round = 0; round < 200; ++round) {
            std::set<std::string> seen;
            std::vector<Element> s;
            int size = 1 + static_cast<int>(rng() % 6);
            for (int i = 0; i < size; ++i) {
                Element e = ctx.random_element(rng, 4);
                if (seen.insert(ctx.format(e)).second) s.push_back(e);
            }
            PointedPartition p = associated_partition(ctx, s);

            ClassUnion cover(ctx);
            std::size_t members = 0;
            for (const auto& b : p.blocks) {
                CHECK(class_contains(ctx, b.cls, b.srep));
                members += b.members.size();
                cover.insert(b.cls);
                // Every block keeps a rich and a poor level-(rho+1) subclass.
                std::size_t meeting = 0;
                for (const auto& sub : subclasses(ctx, b.cls)) {
                    bool meets = false;
                    for (const auto& m : b.members)
                        if (class_contains(ctx, sub, m)) meets = true;
                    if (meets) ++meeting;
                }
                CHECK(meeting >= 1);
                CHECK(meeting < static_cast<std::size_t>(ctx.q()));
            }
            CHECK(members == s.size());
            CHECK(cover.measure() == 1);
        }
    }
}

TEST_CASE("is_balanced examples") {
    auto z2 = DvrContext::make_zp(2);

    auto cert = is_balanced(z2, els(z2, {0, 1}));
    CHECK(cert.balanced);
    CHECK(cert.levels == std::vector<std::pair<Element, int>>{{el(z2, 0), 1}, {el(z2, 1), 1}});

    cert = is_balanced(z2, els(z2, {0, 2}));
    CHECK(!cert.balanced);
    CHECK(cert.union_measure == Rational(1, 2));
    REQUIRE(cert.uncovered.has_value());
    // The witness genuinely escapes both separating classes.
    CHECK(valuation_diff(z2, *cert.uncovered, el(z2, 0)) < ExtNat(2));
    CHECK(valuation_diff(z2, *cert.uncovered, el(z2, 2)) < ExtNat(2));

    cert = is_balanced(z2, els(z2, {7}));
    CHECK(cert.balanced);
    CHECK(cert.levels == std::vector<std::pair<Element, int>>{{el(z2, 7), 0}});

    // All of 0,1,2,4 separate: levels (3,1,2,3) have measure 1.
    cert = is_balanced(z2, els(z2, {0, 1, 2, 4}));
    CHECK(cert.balanced);

    auto z5 = DvrContext::make_zp(5);
    CHECK(!is_balanced(z5, els(z5, {0, 1})).balanced);
}

TEST_CASE("rich set examples") {
    auto z2 = DvrContext::make_zp(2);

    auto u = rich_set(associated_partition(z2, els(z2, {0, 1})));
    CHECK(u.measure() == Rational(1, 2));
    CHECK(u.classes() == std::vector<ResidueClass>{{el(z2, 0), 2}, {el(z2, 1), 2}});

    u = rich_set(associated_partition(z2, els(z2, {0})));
    CHECK(u.measure() == Rational(1, 2));
    CHECK(u.classes() == std::vector<ResidueClass>{{el(z2, 0), 1}});

    u = rich_set(associated_partition(z2, els(z2, {0, 1, 2})));
    CHECK(u.measure() == Rational(1, 2));
    CHECK(u.classes() ==
          std::vector<ResidueClass>{{el(z2, 1), 2}, {el(z2, 0), 3}, {el(z2, 2), 3}});
}

TEST_CASE("poor neighborhoods examples") {
    auto z2 = DvrContext::make_zp(2);

    auto p = associated_partition(z2, els(z2, {0, 1}));
    auto poor = poor_neighborhoods(p);
    REQUIRE(poor.size() == 2);
    CHECK(poor[0] == std::vector<ResidueClass>{{el(z2, 2), 2}});
    CHECK(poor[1] == std::vector<ResidueClass>{{el(z2, 3), 2}});

    p = associated_partition(z2, els(z2, {0}));
    poor = poor_neighborhoods(p);
    REQUIRE(poor.size() == 1);
    CHECK(poor[0] == std::vector<ResidueClass>{{el(z2, 1), 1}});

    p = associated_partition(z2, els(z2, {0, 1, 2}));
    poor = poor_neighborhoods(p);
    REQUIRE(poor.size() == 3);  // blocks in order 0+M^2, 1+M, 2+M^2
    CHECK(poor[0] == std::vector<ResidueClass>{{el(z2, 4), 3}});
    CHECK(poor[1] == std::vector<ResidueClass>{{el(z2, 3), 2}});
    CHECK(poor[2] == std::vector<ResidueClass>{{el(z2, 6), 3}});
}

TEST_CASE("balanced subset") {
    auto z2 = DvrContext::make_zp(2);

    auto [sub, p] = balanced_subset(z2, els(z2, {0, 4}));
    CHECK(sub == els(z2, {0}));
    CHECK(p.blocks.size() == 1);

    auto balanced = els(z2, {0, 1});
    CHECK(balanced_subset(z2, balanced).first == balanced);

    // 0,1,2,4 separate pairwise early enough: the set is already balanced.
    auto full = els(z2, {0, 1, 2, 4});
    CHECK(balanced_subset(z2, full).first == full);

    // A genuinely redundant set: 8 shares the block of 0.
    auto [sub2, p2] = balanced_subset(z2, els(z2, {0, 8, 1, 2}));
    CHECK(sub2 == els(z2, {0, 1, 2}));

    // C_S equals C_S' as block sets, and the subset is balanced.
    std::mt19937_64 rng(29);
    for (auto& ctx : {DvrContext::make_zp(2), DvrContext::make_zp(3)}) {
        for (int round = 0; round < 200; ++round) {
            std::set<std::string> seen;
            std::vector<Element> s;
            for (int i = 0; i < 5; ++i) {
                Element e = ctx.random_element(rng, 3);
                if (seen.insert(ctx.format(e)).second) s.push_back(e);
            }
            auto [sub3, p3] = balanced_subset(ctx, s);
            CHECK(is_balanced(ctx, sub3).balanced);
            PointedPartition rebuilt = associated_partition(ctx, sub3);
            CHECK(block_shapes(rebuilt) == block_shapes(p3));
            // rho only grows when the surrounding set grows.
            for (const auto& b : rebuilt.blocks) {
                PointedPartition whole = associated_partition(ctx, s);
                CHECK(b.rho <= whole.blocks[whole.block_of(b.srep)].rho);
            }
        }
    }
}

TEST_CASE("enumerate_balanced small cases") {
    auto z2 = DvrContext::make_zp(2);
    auto sets = enumerate_balanced_collect(z2, 1, 2);
    REQUIRE(sets.size() == 3);
    CHECK(sets[0] == els(z2, {0}));
    CHECK(sets[1] == els(z2, {1}));
    CHECK(sets[2] == els(z2, {0, 1}));

    auto z3 = DvrContext::make_zp(3);
    auto sets3 = enumerate_balanced_collect(z3, 1, 3);
    REQUIRE(sets3.size() == 4);
    CHECK(sets3[0] == els(z3, {0}));
    CHECK(sets3[1] == els(z3, {1}));
    CHECK(sets3[2] == els(z3, {2}));
    CHECK(sets3[3] == els(z3, {0, 1, 2}));

    // max_size 1 keeps exactly the q^n singletons.
    CHECK(enumerate_balanced_collect(z2, 2, 1).size() == 4);
    CHECK(enumerate_balanced_collect(z3, 2, 1).size() == 9);
}

TEST_CASE("enumerated sets are balanced, distinct, size 1 mod q-1") {
    for (auto& ctx : {DvrContext::make_zp(2), DvrContext::make_zp(3), DvrContext::make_fqt(2, 1)}) {
        std::set<std::vector<std::string>> seen;
        enumerate_balanced(ctx, 2, 100, [&](const std::vector<Element>& s) {
            std::vector<std::string> key;
            for (const auto& e : s) key.push_back(ctx.format(e));
            CHECK(seen.insert(key).second);
            CHECK(is_balanced(ctx, s).balanced);
            if (ctx.q() > 2) CHECK(s.size() % (ctx.q() - 1) == 1 % (ctx.q() - 1));

            PointedPartition p = associated_partition(ctx, s);
            CHECK(p.blocks.size() == s.size());
            ClassUnion rich = rich_set(p);
            CHECK(rich.measure() == Rational(1, ctx.q()));
            CHECK(rich.class_count() == s.size());  // one rich neighborhood per block
            return true;
        });
        CHECK(!seen.empty());
    }
}

TEST_CASE("early stop is honored") {
    auto z2 = DvrContext::make_zp(2);
    int count = 0;
    enumerate_balanced(z2, 3, 100, [&](const std::vector<Element>&) { return ++count < 5; });
    CHECK(count == 5);
}

TEST_CASE("rho monotone under subsets") {
    std::mt19937_64 rng(31);
    auto ctx = DvrContext::make_zp(2);
    for (int round = 0; round < 200; ++round) {
        std::set<std::string> seen;
        std::vector<Element> s;
        for (int i = 0; i < 6; ++i) {
            Element e = ctx.random_element(rng, 4);
            if (seen.insert(ctx.format(e)).second) s.push_back(e);
        }
        if (s.size() < 2) continue;
        std::vector<Element> t(s.begin(), s.begin() + s.size() / 2 + 1);
        PointedPartition ps = associated_partition(ctx, s);
        PointedPartition pt = associated_partition(ctx, t);
        for (const auto& e : t) {
            int rho_t = pt.blocks[pt.block_of(e)].rho;
            int rho_s = ps.blocks[ps.block_of(e)].rho;
            CHECK(rho_t <= rho_s);
        }
    }
}

TEST_CASE("input validation") {
    auto z2 = DvrContext::make_zp(2);
    CHECK_THROWS_AS(associated_partition(z2, {}), Error);
    CHECK_THROWS_AS(associated_partition(z2, els(z2, {1, 1})), Error);
    CHECK_THROWS_AS(is_balanced(z2, {}), Error);
    CHECK_THROWS_AS(enumerate_balanced_collect(z2, 0, 5), Error);
}
