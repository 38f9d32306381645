#include "splitiv/orderings.hpp"

#include <algorithm>
#include <set>

namespace splitiv {

namespace {

// Number of base-q digits of `length`: the smallest L with q^L > length,
// which keeps enough fresh residues at every depth the greedy run reaches.
int min_pool_level(std::int64_t q, int length) {
    int level = 1;
    std::int64_t covered = q;
    while (covered <= length) {
        covered *= q;
        ++level;
    }
    return level;
}

}  // namespace

POrdering greedy_p_ordering(const DvrContext& ctx, int length, int pool_level) {
    if (length < 1) fail(Errc::invalid_argument, "ordering length must be positive");
    if (pool_level < min_pool_level(ctx.q(), length))
        fail(Errc::pool_too_shallow, "pool level " + std::to_string(pool_level) +
                                         " is too shallow for length " + std::to_string(length));
    std::vector<Element> pool = ctx.representatives(pool_level);

    POrdering out{ctx, {}, {}};
    out.seq.reserve(length);
    out.alpha.reserve(length);
    for (int k = 0; k < length; ++k) {
        const Element* best = nullptr;
        ExtNat best_value;
        for (const Element& cand : pool) {
            ExtNat value(0);
            for (const Element& prev : out.seq) {
                value = value + valuation_diff(ctx, cand, prev);
                if (best && !(value < best_value)) break;
            }
            if (!best || value < best_value) {
                best = &cand;
                best_value = value;
            }
        }
        if (!best || best_value.is_infinite())
            fail(Errc::internal, "greedy selection exhausted the pool");
        out.seq.push_back(*best);
        out.alpha.push_back(best_value.finite());
    }
    return out;
}

std::int64_t legendre_alpha(std::int64_t q, std::int64_t k) {
    if (q < 2 || k < 0) fail(Errc::invalid_argument, "legendre_alpha needs q >= 2, k >= 0");
    std::int64_t total = 0;
    for (std::int64_t power = q; power <= k; power *= q) {
        total += k / power;
        if (power > k / q) break;  // next power would overflow past k anyway
    }
    return total;
}

GeneralizedBinomial generalized_binomial_check(const DvrContext& ctx, int n) {
    if (n < 1) fail(Errc::invalid_argument, "binomial exponent must be >= 1");
    std::int64_t degree = 1;
    for (int i = 0; i < n; ++i) {
        if (degree > (std::int64_t{1} << 20) / ctx.q())
            fail(Errc::invalid_argument, "q^n too large");
        degree *= ctx.q();
    }

    GeneralizedBinomial out{greedy_p_ordering(ctx, static_cast<int>(degree), n + 1),
                            SplitPolynomial{ctx, {}, {}, BigInt(0)},
                            {}};

    // The first q^n entries must form a complete residue system mod M^n.
    std::set<BigInt> residues;
    for (const Element& a : out.ordering.seq) residues.insert(ctx.rep_index(ctx.truncate(a, n)));
    if (static_cast<std::int64_t>(residues.size()) != degree)
        fail(Errc::internal, "greedy ordering prefix is not a complete residue system");

    out.poly = make_split_polynomial(ctx, out.ordering.seq,
                                     std::vector<BigInt>(out.ordering.seq.size(), BigInt(1)),
                                     BigInt(legendre_alpha(ctx.q(), degree)));
    out.report = classify(out.poly);
    return out;
}

}  // namespace splitiv
