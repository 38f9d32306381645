#pragma once

#include "splitiv/classifier.hpp"

namespace splitiv {

/// Greedy P-ordering prefix with its intrinsic valuation sequence
/// alpha(k) = v(prod_{i<k} (a_k - a_i)); alpha does not depend on the
/// chosen ordering.
struct POrdering {
    DvrContext ctx;
    std::vector<Element> seq;
    std::vector<std::int64_t> alpha;
};

/// Greedy argmin over the pool of all canonical level-L representatives,
/// ties broken by least element. Requires q^(L-1) >= length so that the
/// pool still separates; fails with Errc::pool_too_shallow otherwise.
POrdering greedy_p_ordering(const DvrContext& ctx, int length, int pool_level);

/// sum_{j>=1} floor(k / q^j): the valuation of the generalized factorial.
std::int64_t legendre_alpha(std::int64_t q, std::int64_t k);

struct GeneralizedBinomial {
    POrdering ordering;
    SplitPolynomial poly;           // first q^n ordering entries, simple roots
    ClassificationReport report;    // classify() of poly
};

/// Builds prod_{i<q^n} (x - a_i) over the first q^n entries of a greedy
/// P-ordering (a complete residue system mod M^n), with constant valuation
/// legendre_alpha(q, q^n), and classifies it.
GeneralizedBinomial generalized_binomial_check(const DvrContext& ctx, int n);

}  // namespace splitiv
