#pragma once

#include <vector>

#include "splitiv/class_union.hpp"
#include "splitiv/exactla.hpp"
#include "splitiv/partition.hpp"

namespace splitiv {

/// F = c^-1 * prod (x - s)^{m_s} with root set S in R and positive
/// multiplicities. Only v(c) is stored: over a DVR the valuation determines
/// c up to a unit, and associated polynomials are identified throughout.
///
/// F maps R into R iff const_val <= fixed_divisor_val(roots, mult), with
/// equality exactly for the image-primitive representative.
struct SplitPolynomial {
    DvrContext ctx;
    std::vector<Element> roots;  // sorted, distinct
    std::vector<BigInt> mult;    // aligned with roots, all >= 1
    BigInt const_val = 0;        // v(c)
};

/// Validates, sorts roots (carrying multiplicities along) and rejects
/// duplicates and non-positive multiplicities.
SplitPolynomial make_split_polynomial(const DvrContext& ctx, std::vector<Element> roots,
                                      std::vector<BigInt> mult, BigInt const_val);

/// Per block of P, the value v(f(w)) taken at every point w of every poor
/// neighborhood of that block; computed from block levels and pairwise
/// valuations alone, never by evaluating f. Indexed like p.blocks.
std::vector<BigInt> poor_values(const PointedPartition& p, const std::vector<Element>& roots,
                                const std::vector<BigInt>& mult);

/// Same, with the partition matrix already at hand (the values are A times
/// the per-block multiplicity sums).
std::vector<BigInt> poor_values(const PointedPartition& p, const PartitionMatrix& a,
                                const std::vector<Element>& roots, const std::vector<BigInt>& mult);

std::vector<BigInt> poor_values(const DvrContext& ctx, const std::vector<Element>& roots,
                                const std::vector<BigInt>& mult);

/// v(d_f): minimum of the poor values over the blocks.
BigInt fixed_divisor_val(const DvrContext& ctx, const std::vector<Element>& roots,
                         const std::vector<BigInt>& mult);

/// Points where v(f) exceeds the fixed-divisor valuation: the rich set plus
/// the poor parts of every block whose poor value exceeds the minimum.
ClassUnion posh_set(const DvrContext& ctx, const std::vector<Element>& roots,
                    const std::vector<BigInt>& mult);

ClassUnion posh_set(const PointedPartition& p, const std::vector<Element>& roots,
                    const std::vector<BigInt>& mult);

/// The equalizing polynomial of a balanced set: multiplicities from the
/// unimodular solution of the partition-matrix system, constant valuation
/// equal to the equalized value e = v(d_f). Fails with Errc::not_balanced.
SplitPolynomial equalizing_polynomial(const DvrContext& ctx, const std::vector<Element>& s);

/// Independent second construction: bottom-up over the partition tree,
/// combining child polynomials with lcm-scaled exponents, then dividing by
/// the gcd. Agrees with equalizing_polynomial on every balanced set.
SplitPolynomial equalizing_polynomial_lcm(const DvrContext& ctx, const std::vector<Element>& s);

}  // namespace splitiv
