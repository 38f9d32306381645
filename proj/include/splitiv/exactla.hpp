#pragma once

#include <cstdint>
#include <vector>

#include "splitiv/numeric.hpp"
#include "splitiv/partition.hpp"

namespace splitiv {

/// Symmetric integer matrix of an M-adic partition: block level rho(s) on
/// the diagonal, v(s - t) off the diagonal. Off-diagonal entries are
/// strictly below both incident block levels, and the determinant is
/// non-zero whenever there is more than one block.
struct PartitionMatrix {
    std::vector<Element> index;                   // block representatives, sorted
    std::vector<std::vector<std::int64_t>> rows;  // square, symmetric

    std::size_t size() const { return rows.size(); }
};

/// The unique unimodular positive solution m of A x = e * 1, together with
/// the right-hand value e. e = 0 exactly in the one-block case.
struct MultiplicityVector {
    std::vector<BigInt> m;
    BigInt e;

    friend bool operator==(const MultiplicityVector& a, const MultiplicityVector& b) {
        return a.m == b.m && a.e == b.e;
    }
    friend bool operator!=(const MultiplicityVector& a, const MultiplicityVector& b) {
        return !(a == b);
    }
};

PartitionMatrix partition_matrix(const PointedPartition& p);

/// Exact determinant (fraction-free Bareiss elimination).
BigInt determinant(const PartitionMatrix& a);

/// Solve A x = e * 1 exactly over the rationals and normalize to the
/// unimodular positive integer solution. Fails with Errc::singular or
/// Errc::nonpositive_solution on matrices that are not genuine partition
/// matrices.
MultiplicityVector solve_equalizing(const PartitionMatrix& a);

}  // namespace splitiv
