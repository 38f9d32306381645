#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "splitiv/class_union.hpp"
#include "splitiv/dvr.hpp"

namespace splitiv {

/// One block s + M^rho of an M-adic partition, together with the elements
/// of the generating set that fall into it.
struct PartitionBlock {
    Element srep;                  // least member, the block's representative
    int rho = 0;                   // rho_S(s) for every member s
    ResidueClass cls;              // srep + M^rho, canonical
    std::vector<Element> members;  // elements of S in this block, sorted
};

/// The partition C_S associated to a finite set S: blocks are pairwise
/// disjoint, cover R, and every block contains a level-(rho+1) subclass
/// meeting S as well as one disjoint from S. Blocks are sorted by their
/// representative.
struct PointedPartition {
    DvrContext ctx;
    std::vector<PartitionBlock> blocks;

    /// Index of the block containing a; the blocks cover R.
    std::size_t block_of(const Element& a) const;
};

/// Certificate accompanying the balancedness decision: the minimal
/// separating levels n_s, the measure of the disjoint union of the classes
/// s + M^(n_s), and, when they fail to cover R, an element not covered.
struct BalanceCertificate {
    bool balanced = false;
    std::vector<std::pair<Element, int>> levels;  // (s, n_s), sorted by element
    Rational union_measure;
    std::optional<Element> uncovered;
};

/// The unique partition of Lemma-style inductive splitting: a candidate
/// class splits iff all q of its subclasses meet S.
PointedPartition associated_partition(const DvrContext& ctx, std::vector<Element> s);

/// S is balanced iff the minimal neighborhoods s + M^(n_s) separating each
/// s from the rest of S cover R (they are always pairwise disjoint).
BalanceCertificate is_balanced(const DvrContext& ctx, const std::vector<Element>& s);

/// Union over all blocks of the level-(rho+1) subclasses meeting S.
ClassUnion rich_set(const PointedPartition& p);

/// Per block, the level-(rho+1) subclasses disjoint from S, in canonical
/// order; every block has at least one.
std::vector<std::vector<ResidueClass>> poor_neighborhoods(const PointedPartition& p);

/// Least member of each block: a balanced subset S' of S with C_S = C_S'.
std::pair<std::vector<Element>, PointedPartition> balanced_subset(const DvrContext& ctx,
                                                                  const std::vector<Element>& s);

/// All balanced sets whose elements are canonical representatives of level
/// max_level, with at most max_size elements, without duplicates. The
/// callback returns false to stop the stream.
void enumerate_balanced(const DvrContext& ctx, int max_level, std::int64_t max_size,
                        const std::function<bool(const std::vector<Element>&)>& yield);

std::vector<std::vector<Element>> enumerate_balanced_collect(const DvrContext& ctx, int max_level,
                                                             std::int64_t max_size);

}  // namespace splitiv
