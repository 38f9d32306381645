#pragma once

#include <cstdint>
#include <vector>

#include "splitiv/dvr.hpp"

namespace splitiv::detail {

/// Canonical base-q digit rows of a fixed element list, extended lazily.
/// Digit l of an element selects its residue class of M^(l+1) inside its
/// class of M^l; grouping by digits drives the partition construction.
class DigitTable {
public:
    DigitTable(const DvrContext& ctx, const std::vector<Element>& elems);

    std::int64_t digit(std::size_t i, int level);

private:
    struct Row {
        std::vector<std::int64_t> digits;
        BigInt big;
        std::int64_t small = 0;
        bool is_small = false;
        const std::vector<std::uint32_t>* coeffs = nullptr;
    };

    const DvrContext& ctx_;
    std::vector<Row> rows_;
};

}  // namespace splitiv::detail
