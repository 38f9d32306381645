#include "splitiv/exactla.hpp"

#include <map>
#include <mutex>
#include <utility>

namespace splitiv {

namespace {

std::vector<std::int64_t> memo_key(const PartitionMatrix& a) {
    std::vector<std::int64_t> key;
    key.reserve(a.size() * a.size());
    for (const auto& row : a.rows) key.insert(key.end(), row.begin(), row.end());
    return key;
}

// The equalizing solution depends only on the matrix, and sweeps revisit the
// same few hundred matrices many thousands of times.
std::mutex memo_mutex;
std::map<std::vector<std::int64_t>, MultiplicityVector> solve_memo;
std::map<std::vector<std::int64_t>, BigInt> det_memo;

MultiplicityVector solve_uncached(const PartitionMatrix& a) {
    const std::size_t n = a.size();
    if (n == 1) return MultiplicityVector{{BigInt(1)}, BigInt(0)};

    // Rational Gaussian elimination on [A | 1] with partial pivoting.
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = a.rows[i][j];
        m[i][n] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) fail(Errc::singular, "partition matrix is singular");
        if (pivot != col) std::swap(m[pivot], m[col]);
        for (std::size_t row = col + 1; row < n; ++row) {
            if (m[row][col] == 0) continue;
            Rational factor = m[row][col] / m[col][col];
            for (std::size_t j = col; j <= n; ++j) m[row][j] -= factor * m[col][j];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = n; i-- > 0;) {
        Rational acc = m[i][n];
        for (std::size_t j = i + 1; j < n; ++j) acc -= m[i][j] * x[j];
        x[i] = acc / m[i][i];
    }

    BigInt denom_lcm = 1;
    for (const auto& xi : x) {
        if (xi <= 0) fail(Errc::nonpositive_solution, "equalizing system has a non-positive coordinate");
        denom_lcm = boost::multiprecision::lcm(denom_lcm, boost::multiprecision::denominator(xi));
    }
    MultiplicityVector result;
    result.m.reserve(n);
    BigInt g = 0;
    for (const auto& xi : x) {
        BigInt v = boost::multiprecision::numerator(xi) *
                   (denom_lcm / boost::multiprecision::denominator(xi));
        g = boost::multiprecision::gcd(g, v);
        result.m.push_back(std::move(v));
    }
    for (auto& v : result.m) v /= g;

    result.e = 0;
    for (std::size_t j = 0; j < n; ++j) result.e += a.rows[0][j] * result.m[j];
    for (std::size_t i = 1; i < n; ++i) {
        BigInt row_value = 0;
        for (std::size_t j = 0; j < n; ++j) row_value += a.rows[i][j] * result.m[j];
        if (row_value != result.e)
            fail(Errc::internal, "equalizing solution does not have a constant right-hand side");
    }
    return result;
}

BigInt determinant_uncached(const PartitionMatrix& a) {
    const std::size_t n = a.size();
    std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = a.rows[i][j];

    // Bareiss fraction-free elimination; every division below is exact.
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t col = 0; col + 1 < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return BigInt(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            sign = -sign;
        }
        for (std::size_t row = col + 1; row < n; ++row) {
            for (std::size_t j = col + 1; j < n; ++j)
                m[row][j] = (m[row][j] * m[col][col] - m[row][col] * m[col][j]) / prev;
            m[row][col] = 0;
        }
        prev = m[col][col];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace

PartitionMatrix partition_matrix(const PointedPartition& p) {
    PartitionMatrix a;
    const std::size_t n = p.blocks.size();
    a.index.reserve(n);
    for (const auto& block : p.blocks) a.index.push_back(block.srep);
    a.rows.assign(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        a.rows[i][i] = p.blocks[i].rho;
        for (std::size_t j = i + 1; j < n; ++j) {
            std::int64_t v = valuation_diff(p.ctx, a.index[i], a.index[j]).finite();
            if (v >= p.blocks[i].rho || v >= p.blocks[j].rho)
                fail(Errc::internal, "blocks do not separate before their levels");
            a.rows[i][j] = a.rows[j][i] = v;
        }
    }
    return a;
}

BigInt determinant(const PartitionMatrix& a) {
    if (a.size() == 0) fail(Errc::invalid_argument, "determinant of empty matrix");
    if (a.size() == 1) return BigInt(a.rows[0][0]);
    auto key = memo_key(a);
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = det_memo.find(key);
        if (it != det_memo.end()) return it->second;
    }
    BigInt det = determinant_uncached(a);
    std::lock_guard<std::mutex> lock(memo_mutex);
    return det_memo.emplace(std::move(key), std::move(det)).first->second;
}

MultiplicityVector solve_equalizing(const PartitionMatrix& a) {
    if (a.size() == 0) fail(Errc::invalid_argument, "empty equalizing system");
    auto key = memo_key(a);
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = solve_memo.find(key);
        if (it != solve_memo.end()) return it->second;
    }
    MultiplicityVector result = solve_uncached(a);
    std::lock_guard<std::mutex> lock(memo_mutex);
    return solve_memo.emplace(std::move(key), std::move(result)).first->second;
}

}  // namespace splitiv
