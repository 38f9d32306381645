#include "splitiv/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace splitiv {

namespace {

BigInt image_primitive_gap(const SplitPolynomial& f) {
    return fixed_divisor_val(f.ctx, f.roots, f.mult) - f.const_val;
}

void require_image_primitive(const SplitPolynomial& f, const char* who) {
    if (image_primitive_gap(f) != 0)
        fail(Errc::not_image_primitive, std::string(who) + ": polynomial is not image-primitive");
}

/// Partition data of one candidate support T, with the per-root linear
/// coefficients of the poor values: v(f_T(w)) on poor neighborhoods of
/// block u equals sum_j coef[u][j] * k_j.
struct SupportData {
    std::vector<Element> roots;
    PointedPartition partition;
    std::vector<std::vector<std::int64_t>> coef;  // blocks x |T|
    ClassUnion rich;
    std::vector<std::vector<ResidueClass>> poor;
    std::vector<std::int64_t> caps;  // per-root candidate bound
    std::int64_t total = 0;          // product of caps; 0 when too large

    SupportData(const DvrContext& ctx, std::vector<Element> t_roots,
                std::vector<std::int64_t> t_caps)
        : roots(std::move(t_roots)),
          partition(associated_partition(ctx, roots)),
          coef(partition.blocks.size(), std::vector<std::int64_t>(roots.size())),
          rich(rich_set(partition)),
          poor(poor_neighborhoods(partition)),
          caps(std::move(t_caps)) {
        PartitionMatrix a = partition_matrix(partition);
        std::vector<std::size_t> block_of(roots.size());
        for (std::size_t b = 0; b < partition.blocks.size(); ++b)
            for (const Element& m : partition.blocks[b].members) {
                auto it = std::lower_bound(
                    roots.begin(), roots.end(), m,
                    [&](const Element& x, const Element& y) { return ctx.cmp(x, y) < 0; });
                block_of[it - roots.begin()] = b;
            }
        for (std::size_t u = 0; u < partition.blocks.size(); ++u)
            for (std::size_t j = 0; j < roots.size(); ++j) coef[u][j] = a.rows[u][block_of[j]];
        total = 1;
        for (std::int64_t cap : caps) {
            if (total > (std::int64_t{1} << 61) / cap) {
                total = 0;
                break;
            }
            total *= cap;
        }
    }

    void decode(std::int64_t index, std::vector<std::int64_t>& k) const {
        for (std::size_t j = caps.size(); j-- > 0;) {
            k[j] = 1 + index % caps[j];
            index /= caps[j];
        }
    }

    std::uint32_t proud_mask(const std::vector<std::int64_t>& k) const {
        std::int64_t best = 0;
        std::vector<std::int64_t> vals(coef.size());
        for (std::size_t u = 0; u < coef.size(); ++u) {
            std::int64_t v = 0;
            for (std::size_t j = 0; j < k.size(); ++j) v += coef[u][j] * k[j];
            vals[u] = v;
            if (u == 0 || v < best) best = v;
        }
        std::uint32_t mask = 0;
        for (std::size_t u = 0; u < coef.size(); ++u)
            if (vals[u] > best) mask |= std::uint32_t{1} << u;
        return mask;
    }

    ClassUnion posh_for_mask(std::uint32_t mask) const {
        ClassUnion u = rich;
        for (std::size_t b = 0; b < poor.size(); ++b)
            if (mask & (std::uint32_t{1} << b))
                for (const auto& c : poor[b]) u.insert(c);
        return u;
    }
};

/// k = l * mult for some integer 1 <= l <= max_power?
bool is_trivial_power(const std::vector<std::int64_t>& k, const std::vector<BigInt>& mult,
                      int max_power) {
    if (BigInt(k[0]) % mult[0] != 0) return false;
    BigInt l = BigInt(k[0]) / mult[0];
    if (l < 1 || l > max_power) return false;
    for (std::size_t j = 1; j < k.size(); ++j)
        if (BigInt(k[j]) != l * mult[j]) return false;
    return true;
}

struct CandidateScan {
    const SupportData& data;
    const ClassUnion& posh_f;
    bool support_is_full;                 // T = S
    const std::vector<BigInt>& f_mult;    // multiplicities of f on T (full support only)
    int max_power;

    // Containment depends only on the proud mask, so candidates sharing a
    // mask resolve through this memo.
    mutable std::unordered_map<std::uint32_t, bool> memo;

    bool is_witness(std::int64_t index, std::vector<std::int64_t>& k) const {
        data.decode(index, k);
        std::uint32_t mask = data.proud_mask(k);
        auto it = memo.find(mask);
        bool contained;
        if (it != memo.end()) {
            contained = it->second;
        } else {
            contained = posh_f.contains_union(data.posh_for_mask(mask));
            memo.emplace(mask, contained);
        }
        if (!contained) return false;
        return !(support_is_full && is_trivial_power(k, f_mult, max_power));
    }
};

}  // namespace

OracleResult oracle_check(const SplitPolynomial& f, const OracleConfig& cfg) {
    if (cfg.max_mult < 1 || cfg.max_power < 1)
        fail(Errc::invalid_argument, "oracle bounds must be at least 1");
    require_image_primitive(f, "oracle_check");

    const DvrContext& ctx = f.ctx;
    const std::size_t n = f.roots.size();
    ClassUnion posh_f = posh_set(ctx, f.roots, f.mult);

    std::vector<std::int64_t> caps_full(n);
    for (std::size_t j = 0; j < n; ++j) {
        BigInt cap = BigInt(cfg.max_power) * f.mult[j];
        if (cap > cfg.max_mult) cap = cfg.max_mult;
        caps_full[j] = cap.convert_to<std::int64_t>();
    }

    // Subsets by size, then lexicographically on index tuples.
    std::vector<std::size_t> pick;
    for (std::size_t size = 1; size <= n; ++size) {
        pick.resize(size);
        for (std::size_t i = 0; i < size; ++i) pick[i] = i;
        while (true) {
            std::vector<Element> roots;
            std::vector<std::int64_t> caps;
            roots.reserve(size);
            caps.reserve(size);
            for (std::size_t i : pick) {
                roots.push_back(f.roots[i]);
                caps.push_back(caps_full[i]);
            }
            SupportData data(ctx, std::move(roots), std::move(caps));
            if (data.total == 0)
                fail(Errc::invalid_argument, "oracle candidate space too large");
            CandidateScan scan{data, posh_f, size == n, f.mult, cfg.max_power, {}};

            std::int64_t hit = data.total;
#ifdef _OPENMP
            if (cfg.parallel) {
                std::atomic<std::int64_t> best{data.total};
#pragma omp parallel
                {
                    std::vector<std::int64_t> k(size);
                    CandidateScan local{data, posh_f, size == n, f.mult, cfg.max_power, {}};
#pragma omp for schedule(dynamic, 512)
                    for (std::int64_t index = 0; index < data.total; ++index) {
                        if (index >= best.load(std::memory_order_relaxed)) continue;
                        if (local.is_witness(index, k)) {
                            std::int64_t seen = best.load(std::memory_order_relaxed);
                            while (index < seen &&
                                   !best.compare_exchange_weak(seen, index,
                                                               std::memory_order_relaxed)) {
                            }
                        }
                    }
                }
                hit = best.load();
            } else
#endif
            {
                std::vector<std::int64_t> k(size);
                for (std::int64_t index = 0; index < data.total; ++index)
                    if (scan.is_witness(index, k)) {
                        hit = index;
                        break;
                    }
            }

            if (hit < data.total) {
                std::vector<std::int64_t> k(size);
                data.decode(hit, k);
                std::vector<BigInt> mult(k.begin(), k.end());
                BigInt fixval = fixed_divisor_val(ctx, data.roots, mult);
                OracleResult result;
                result.confirmed = false;
                result.witness =
                    SplitPolynomial{ctx, data.roots, std::move(mult), std::move(fixval)};
                return result;
            }

            // next combination
            std::size_t i = size;
            while (i-- > 0) {
                if (pick[i] + (size - i) < n) {
                    ++pick[i];
                    for (std::size_t j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
                    break;
                }
                if (i == 0) goto next_size;
            }
        }
    next_size:;
    }
    return OracleResult{true, std::nullopt};
}

bool strict_witness(const SplitPolynomial& f, const SplitPolynomial& g) {
    require_image_primitive(f, "strict_witness");
    require_image_primitive(g, "strict_witness");
    if (!f.ctx.same_domain(g.ctx)) fail(Errc::invalid_argument, "mismatched domains");

    const DvrContext& ctx = f.ctx;
    auto less = [&](const Element& a, const Element& b) { return ctx.cmp(a, b) < 0; };
    if (!std::includes(f.roots.begin(), f.roots.end(), g.roots.begin(), g.roots.end(), less))
        return false;
    bool roots_strict = g.roots.size() < f.roots.size();

    ClassUnion posh_f = posh_set(ctx, f.roots, f.mult);
    ClassUnion posh_g = posh_set(ctx, g.roots, g.mult);
    if (!posh_f.contains_union(posh_g)) return false;
    bool posh_strict = !(posh_f == posh_g);

    return roots_strict || posh_strict;
}

}  // namespace splitiv
