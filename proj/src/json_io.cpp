#include "splitiv/json_io.hpp"

#include <limits>

namespace splitiv {

Json big_json(const BigInt& v) {
    static const BigInt lo = std::numeric_limits<std::int64_t>::min();
    static const BigInt hi = std::numeric_limits<std::int64_t>::max();
    if (lo <= v && v <= hi) return Json(v.convert_to<std::int64_t>());
    return Json(v.str());
}

Json element_json(const DvrContext& ctx, const Element& e) { return Json(ctx.format(e)); }

Json class_union_json(const ClassUnion& u) {
    Json out = Json::array();
    for (const auto& c : u.classes())
        out.push_back({{"rep", u.ctx().format(c.rep)}, {"level", c.level}});
    return out;
}

Json partition_json(const PointedPartition& p) {
    Json blocks = Json::array();
    for (const auto& block : p.blocks) {
        Json members = Json::array();
        for (const auto& m : block.members) members.push_back(p.ctx.format(m));
        blocks.push_back({{"s", p.ctx.format(block.srep)},
                          {"rho", block.rho},
                          {"rep", p.ctx.format(block.cls.rep)},
                          {"level", block.cls.level},
                          {"members", members}});
    }
    return Json{{"blocks", blocks}};
}

Json balance_certificate_json(const DvrContext& ctx, const BalanceCertificate& cert) {
    Json levels = Json::array();
    for (const auto& [s, n] : cert.levels) levels.push_back({{"s", ctx.format(s)}, {"n", n}});
    Json out{{"balanced", cert.balanced},
             {"levels", levels},
             {"union_measure", cert.union_measure.str()}};
    if (cert.uncovered) out["uncovered"] = ctx.format(*cert.uncovered);
    return out;
}

Json matrix_json(const DvrContext& ctx, const PartitionMatrix& a, const MultiplicityVector& mv) {
    Json index = Json::array();
    Json rows = Json::array();
    Json m = Json::array();
    for (std::size_t i = 0; i < a.size(); ++i) {
        index.push_back(ctx.format(a.index[i]));
        Json row = Json::array();
        for (auto v : a.rows[i]) row.push_back(v);
        rows.push_back(row);
        m.push_back(big_json(mv.m[i]));
    }
    return Json{{"index", index}, {"rows", rows}, {"m", m}, {"e", big_json(mv.e)}};
}

Json split_polynomial_json(const SplitPolynomial& poly, bool expand) {
    Json roots = Json::array();
    Json mult = Json::array();
    for (std::size_t i = 0; i < poly.roots.size(); ++i) {
        roots.push_back(poly.ctx.format(poly.roots[i]));
        mult.push_back(big_json(poly.mult[i]));
    }
    Json out{{"roots", roots}, {"mult", mult}, {"const_val", big_json(poly.const_val)}};
    if (expand) {
        Json coeffs = Json::array();
        for (const auto& c : expand_zp_coefficients(poly)) coeffs.push_back(big_json(c));
        out["coeffs"] = coeffs;
    }
    return out;
}

Json report_json(const DvrContext& ctx, const ClassificationReport& report) {
    Json out{{"verdict", verdict_name(report.verdict)}};
    if (report.failed_condition)
        out["failed_condition"] = failed_condition_name(*report.failed_condition);
    Json witness = Json::object();
    if (report.expected_mult) {
        Json m = Json::array();
        for (const auto& v : *report.expected_mult) m.push_back(big_json(v));
        witness["expected_mult"] = m;
    }
    if (report.expected_e) witness["expected_e"] = big_json(*report.expected_e);
    if (report.expected_const_val)
        witness["expected_const_val"] = big_json(*report.expected_const_val);
    if (report.balance_certificate)
        witness["balance_certificate"] = balance_certificate_json(ctx, *report.balance_certificate);
    if (!witness.empty()) out["witness"] = witness;
    return out;
}

Json pordering_json(const POrdering& ord) {
    Json seq = Json::array();
    Json alpha = Json::array();
    for (const auto& a : ord.seq) seq.push_back(ord.ctx.format(a));
    for (auto v : ord.alpha) alpha.push_back(v);
    return Json{{"seq", seq}, {"alpha", alpha}};
}

Json oracle_json(const OracleResult& result) {
    if (result.confirmed) return Json{{"verdict", "confirmed-up-to-bound"}};
    return Json{{"verdict", "refuted"}, {"witness", split_polynomial_json(*result.witness)}};
}

std::vector<BigInt> expand_zp_coefficients(const SplitPolynomial& poly) {
    if (poly.ctx.backend() != Backend::zp)
        fail(Errc::invalid_argument, "coefficient expansion is zp-only");
    BigInt degree = 0;
    for (const auto& m : poly.mult) degree += m;
    if (degree > 4096) fail(Errc::invalid_argument, "expansion degree too large");

    std::vector<BigInt> coeffs{BigInt(1)};
    for (std::size_t i = 0; i < poly.roots.size(); ++i) {
        const BigInt& s = poly.ctx.zp_value(poly.roots[i]);
        std::int64_t reps = poly.mult[i].convert_to<std::int64_t>();
        for (std::int64_t r = 0; r < reps; ++r) {
            coeffs.push_back(0);
            for (std::size_t j = coeffs.size(); j-- > 1;)
                coeffs[j] = coeffs[j - 1] - s * coeffs[j];
            coeffs[0] = -s * coeffs[0];
        }
    }
    return coeffs;
}

}  // namespace splitiv
