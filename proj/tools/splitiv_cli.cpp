// Command-line front end: every subcommand is a thin wrapper over the
// library, printing either JSON (--json) or a short human-readable summary.
// Exit codes: 0 once a verdict/result was computed (whatever it says),
// 2 for unusable input.

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "splitiv/json_io.hpp"

namespace {

using namespace splitiv;

struct GlobalOpts {
    std::string dvr = "zp";
    std::int64_t p = 2;
    int f = 1;
    bool json = false;
};

DvrContext make_context(const GlobalOpts& g) {
    if (g.dvr == "zp") {
        if (g.f != 1) fail(Errc::invalid_context, "zp backend requires f = 1");
        return DvrContext::make_zp(g.p);
    }
    return DvrContext::make_fqt(g.p, g.f);
}

std::vector<std::string> split_items(const std::string& text, const std::string& seps) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : text) {
        if (seps.find(ch) != std::string::npos) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

// zp sets split on ',' or ';'; fqt elements contain commas, so fqt sets
// split on ';' only.
std::vector<Element> parse_set(const DvrContext& ctx, const std::string& text) {
    std::vector<Element> out;
    for (const auto& item : split_items(text, ctx.backend() == Backend::zp ? ",;" : ";"))
        out.push_back(ctx.parse(item));
    return out;
}

std::vector<BigInt> parse_mults(const std::string& text) {
    std::vector<BigInt> out;
    for (const auto& item : split_items(text, ",")) {
        if (item.empty()) fail(Errc::parse_error, "empty multiplicity");
        out.push_back(BigInt(item));
    }
    return out;
}

void print(const Json& j, bool json_mode, const std::string& pretty) {
    if (json_mode)
        std::cout << j.dump() << "\n";
    else
        std::cout << pretty << "\n";
}

std::string describe_report(const ClassificationReport& report) {
    std::string out = verdict_name(report.verdict);
    if (report.failed_condition) {
        out += " (";
        out += failed_condition_name(*report.failed_condition);
        out += ")";
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"split integer-valued polynomials over a discrete valuation domain"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    app.add_option("--dvr", g.dvr, "backend: zp or fqt")
        ->check(CLI::IsMember({"zp", "fqt"}));
    app.add_option("--p", g.p, "prime p");
    app.add_option("--f", g.f, "extension degree (fqt; q = p^f)");
    app.add_flag("--json", g.json, "emit JSON instead of text");

    std::string set_text, mult_text;
    std::int64_t const_val = 0;
    bool expand = false;
    int max_mult = 1, max_power = 0;
    bool serial = false;
    int max_level = 1;
    std::int64_t max_size = 1;
    int length = 1, pool_level = 1, binom_n = 1;
    std::int64_t lin_aval = 1;
    bool lin_b_unit = false;

    auto* c_partition = app.add_subcommand("partition", "partition associated to a finite set");
    c_partition->add_option("--set", set_text, "elements")->required();

    auto* c_balanced = app.add_subcommand("balanced", "balancedness certificate of a set");
    c_balanced->add_option("--set", set_text, "elements")->required();

    auto* c_equalize = app.add_subcommand("equalize", "equalizing polynomial of a balanced set");
    c_equalize->add_option("--set", set_text, "elements")->required();
    c_equalize->add_flag("--expand", expand, "include integer coefficients (zp)");

    auto* c_classify = app.add_subcommand("classify", "absolute irreducibility of c^-1 prod (x-s)^m");
    c_classify->add_option("--set", set_text, "roots")->required();
    c_classify->add_option("--mult", mult_text, "multiplicities, aligned with --set")->required();
    c_classify->add_option("--const-val", const_val, "v(c)")->required();

    auto* c_linear = app.add_subcommand("classify-linear", "linear ax-b with root in K\\R");
    c_linear->add_option("--a-val", lin_aval, "v(a)")->required();
    c_linear->add_flag("--b-unit", lin_b_unit, "b is a unit");

    auto* c_oracle = app.add_subcommand("oracle", "bounded brute-force verifier");
    c_oracle->add_option("--set", set_text, "roots")->required();
    c_oracle->add_option("--mult", mult_text, "multiplicities")->required();
    c_oracle->add_option("--const-val", const_val, "v(c)")->required();
    c_oracle->add_option("--max-mult", max_mult, "candidate multiplicity bound K")->required();
    c_oracle->add_option("--max-power", max_power, "power bound N (default: K)");
    c_oracle->add_flag("--serial", serial, "disable the parallel candidate scan");

    auto* c_enumerate = app.add_subcommand("enumerate", "balanced sets up to a level");
    c_enumerate->add_option("--max-level", max_level, "representative level bound")->required();
    c_enumerate->add_option("--max-size", max_size, "set size bound")->required();

    auto* c_pordering = app.add_subcommand("pordering", "greedy P-ordering prefix");
    c_pordering->add_option("--length", length, "number of terms")->required();
    c_pordering->add_option("--pool-level", pool_level, "candidate pool level")->required();

    auto* c_binom = app.add_subcommand("binom", "generalized binomial polynomial of degree q^n");
    c_binom->add_option("--n", binom_n, "exponent n")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        DvrContext ctx = make_context(g);

        if (c_partition->parsed()) {
            PointedPartition p = associated_partition(ctx, parse_set(ctx, set_text));
            std::string pretty;
            for (const auto& b : p.blocks)
                pretty += ctx.format(b.srep) + " + M^" + std::to_string(b.rho) + "\n";
            pretty += "blocks: " + std::to_string(p.blocks.size());
            print(partition_json(p), g.json, pretty);
        } else if (c_balanced->parsed()) {
            BalanceCertificate cert = is_balanced(ctx, parse_set(ctx, set_text));
            print(balance_certificate_json(ctx, cert), g.json,
                  cert.balanced ? "balanced" : "not balanced (measure " +
                                                   cert.union_measure.str() + ")");
        } else if (c_equalize->parsed()) {
            std::vector<Element> s = parse_set(ctx, set_text);
            SplitPolynomial poly = equalizing_polynomial(ctx, s);
            PointedPartition p = associated_partition(ctx, s);
            PartitionMatrix a = partition_matrix(p);
            MultiplicityVector mv{poly.mult, poly.const_val};
            Json out = split_polynomial_json(poly, expand && ctx.backend() == Backend::zp);
            out["matrix"] = matrix_json(ctx, a, mv);
            std::string pretty = "mult (";
            for (std::size_t i = 0; i < poly.mult.size(); ++i)
                pretty += (i ? "," : "") + poly.mult[i].str();
            pretty += "), const_val " + poly.const_val.str();
            print(out, g.json, pretty);
        } else if (c_classify->parsed()) {
            SplitPolynomial poly = make_split_polynomial(
                ctx, parse_set(ctx, set_text), parse_mults(mult_text), BigInt(const_val));
            ClassificationReport report = classify(poly);
            print(report_json(ctx, report), g.json, describe_report(report));
        } else if (c_linear->parsed()) {
            Verdict v = classify_linear_kr(ctx, lin_aval, lin_b_unit);
            print(Json{{"verdict", verdict_name(v)}}, g.json, verdict_name(v));
        } else if (c_oracle->parsed()) {
            SplitPolynomial poly = make_split_polynomial(
                ctx, parse_set(ctx, set_text), parse_mults(mult_text), BigInt(const_val));
            OracleConfig cfg;
            cfg.max_mult = max_mult;
            cfg.max_power = max_power > 0 ? max_power : max_mult;
            cfg.parallel = !serial;
            OracleResult result = oracle_check(poly, cfg);
            std::string pretty = result.confirmed ? "confirmed-up-to-bound" : "refuted";
            print(oracle_json(result), g.json, pretty);
        } else if (c_enumerate->parsed()) {
            enumerate_balanced(ctx, max_level, max_size, [&](const std::vector<Element>& s) {
                if (g.json) {
                    Json arr = Json::array();
                    for (const auto& e : s) arr.push_back(ctx.format(e));
                    std::cout << arr.dump() << "\n";
                } else {
                    std::string line;
                    for (std::size_t i = 0; i < s.size(); ++i)
                        line += (i ? " " : "") + ctx.format(s[i]);
                    std::cout << line << "\n";
                }
                return true;
            });
        } else if (c_pordering->parsed()) {
            POrdering ord = greedy_p_ordering(ctx, length, pool_level);
            std::string pretty = "seq:";
            for (const auto& a : ord.seq) pretty += " " + ctx.format(a);
            pretty += "\nalpha:";
            for (auto v : ord.alpha) pretty += " " + std::to_string(v);
            print(pordering_json(ord), g.json, pretty);
        } else if (c_binom->parsed()) {
            GeneralizedBinomial gb = generalized_binomial_check(ctx, binom_n);
            Json out{{"report", report_json(ctx, gb.report)},
                     {"poly", split_polynomial_json(gb.poly)}};
            print(out, g.json,
                  describe_report(gb.report) + ", const_val " + gb.poly.const_val.str());
        }
    } catch (const Error& e) {
        std::cerr << "error (" << errc_name(e.code()) << "): " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
