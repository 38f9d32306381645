#include "splitiv/dvr.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <limits>
#include <optional>
#include <sstream>

namespace splitiv {

namespace {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool fits_int64(const BigInt& v) {
    static const BigInt lo = std::numeric_limits<std::int64_t>::min();
    static const BigInt hi = std::numeric_limits<std::int64_t>::max();
    return lo <= v && v <= hi;
}

// Guard for p^level in the int64 fast paths.
bool pow_fits_int64(std::int64_t p, int level) {
    std::int64_t acc = 1;
    for (int i = 0; i < level; ++i) {
        if (acc > (std::int64_t{1} << 62) / p) return false;
        acc *= p;
    }
    return true;
}

std::int64_t ipow(std::int64_t b, int e) {
    std::int64_t acc = 1;
    while (e-- > 0) acc *= b;
    return acc;
}

BigInt bigpow(std::int64_t b, int e) {
    BigInt acc = 1;
    BigInt base = b;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

void trim(std::vector<std::uint32_t>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::parse_error: return "parse-error";
        case Errc::invalid_context: return "invalid-context";
        case Errc::invalid_argument: return "invalid-argument";
        case Errc::covered: return "covered";
        case Errc::not_balanced: return "not-balanced";
        case Errc::pool_too_shallow: return "pool-too-shallow";
        case Errc::root_in_r: return "root-in-R";
        case Errc::not_image_primitive: return "not-image-primitive";
        case Errc::singular: return "singular";
        case Errc::nonpositive_solution: return "nonpositive-solution";
        case Errc::internal: return "internal";
    }
    return "unknown";
}

std::int64_t ExtNat::finite() const {
    if (infinite_) fail(Errc::internal, "finite() called on infinite valuation");
    return value_;
}

DvrContext DvrContext::make_zp(std::int64_t p) {
    if (!is_prime(p)) fail(Errc::invalid_context, "zp backend requires a prime p");
    return DvrContext(Backend::zp, p, 1, p);
}

DvrContext DvrContext::make_fqt(std::int64_t p, int f) {
    if (!is_prime(p)) fail(Errc::invalid_context, "fqt backend requires a prime p");
    if (f < 1) fail(Errc::invalid_context, "fqt backend requires f >= 1");
    std::int64_t q = 1;
    for (int i = 0; i < f; ++i) {
        if (q > (std::int64_t{1} << 31) / p)
            fail(Errc::invalid_context, "residue field order q = p^f too large");
        q *= p;
    }
    return DvrContext(Backend::fqt, p, f, q);
}

std::string DvrContext::describe() const {
    std::ostringstream os;
    if (backend_ == Backend::zp)
        os << "Z_(" << p_ << ")";
    else
        os << "F_" << q_ << "[t]_(t)";
    return os.str();
}

Element DvrContext::zero() const { return Element{}; }

Element DvrContext::from_integer(const BigInt& v) const {
    if (backend_ != Backend::zp) fail(Errc::invalid_argument, "from_integer is zp-only");
    Element e;
    e.z = v;
    return e;
}

Element DvrContext::from_coeffs(std::vector<std::uint32_t> coeffs) const {
    if (backend_ != Backend::fqt) fail(Errc::invalid_argument, "from_coeffs is fqt-only");
    for (auto d : coeffs)
        if (d >= static_cast<std::uint32_t>(q_))
            fail(Errc::invalid_argument, "fqt coefficient index out of range");
    trim(coeffs);
    Element e;
    e.c = std::move(coeffs);
    return e;
}

Element DvrContext::parse(const std::string& text) const {
    if (text.empty()) fail(Errc::parse_error, "empty element");
    if (backend_ == Backend::zp) {
        std::size_t i = (text[0] == '-') ? 1 : 0;
        if (i == text.size()) fail(Errc::parse_error, "bad integer: " + text);
        for (; i < text.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(text[i])))
                fail(Errc::parse_error, "bad integer: " + text);
        return from_integer(BigInt(text));
    }
    std::vector<std::uint32_t> coeffs;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (item.empty()) fail(Errc::parse_error, "bad coefficient list: " + text);
        for (char ch : item)
            if (!std::isdigit(static_cast<unsigned char>(ch)))
                fail(Errc::parse_error, "bad coefficient: " + item);
        long long v = std::stoll(item);
        if (v >= q_) fail(Errc::parse_error, "coefficient " + item + " out of range [0, q)");
        coeffs.push_back(static_cast<std::uint32_t>(v));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return from_coeffs(std::move(coeffs));
}

std::string DvrContext::format(const Element& a) const {
    if (backend_ == Backend::zp) return a.z.str();
    if (a.c.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (i) os << ',';
        os << a.c[i];
    }
    return os.str();
}

const BigInt& DvrContext::zp_value(const Element& a) const {
    if (backend_ != Backend::zp) fail(Errc::invalid_argument, "zp_value is zp-only");
    return a.z;
}

Element DvrContext::sub(const Element& a, const Element& b) const {
    Element r;
    if (backend_ == Backend::zp) {
        r.z = a.z - b.z;
        return r;
    }
    // Coefficientwise subtraction; each index is a base-p digit vector over F_p.
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        std::int64_t x = i < a.c.size() ? a.c[i] : 0;
        std::int64_t y = i < b.c.size() ? b.c[i] : 0;
        if (f_ == 1) {
            std::int64_t d = (x - y) % p_;
            if (d < 0) d += p_;
            r.c[i] = static_cast<std::uint32_t>(d);
        } else {
            std::int64_t out = 0, mul = 1;
            for (int j = 0; j < f_; ++j) {
                std::int64_t d = (x % p_ - y % p_) % p_;
                if (d < 0) d += p_;
                out += d * mul;
                mul *= p_;
                x /= p_;
                y /= p_;
            }
            r.c[i] = static_cast<std::uint32_t>(out);
        }
    }
    trim(r.c);
    return r;
}

ExtNat DvrContext::valuation(const Element& a) const {
    if (backend_ == Backend::fqt) {
        for (std::size_t i = 0; i < a.c.size(); ++i)
            if (a.c[i] != 0) return ExtNat(static_cast<std::int64_t>(i));
        return ExtNat::infinity();
    }
    if (a.z.is_zero()) return ExtNat::infinity();
    if (fits_int64(a.z)) {
        std::int64_t v = a.z.convert_to<std::int64_t>();
        std::int64_t k = 0;
        while (v % p_ == 0) {
            v /= p_;
            ++k;
        }
        return ExtNat(k);
    }
    BigInt v = a.z;
    std::int64_t k = 0;
    while (v % p_ == 0) {
        v /= p_;
        ++k;
    }
    return ExtNat(k);
}

int DvrContext::cmp(const Element& a, const Element& b) const {
    if (backend_ == Backend::zp) return a.z.compare(b.z);
    if (a.c.size() != b.c.size()) return a.c.size() < b.c.size() ? -1 : 1;
    for (std::size_t i = a.c.size(); i-- > 0;)
        if (a.c[i] != b.c[i]) return a.c[i] < b.c[i] ? -1 : 1;
    return 0;
}

Element DvrContext::truncate(const Element& a, int level) const {
    if (level < 0) fail(Errc::invalid_argument, "negative level");
    Element r;
    if (backend_ == Backend::fqt) {
        r.c.assign(a.c.begin(), a.c.begin() + std::min<std::size_t>(a.c.size(), level));
        trim(r.c);
        return r;
    }
    if (level == 0) return r;
    if (fits_int64(a.z) && pow_fits_int64(p_, level)) {
        std::int64_t pn = ipow(p_, level);
        std::int64_t v = a.z.convert_to<std::int64_t>() % pn;
        if (v < 0) v += pn;
        r.z = v;
        return r;
    }
    BigInt pn = bigpow(p_, level);
    BigInt v = a.z % pn;
    if (v < 0) v += pn;
    r.z = v;
    return r;
}

BigInt DvrContext::rep_index(const Element& rep) const {
    if (backend_ == Backend::zp) return rep.z;
    BigInt idx = 0;
    for (std::size_t i = rep.c.size(); i-- > 0;) idx = idx * q_ + rep.c[i];
    return idx;
}

Element DvrContext::rep_from_index(const BigInt& index, int level) const {
    if (index < 0) fail(Errc::invalid_argument, "negative representative index");
    Element r;
    if (backend_ == Backend::zp) {
        r.z = index;
        return r;
    }
    BigInt v = index;
    for (int i = 0; i < level && !v.is_zero(); ++i) {
        r.c.push_back((v % q_).convert_to<std::uint32_t>());
        v /= q_;
    }
    if (!v.is_zero()) fail(Errc::invalid_argument, "representative index out of range for level");
    trim(r.c);
    return r;
}

Element DvrContext::append_digit(const Element& rep, std::int64_t d, int level) const {
    Element r = rep;
    if (backend_ == Backend::zp) {
        if (d != 0) r.z += BigInt(d) * bigpow(p_, level);
        return r;
    }
    if (d != 0) {
        r.c.resize(level + 1, 0);
        r.c[level] = static_cast<std::uint32_t>(d);
    }
    return r;
}

std::vector<Element> DvrContext::representatives(int level) const {
    if (level < 0) fail(Errc::invalid_argument, "negative level");
    std::int64_t n = 1;
    for (int i = 0; i < level; ++i) {
        if (n > (std::int64_t{1} << 22) / q_)
            fail(Errc::invalid_argument, "representative pool too large");
        n *= q_;
    }
    std::vector<Element> pool;
    pool.reserve(n);
    for (std::int64_t i = 0; i < n; ++i) pool.push_back(rep_from_index(i, level));
    return pool;
}

Element DvrContext::random_element(std::mt19937_64& rng, int level) const {
    std::int64_t n = pow_fits_int64(q_, level) ? ipow(q_, level) : 0;
    if (n == 0) fail(Errc::invalid_argument, "level too deep for random sampling");
    std::uniform_int_distribution<std::int64_t> dist(0, n - 1);
    return rep_from_index(dist(rng), level);
}

// -- residue class operations -------------------------------------------------

ExtNat valuation_diff(const DvrContext& ctx, const Element& a, const Element& b) {
    if (ctx.backend() == Backend::zp && fits_int64(a.z) && fits_int64(b.z)) {
        std::int64_t x = a.z.convert_to<std::int64_t>();
        std::int64_t y = b.z.convert_to<std::int64_t>();
        constexpr std::int64_t half = std::int64_t{1} << 62;
        if (-half < x && x < half && -half < y && y < half) {
            std::int64_t d = x - y;
            if (d == 0) return ExtNat::infinity();
            std::int64_t k = 0;
            std::int64_t p = ctx.p();
            while (d % p == 0) {
                d /= p;
                ++k;
            }
            return ExtNat(k);
        }
    }
    return ctx.valuation(ctx.sub(a, b));
}

ResidueClass class_of(const DvrContext& ctx, const Element& a, int level) {
    return ResidueClass{ctx.truncate(a, level), level};
}

std::vector<ResidueClass> subclasses(const DvrContext& ctx, const ResidueClass& c) {
    std::vector<ResidueClass> out;
    out.reserve(c.level >= 0 ? ctx.q() : 0);
    for (std::int64_t d = 0; d < ctx.q(); ++d)
        out.push_back(ResidueClass{ctx.append_digit(c.rep, d, c.level), c.level + 1});
    return out;
}

bool class_contains(const DvrContext& ctx, const ResidueClass& c, const Element& a) {
    return ctx.truncate(a, c.level) == c.rep;
}

bool class_contains_class(const DvrContext& ctx, const ResidueClass& outer, const ResidueClass& inner) {
    return inner.level >= outer.level && ctx.truncate(inner.rep, outer.level) == outer.rep;
}

namespace {

std::optional<Element> member_outside_rec(const DvrContext& ctx, const ResidueClass& c,
                                          const std::vector<ResidueClass>& avoid) {
    for (const auto& a : avoid)
        if (class_contains_class(ctx, a, c)) return std::nullopt;
    bool blocked = false;
    for (const auto& a : avoid)
        if (a.level > c.level && class_contains_class(ctx, c, a)) {
            blocked = true;
            break;
        }
    if (!blocked) return c.rep;
    for (const auto& sub : subclasses(ctx, c))
        if (auto r = member_outside_rec(ctx, sub, avoid)) return r;
    return std::nullopt;
}

}  // namespace

Element class_member_outside(const DvrContext& ctx, const ResidueClass& c,
                             const std::vector<ResidueClass>& avoid) {
    if (auto r = member_outside_rec(ctx, c, avoid)) return *r;
    fail(Errc::covered, "avoid classes cover the class");
}

}  // namespace splitiv
