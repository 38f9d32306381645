#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "splitiv/error.hpp"
#include "splitiv/numeric.hpp"

namespace splitiv {

enum class Backend { zp, fqt };

/// Element of the valuation domain. Exact in both backends:
///   zp  — an arbitrary-precision integer of Z localized at the prime p;
///   fqt — a polynomial over F_q, stored as coefficient indices in [0, q),
///         lowest degree first, trailing zeros trimmed.
///
/// All arithmetic goes through DvrContext; two elements compare equal iff
/// their canonical payloads match.
struct Element {
    BigInt z;
    std::vector<std::uint32_t> c;

    friend bool operator==(const Element& a, const Element& b) { return a.z == b.z && a.c == b.c; }
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }
};

/// Residue class rep + M^level. The representative is canonical: reduced
/// modulo the level-th power of the uniformizer (zp: 0 <= rep < p^level;
/// fqt: degree < level). Level 0 is all of R.
struct ResidueClass {
    Element rep;
    int level = 0;

    friend bool operator==(const ResidueClass& a, const ResidueClass& b) {
        return a.level == b.level && a.rep == b.rep;
    }
    friend bool operator!=(const ResidueClass& a, const ResidueClass& b) { return !(a == b); }
};

/// A discrete valuation domain (R, M) with finite residue field of order
/// q = p^f, in one of two concrete incarnations:
///
///   zp  — Z localized at the prime p; uniformizer p, q = p (f = 1);
///   fqt — F_q[t] localized at (t); uniformizer t, q = p^f.
///
/// For f >= 2 the coefficient field F_q is stored additively as vectors over
/// F_p, encoded as indices in [0, q) via base-p digits on the power basis
/// 1, u, u^2, ... of F_q = F_p[u]/(m_u). Nothing in this library multiplies
/// two residue-field coefficients, so only the additive structure is ever
/// exercised; the fixed identifications are m_u = u^2 + u + 1 for q = 4 and
/// m_u = u^2 + 2u + 2 for q = 9.
class DvrContext {
public:
    static DvrContext make_zp(std::int64_t p);
    static DvrContext make_fqt(std::int64_t p, int f);

    Backend backend() const { return backend_; }
    std::int64_t p() const { return p_; }
    int f() const { return f_; }
    std::int64_t q() const { return q_; }

    bool same_domain(const DvrContext& other) const {
        return backend_ == other.backend_ && p_ == other.p_ && f_ == other.f_;
    }

    std::string describe() const;

    // -- element construction and text grammar ------------------------------

    Element zero() const;
    Element from_integer(const BigInt& v) const;                    // zp only
    Element from_coeffs(std::vector<std::uint32_t> coeffs) const;   // fqt only

    /// zp: decimal integer. fqt: "c0,c1,...,ck" coefficient indices,
    /// lowest degree first, each in [0, q).
    Element parse(const std::string& text) const;
    std::string format(const Element& a) const;

    const BigInt& zp_value(const Element& a) const;

    // -- arithmetic and valuation -------------------------------------------

    Element sub(const Element& a, const Element& b) const;
    ExtNat valuation(const Element& a) const;

    /// Total order used for every deterministic tie-break: zp numeric order,
    /// fqt by degree then coefficients from the top (= order of the index
    /// sum c_i q^i). Returns <0, 0, >0.
    int cmp(const Element& a, const Element& b) const;

    // -- canonical representatives and residue classes -----------------------

    /// Canonical representative of a + M^level.
    Element truncate(const Element& a, int level) const;

    /// Index of a canonical level-`level` representative in [0, q^level).
    BigInt rep_index(const Element& rep) const;
    Element rep_from_index(const BigInt& index, int level) const;

    /// rep + d * pi^level for a canonical level-`level` rep and digit
    /// d in [0, q); yields a canonical level-(level+1) representative.
    Element append_digit(const Element& rep, std::int64_t d, int level) const;

    /// All q^level canonical representatives, in index order.
    std::vector<Element> representatives(int level) const;

    Element random_element(std::mt19937_64& rng, int level) const;

private:
    DvrContext(Backend b, std::int64_t p, int f, std::int64_t q)
        : backend_(b), p_(p), f_(f), q_(q) {}

    Backend backend_;
    std::int64_t p_;
    int f_;
    std::int64_t q_;
};

// -- spec-level residue class operations -------------------------------------

/// v(a - b); infinity iff a = b.
ExtNat valuation_diff(const DvrContext& ctx, const Element& a, const Element& b);

/// Canonical class containing a at the given level.
ResidueClass class_of(const DvrContext& ctx, const Element& a, int level);

/// The q disjoint level-(level+1) classes whose union is c, ordered by
/// canonical representative.
std::vector<ResidueClass> subclasses(const DvrContext& ctx, const ResidueClass& c);

bool class_contains(const DvrContext& ctx, const ResidueClass& c, const Element& a);
bool class_contains_class(const DvrContext& ctx, const ResidueClass& outer, const ResidueClass& inner);

/// An element of c lying in none of the avoid classes; fails with
/// Errc::covered if the avoid classes exhaust c.
Element class_member_outside(const DvrContext& ctx, const ResidueClass& c,
                             const std::vector<ResidueClass>& avoid);

}  // namespace splitiv
