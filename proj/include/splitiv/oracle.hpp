#pragma once

#include <optional>

#include "splitiv/equalizer.hpp"

namespace splitiv {

/// Bounds for the brute-force verifier. Candidates g = prod (x-t)^{k_t}
/// range over nonempty T inside the root set with 1 <= k_t <= min(max_mult,
/// max_power * m_t); exponents up to max_power are recognized as trivial
/// powers of f. With max_power >= max_mult the search is exactly the
/// per-coordinate bound max_mult.
struct OracleConfig {
    int max_mult = 1;      // K
    int max_power = 1;     // N
    bool parallel = true;  // OpenMP over the candidate space of each T
};

struct OracleResult {
    bool confirmed = false;                  // confirmed-up-to-bound
    std::optional<SplitPolynomial> witness;  // first refuting candidate
};

/// Search for a monic g, not a power of f, whose root support lies in the
/// roots of f and whose posh set is contained in the posh set of f. Such a
/// g refutes absolute irreducibility; exhausting the bounded candidate
/// space confirms it up to the bound. Candidates are scanned by |T|
/// ascending, then T lexicographic, then k lexicographic, and the first
/// witness in that order is reported. Requires an image-primitive input
/// (const_val = v(d_f)).
OracleResult oracle_check(const SplitPolynomial& f, const OracleConfig& cfg);

/// Roots(g) inside roots(f) and posh(g) inside posh(f), at least one of the
/// two inclusions strict. Both polynomials must be image-primitive.
bool strict_witness(const SplitPolynomial& f, const SplitPolynomial& g);

}  // namespace splitiv
