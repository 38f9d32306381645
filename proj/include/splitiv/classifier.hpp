#pragma once

#include <optional>

#include "splitiv/equalizer.hpp"

namespace splitiv {

enum class Verdict {
    absolutely_irreducible,
    not_absolutely_irreducible,
    not_integer_valued,
    not_image_primitive,
};

enum class FailedCondition {
    not_balanced,
    wrong_multiplicities,
    wrong_constant,
    size_congruence_prefilter,
};

const char* verdict_name(Verdict v);
const char* failed_condition_name(FailedCondition c);

/// Outcome of the absolute-irreducibility decision, with the first failing
/// condition and a witness where one exists.
struct ClassificationReport {
    Verdict verdict = Verdict::not_absolutely_irreducible;
    std::optional<FailedCondition> failed_condition;

    // wrong-multiplicities: the equalizing vector and its right-hand value.
    std::optional<std::vector<BigInt>> expected_mult;
    std::optional<BigInt> expected_e;
    // wrong-constant (not integer-valued / not image-primitive): v(d_f).
    std::optional<BigInt> expected_const_val;
    // not-balanced: separating levels, measure, uncovered witness.
    std::optional<BalanceCertificate> balance_certificate;
};

/// Decide absolute irreducibility of c^-1 * prod (x-s)^{m_s}: F must be
/// image-primitive, S balanced with |S| = 1 mod q-1, and (m_s) the
/// unimodular equalizing vector. Never throws on well-formed polynomials —
/// every input gets a verdict.
ClassificationReport classify(const SplitPolynomial& poly);

/// Linear polynomials a x - b with a root in K minus R: absolutely
/// irreducible iff v(a) >= 1 and b is a unit. Fails with Errc::root_in_r
/// when v(a) = 0 (the root then lies in R; use classify).
Verdict classify_linear_kr(const DvrContext& ctx, std::int64_t a_val, bool b_is_unit);

}  // namespace splitiv
