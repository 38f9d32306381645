#pragma once

#include <nlohmann/json.hpp>

#include "splitiv/class_union.hpp"
#include "splitiv/classifier.hpp"
#include "splitiv/equalizer.hpp"
#include "splitiv/oracle.hpp"
#include "splitiv/orderings.hpp"

namespace splitiv {

using Json = nlohmann::json;

/// Arbitrary-precision values render as JSON numbers while they fit in 64
/// bits and as decimal strings beyond; elements and rationals are always
/// strings.
Json big_json(const BigInt& v);

Json element_json(const DvrContext& ctx, const Element& e);
Json class_union_json(const ClassUnion& u);
Json partition_json(const PointedPartition& p);
Json balance_certificate_json(const DvrContext& ctx, const BalanceCertificate& cert);
Json matrix_json(const DvrContext& ctx, const PartitionMatrix& a, const MultiplicityVector& mv);
Json split_polynomial_json(const SplitPolynomial& poly, bool expand = false);
Json report_json(const DvrContext& ctx, const ClassificationReport& report);
Json pordering_json(const POrdering& ord);
Json oracle_json(const OracleResult& result);

/// Integer coefficients of prod (x-s)^{m_s}, constant term first (zp only).
std::vector<BigInt> expand_zp_coefficients(const SplitPolynomial& poly);

}  // namespace splitiv
