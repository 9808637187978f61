// SPDX-License-Identifier: Apache-2.0
// JSON forms of the core types.
#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "dynr/classify.hpp"
#include "dynr/orbit.hpp"
#include "dynr/projection.hpp"
#include "dynr/tensor.hpp"
#include "dynr/twist.hpp"
#include "dynr/uea.hpp"
#include "dynr/verma.hpp"

namespace dynr::io {

using Json = nlohmann::ordered_json;

/// Raised for malformed job payloads; the CLI maps it to exit status 2.
class SchemaError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string field(const FieldElement& f);
FieldElement field(const ContextPtr& ctx, const Json& j);

Json roots(const std::vector<Root>& rs);
std::vector<Root> roots(const Json& j, int rank);

Json tensor(const LieAlgebra& g, const Tensor2& t);
Json tensor(const LieAlgebra& g, const Tensor3& t);
Tensor2 tensor2(const LieAlgebra& g, const ContextPtr& ctx, const Json& j);

Json uea(const UEATensor& u);
UEATensor uea(const UEAPtr& alg, std::size_t slots, const Json& j);

Json twist(const TwistSeries& J);
TwistSeries twist(const UEAPtr& alg, const Json& j);

Json orbit(const OrbitFunction& f);
Json coefficients(const RootSystem& rs, const CoefficientFamily& fam);
Json conditions(const ConditionReport& rep);
Json oracle(const OracleReport& rep);

/// Classification job {type, rank, Pi?, Delta, U, t}; t maps "a<k>" or a
/// coordinate string like "[1,0]" to an expression in t1..t_rank.
DynrSpec spec(const Json& j);

}  // namespace dynr::io
