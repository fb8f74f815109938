#pragma once

#include <string>

#include <json.hpp>

#include "smyth/balance_lp.hpp"
#include "smyth/local_conditions.hpp"
#include "smyth/local_witness.hpp"
#include "smyth/solver.hpp"
#include "smyth/witness.hpp"

namespace smyth {

using Json = nlohmann::ordered_json;

/// Integer as a JSON number when it fits in int64, else as a decimal string.
Json integer_json(const BigInt& x);
Json rational_json(const Rational& x);  // always "num/den" or "num"

Json coefficients_json(const Coefficients& c);
Json decision_json(const Coefficients& c, const Decision& d);
Json witness_json(const Coefficients& c, const MatrixWitness& w);
Json certificate_json(const GordanCertificate& cert);
Json weighting_json(const Hypergraph& g, const BalancedWeighting& w);
Json report_json(const SolveReport& r, bool with_timings);
Json local_uniform_json(const Coefficients& c, const BigInt& p, unsigned k, const LocalUniformResult& r);

/// The "matrix" member of a witness document (integers or integer strings).
/// Throws kParse on malformed input.
IntMatrix parse_witness_matrix(const std::string& text);

}  // namespace smyth
