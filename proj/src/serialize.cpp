#include "smyth/serialize.hpp"

#include "smyth/error.hpp"

namespace smyth {

Json integer_json(const BigInt& x) {
  if (x.fits_slong_p()) return static_cast<std::int64_t>(x.get_si());
  return x.get_str();
}

Json rational_json(const Rational& x) { return to_string(x); }

Json coefficients_json(const Coefficients& c) {
  Json out = Json::array();
  for (const auto& a : c.a()) out.push_back(a.get_str());
  return out;
}

namespace {

Json valuation_json(const std::optional<long>& v) {
  if (!v) return "inf";
  return *v;
}

}  // namespace

Json decision_json(const Coefficients& c, const Decision& d) {
  Json out;
  out["coefficients"] = coefficients_json(c);
  Json original = Json::array();
  for (const auto& x : c.original()) original.push_back(rational_json(x));
  out["original"] = original;
  out["solvable"] = d.solvable;
  Json places = Json::array();
  for (const auto& rep : d.reports) {
    Json p;
    p["place"] = place_name(rep.place);
    p["holds"] = rep.holds;
    p["violating_index"] = rep.violating_index ? Json(*rep.violating_index) : Json(nullptr);
    p["index"] = rep.detail_index;
    if (std::holds_alternative<RealPlace>(rep.place)) {
      p["lhs"] = rational_json(rep.real_lhs);
      p["rhs"] = rational_json(rep.real_rhs);
    } else {
      p["lhs"] = valuation_json(rep.valuation_lhs);
      p["rhs"] = valuation_json(rep.valuation_rhs);
    }
    places.push_back(p);
  }
  out["places"] = places;
  return out;
}

Json witness_json(const Coefficients& c, const MatrixWitness& w) {
  Json out;
  out["coefficients"] = coefficients_json(c);
  out["N"] = w.m.rows();
  Json matrix = Json::array();
  for (std::size_t r = 0; r < w.m.rows(); ++r) {
    Json row = Json::array();
    for (const auto& x : w.m.row(r)) row.push_back(integer_json(x));
    matrix.push_back(row);
  }
  out["matrix"] = matrix;
  Json ref = Json::array();
  for (const auto& x : w.reference) ref.push_back(integer_json(x));
  out["reference"] = ref;
  out["permutations"] = w.permutations;
  out["determinant_checked"] = w.determinant_checked;
  return out;
}

Json certificate_json(const GordanCertificate& cert) {
  Json out;
  out["vertices"] = cert.vertices;
  Json f = Json::array();
  for (const auto& fi : cert.f) {
    Json row = Json::array();
    for (const auto& x : fi) row.push_back(rational_json(x));
    f.push_back(row);
  }
  out["f"] = f;
  out["margin"] = rational_json(cert.margin);
  return out;
}

Json weighting_json(const Hypergraph& g, const BalancedWeighting& w) {
  Json out;
  Json edges = Json::array(), weights = Json::array();
  for (auto e : w.support()) {
    edges.push_back(g.edge_values(e));
    weights.push_back(rational_json(w.weights[e]));
  }
  out["edges"] = edges;
  out["weights"] = weights;
  return out;
}

Json report_json(const SolveReport& r, bool with_timings) {
  Json out;
  out["coefficients"] = coefficients_json(r.coeffs);
  out["decision"] = decision_json(r.coeffs, r.decision);
  out["method"] = method_name(r.method);
  out["image_dilation"] = r.image_dilation ? rational_json(*r.image_dilation) : Json(nullptr);
  Json attempts = Json::array();
  for (const auto& a : r.attempts) {
    Json j;
    j["D"] = rational_json(a.dilation);
    j["points"] = a.points;
    j["vertices"] = a.vertices;
    j["edges"] = a.edges;
    j["outcome"] = outcome_name(a.outcome);
    if (a.certificate) j["certificate"] = certificate_json(*a.certificate);
    attempts.push_back(j);
  }
  out["D_schedule"] = attempts;
  out["witness"] = r.witness ? witness_json(r.coeffs, *r.witness) : Json(nullptr);
  out["failure"] = r.failure ? Json(*r.failure) : Json(nullptr);
  if (with_timings) {
    Json t = Json::object();
    for (const auto& [stage, s] : r.timings) t[stage] = s;
    out["timings"] = t;
  }
  return out;
}

Json local_uniform_json(const Coefficients& c, const BigInt& p, unsigned k, const LocalUniformResult& r) {
  Json out;
  out["coefficients"] = coefficients_json(c);
  out["prime"] = integer_json(p);
  out["k"] = k;
  out["modulus"] = integer_json(r.modulus);
  out["identical"] = r.identical;
  out["counts"] = r.counts;
  return out;
}

IntMatrix parse_witness_matrix(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::exception& e) {
    fail(ErrorCode::kParse, std::string("witness is not valid JSON: ") + e.what());
  }
  const Json* mat = &doc;
  if (doc.is_object()) {
    if (!doc.contains("matrix")) fail(ErrorCode::kParse, "witness document has no \"matrix\" member");
    mat = &doc["matrix"];
  }
  if (!mat->is_array() || mat->empty()) fail(ErrorCode::kParse, "witness matrix must be a nonempty array of rows");
  const std::size_t cols = (*mat)[0].is_array() ? (*mat)[0].size() : 0;
  if (cols == 0) fail(ErrorCode::kParse, "witness rows must be nonempty arrays");
  IntMatrix m(mat->size(), cols);
  for (std::size_t r = 0; r < mat->size(); ++r) {
    const Json& row = (*mat)[r];
    if (!row.is_array() || row.size() != cols) fail(ErrorCode::kParse, "witness rows differ in length");
    for (std::size_t i = 0; i < cols; ++i) {
      const Json& x = row[i];
      if (x.is_number_integer()) {
        m(r, i) = static_cast<long>(x.get<std::int64_t>());
      } else if (x.is_string()) {
        const Rational q = parse_rational(x.get<std::string>());
        if (!is_integer(q)) fail(ErrorCode::kParse, "witness entries must be integers");
        m(r, i) = q.get_num();
      } else {
        fail(ErrorCode::kParse, "witness entries must be integers");
      }
    }
  }
  return m;
}

}  // namespace smyth
