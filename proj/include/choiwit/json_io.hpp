#pragma once

// JSON serialization. Matrices use the repo-wide schema
//   { "dim": n, "entries": [[re, im], ...] }  (row-major, n^2 pairs).
// Non-finite margins serialize as null.

#include "choiwit/faces.hpp"
#include "choiwit/oracle.hpp"
#include "choiwit/spanning.hpp"

#include <nlohmann/json.hpp>

namespace choiwit {

using json = nlohmann::ordered_json;

json matrix_to_json(const CMat& m);
CMat matrix_from_json(const json& j);

json witness_to_json(const WitnessMatrix& w);

json region_to_json(const RegionProfile& r);
json profile_to_json(const PropertyProfile& p);
json classified_to_json(const ClassifiedPoint& cp);

json product_vector_to_json(const ProductVector& v, double value);
json certificate_to_json(const SpanningCertificate& cert);

json detection_to_json(const DetectionReport& rep);

}  // namespace choiwit
