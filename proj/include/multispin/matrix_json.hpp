#pragma once

#include "json.hpp"

#include "multispin/exact_matrix.hpp"

namespace multispin {

using Json = nlohmann::ordered_json;

/// ["reNum/reDen", "imNum/imDen"]
Json scalar_to_json(const GaussianRational& z);
GaussianRational scalar_from_json(const Json& j);

/// {"rows": n, "cols": m, "entries": [[re, im], ...]} in row-major order.
Json matrix_to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const Json& j);

}  // namespace multispin
