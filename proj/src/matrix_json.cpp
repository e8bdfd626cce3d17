#include "multispin/matrix_json.hpp"

#include <stdexcept>

namespace multispin {

Json scalar_to_json(const GaussianRational& z) {
  return Json::array({rational_to_string(z.re()), rational_to_string(z.im())});
}

GaussianRational scalar_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string()) {
    throw std::invalid_argument("scalar must be a [\"re\", \"im\"] string pair");
  }
  return {parse_rational(j[0].get<std::string>()), parse_rational(j[1].get<std::string>())};
}

Json matrix_to_json(const ExactMatrix& m) {
  Json entries = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) entries.push_back(scalar_to_json(m(r, c)));
  }
  Json out;
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  out["entries"] = std::move(entries);
  return out;
}

ExactMatrix matrix_from_json(const Json& j) {
  const auto rows = j.at("rows").get<std::size_t>();
  const auto cols = j.at("cols").get<std::size_t>();
  const Json& entries = j.at("entries");
  if (!entries.is_array() || entries.size() != rows * cols) {
    throw std::invalid_argument("matrix JSON: entry count does not match rows*cols");
  }
  ExactMatrix m(rows, cols);
  for (std::size_t k = 0; k < entries.size(); ++k) m(k / cols, k % cols) = scalar_from_json(entries[k]);
  return m;
}

}  // namespace multispin
