/*
   Copyright 2026 The sdist authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "sdist/config_json.hpp"

#include <fstream>
#include <stdexcept>

namespace sdist {

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw std::runtime_error("malformed configuration: " + what);
}

Rational exact_entry(const nlohmann::json& e) {
  if (e.is_string()) {
    try {
      return parse_rational(e.get<std::string>());
    } catch (const std::invalid_argument& err) {
      malformed(err.what());
    }
  }
  if (e.is_number_integer()) return Rational(e.get<long>());
  malformed("exact-mode gram entries must be rational strings or integers");
}

double float_entry(const nlohmann::json& e) {
  if (e.is_number()) return e.get<double>();
  if (e.is_string()) return to_double(exact_entry(e));
  malformed("float-mode gram entries must be numbers");
}

}  // namespace

PointConfiguration configuration_from_json(const nlohmann::json& j) {
  if (!j.is_object()) malformed("document is not an object");
  if (!j.contains("dim") || !j["dim"].is_number_integer()) malformed("missing integer \"dim\"");
  const int dim = j["dim"].get<int>();
  if (dim < 2) malformed("dim must be >= 2");
  if (!j.contains("mode") || !j["mode"].is_string()) malformed("missing \"mode\"");
  const std::string mode = j["mode"].get<std::string>();
  if (mode != "exact" && mode != "float") malformed("mode must be \"exact\" or \"float\"");
  if (!j.contains("gram") || !j["gram"].is_array() || j["gram"].empty()) malformed("missing \"gram\" rows");
  const std::size_t n = j["gram"].size();
  for (const auto& row : j["gram"])
    if (!row.is_array() || row.size() != n) malformed("gram is not square");
  const std::string label = j.value("label", std::string{});

  std::optional<Eigen::MatrixXd> coords;
  if (j.contains("coords") && !j["coords"].is_null()) {
    if (!j["coords"].is_array() || j["coords"].size() != n) malformed("coords must have one row per point");
    Eigen::MatrixXd c(static_cast<int>(n), dim);
    for (std::size_t i = 0; i < n; ++i) {
      const auto& row = j["coords"][i];
      if (!row.is_array() || static_cast<int>(row.size()) != dim) malformed("coords rows must have dim entries");
      for (int k = 0; k < dim; ++k) {
        if (!row[static_cast<std::size_t>(k)].is_number()) malformed("coords entries must be numbers");
        c(static_cast<int>(i), k) = row[static_cast<std::size_t>(k)].get<double>();
      }
    }
    coords = std::move(c);
  }

  try {
    if (mode == "exact") {
      if (coords) malformed("coords are a float-mode decoration");
      RationalMatrix gram(n, std::vector<Rational>(n));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) gram[i][k] = exact_entry(j["gram"][i][k]);
      return make_exact_configuration(dim, std::move(gram), label);
    }
    Eigen::MatrixXd gram(static_cast<int>(n), static_cast<int>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        gram(static_cast<int>(i), static_cast<int>(k)) = float_entry(j["gram"][i][k]);
    return make_float_configuration(dim, std::move(gram), std::move(coords), label);
  } catch (const std::invalid_argument& err) {
    malformed(err.what());
  }
}

nlohmann::json configuration_to_json(const PointConfiguration& x) {
  nlohmann::json j;
  j["dim"] = x.dim;
  j["label"] = x.label;
  const int n = x.size();
  nlohmann::json gram = nlohmann::json::array();
  if (x.exact()) {
    j["mode"] = "exact";
    for (int a = 0; a < n; ++a) {
      nlohmann::json row = nlohmann::json::array();
      for (int b = 0; b < n; ++b) row.push_back(to_string(x.gram[a][b]));
      gram.push_back(std::move(row));
    }
  } else {
    j["mode"] = "float";
    for (int a = 0; a < n; ++a) {
      nlohmann::json row = nlohmann::json::array();
      for (int b = 0; b < n; ++b) row.push_back(x.gram_f64(a, b));
      gram.push_back(std::move(row));
    }
  }
  j["gram"] = std::move(gram);
  if (x.coords) {
    nlohmann::json coords = nlohmann::json::array();
    for (int a = 0; a < n; ++a) {
      nlohmann::json row = nlohmann::json::array();
      for (int k = 0; k < x.dim; ++k) row.push_back((*x.coords)(a, k));
      coords.push_back(std::move(row));
    }
    j["coords"] = std::move(coords);
  }
  return j;
}

PointConfiguration load_configuration(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read configuration file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& err) {
    throw std::runtime_error("malformed configuration: " + std::string(err.what()));
  }
  return configuration_from_json(j);
}

void save_configuration(const PointConfiguration& x, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write configuration file: " + path);
  out << configuration_to_json(x).dump(2) << '\n';
}

}  // namespace sdist
