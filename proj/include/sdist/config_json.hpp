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

#ifndef SDIST_CONFIG_JSON_HPP
#define SDIST_CONFIG_JSON_HPP

#include <string>

#include <json.hpp>

#include "sdist/configurations.hpp"

namespace sdist {

/// File format:
///   { "dim": int, "mode": "exact"|"float", "gram": [[entry]],
///     "coords": [[number]] (optional), "label": string }
/// Exact-mode gram entries are rational strings ("-1/7") or integers;
/// float-mode entries are numbers. Malformed documents throw
/// std::runtime_error.
PointConfiguration configuration_from_json(const nlohmann::json& j);

nlohmann::json configuration_to_json(const PointConfiguration& x);

/// Reads/writes the format above. Unreadable or malformed files throw
/// std::runtime_error.
PointConfiguration load_configuration(const std::string& path);
void save_configuration(const PointConfiguration& x, const std::string& path);

}  // namespace sdist

#endif  // SDIST_CONFIG_JSON_HPP
