// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>

#include "json.hpp"

#include "hypermat/analysis.hpp"
#include "hypermat/matroid.hpp"
#include "hypermat/mqt.hpp"
#include "hypermat/tower.hpp"

namespace hypermat {

using Json = nlohmann::ordered_json;

// Interchange documents. Serialization is canonical: a fixed key order per
// type tag and no optional keys besides "labels", so parse -> serialize is
// the identity on documents this library wrote. Parsers validate strictly
// and throw SchemaError naming the offending field.

Json matroid_to_json(const Matroid& m);
Matroid matroid_from_json(const Json& j);

Json mqt_to_json(const MqtArtifacts& a);
MqtArtifacts mqt_from_json(const Json& j);

Json tower_to_json(const TowerSpec& s);
TowerSpec tower_from_json(const Json& j);

Json report_to_json(const Report& rep);
Report report_from_json(const Json& j);

/// Multi-line human-readable rendering of a report.
std::string report_text(const Report& rep);

/// Parses a document, mapping syntax failures to ParseError (with the line
/// and byte position from the underlying parser).
Json parse_json(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

/// Canonical on-disk rendering: two-space indent plus trailing newline.
std::string dump_json(const Json& j);

}  // namespace hypermat
