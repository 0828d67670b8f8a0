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

#include "hypermat/io.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>

#include "hypermat/errors.hpp"

namespace hypermat {
namespace {

std::string quoted(const char* key) { return std::string("'") + key + "'"; }

const Json& get_field(const Json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) throw SchemaError("missing field " + quoted(key));
  return *it;
}

void check_keys(const Json& j, std::initializer_list<const char*> allowed) {
  for (const auto& item : j.items()) {
    bool known = false;
    for (const char* key : allowed)
      if (item.key() == key) {
        known = true;
        break;
      }
    if (!known) throw SchemaError("unexpected field '" + item.key() + "'");
  }
}

int get_int(const Json& j, const char* key) {
  const Json& v = get_field(j, key);
  if (!v.is_number_integer()) throw SchemaError("field " + quoted(key) + " must be an integer");
  return v.get<int>();
}

bool get_bool(const Json& j, const char* key) {
  const Json& v = get_field(j, key);
  if (!v.is_boolean()) throw SchemaError("field " + quoted(key) + " must be a boolean");
  return v.get<bool>();
}

std::string get_string(const Json& j, const char* key) {
  const Json& v = get_field(j, key);
  if (!v.is_string()) throw SchemaError("field " + quoted(key) + " must be a string");
  return v.get<std::string>();
}

std::vector<int> as_int_list(const Json& v, const char* key) {
  if (!v.is_array()) throw SchemaError("field " + quoted(key) + " must be a list");
  std::vector<int> out;
  out.reserve(v.size());
  for (const Json& x : v) {
    if (!x.is_number_integer())
      throw SchemaError("field " + quoted(key) + " must hold integers");
    out.push_back(x.get<int>());
  }
  return out;
}

std::vector<int> get_int_list(const Json& j, const char* key) {
  return as_int_list(get_field(j, key), key);
}

std::vector<std::vector<int>> get_int_lists(const Json& j, const char* key) {
  const Json& v = get_field(j, key);
  if (!v.is_array()) throw SchemaError("field " + quoted(key) + " must be a list");
  std::vector<std::vector<int>> out;
  out.reserve(v.size());
  for (const Json& row : v) out.push_back(as_int_list(row, key));
  return out;
}

BigInt get_bigint(const Json& j, const char* key) {
  const std::string digits = get_string(j, key);
  try {
    return BigInt(digits);
  } catch (const std::exception&) {
    throw SchemaError("field " + quoted(key) + " must be a decimal integer string");
  }
}

void require_object(const Json& j, const char* what) {
  if (!j.is_object()) throw SchemaError(std::string(what) + " must be an object");
}

Json lists_to_json(const std::vector<std::vector<int>>& rows) {
  Json out = Json::array();
  for (const auto& row : rows) out.push_back(row);
  return out;
}

}  // namespace

Json matroid_to_json(const Matroid& m) {
  Json j;
  switch (m.kind()) {
    case MatroidKind::uniform:
      j["type"] = "uniform";
      j["r"] = m.rank();
      j["n"] = m.ground_size();
      break;
    case MatroidKind::linear: {
      const auto& node = static_cast<const LinearNode&>(m.node());
      j["type"] = "linear";
      j["q"] = node.field().q();
      j["columns"] = lists_to_json(node.columns());
      break;
    }
    case MatroidKind::line_set_rank3: {
      const auto& node = static_cast<const LineSetNode&>(m.node());
      j["type"] = "line_set_rank3";
      j["n"] = m.ground_size();
      Json lines = Json::array();
      for (int l = 0; l < node.line_count(); ++l)
        lines.push_back(std::vector<int>(node.line_begin(l), node.line_end(l)));
      j["lines"] = std::move(lines);
      break;
    }
    case MatroidKind::parallel_connection: {
      const auto& node = static_cast<const ParallelNode&>(m.node());
      j["type"] = "parallel_connection";
      j["left"] = matroid_to_json(node.left());
      j["right"] = matroid_to_json(node.right());
      j["basepoint_left"] = node.base_left();
      j["basepoint_right"] = node.base_right();
      break;
    }
  }
  if (m.has_labels()) {
    Json labels = Json::array();
    for (int i = 0; i < m.ground_size(); ++i) labels.push_back(m.label(i));
    j["labels"] = std::move(labels);
  }
  return j;
}

Matroid matroid_from_json(const Json& j) {
  require_object(j, "a matroid document");
  const std::string type = get_string(j, "type");
  Matroid m = [&]() -> Matroid {
    if (type == "uniform") {
      check_keys(j, {"type", "r", "n", "labels"});
      return Matroid::uniform(get_int(j, "r"), get_int(j, "n"));
    }
    if (type == "linear") {
      check_keys(j, {"type", "q", "columns", "labels"});
      return Matroid::linear(Field::make(get_int(j, "q")), get_int_lists(j, "columns"));
    }
    if (type == "line_set_rank3") {
      check_keys(j, {"type", "n", "lines", "labels"});
      const int n = get_int(j, "n");
      if (n < 0) throw SchemaError("field 'n' must be nonnegative");
      std::vector<ElementSet> lines;
      for (const auto& row : get_int_lists(j, "lines")) {
        for (int x : row)
          if (x < 0 || x >= n) throw SchemaError("field 'lines' holds an index outside 0..n-1");
        lines.push_back(ElementSet::from_indices(n, row));
      }
      return Matroid::from_lines(n, lines);
    }
    if (type == "parallel_connection") {
      check_keys(j, {"type", "left", "right", "basepoint_left", "basepoint_right", "labels"});
      const Matroid left = matroid_from_json(get_field(j, "left"));
      const Matroid right = matroid_from_json(get_field(j, "right"));
      return parallel_connection(left, get_int(j, "basepoint_left"), right,
                                 get_int(j, "basepoint_right"));
    }
    throw SchemaError("field 'type' has unknown value '" + type + "'");
  }();
  if (j.contains("labels")) {
    const Json& v = j["labels"];
    if (!v.is_array() || static_cast<int>(v.size()) != m.ground_size())
      throw SchemaError("field 'labels' must list one label per element");
    std::vector<std::string> labels;
    labels.reserve(v.size());
    for (const Json& s : v) {
      if (!s.is_string()) throw SchemaError("field 'labels' must hold strings");
      labels.push_back(s.get<std::string>());
    }
    m = m.with_labels(std::move(labels));
  }
  return m;
}

Json mqt_to_json(const MqtArtifacts& a) {
  Json j;
  j["q"] = a.q;
  j["t"] = a.t;
  j["e"] = a.e;
  j["triangle"] = std::vector<int>(a.triangle.begin(), a.triangle.end());
  j["pencil"] = a.pencil;
  j["tfamily"] = lists_to_json(a.tfamily);
  j["x_points"] = a.x_points;
  j["lines1"] = lists_to_json(a.lines1);
  j["lines2"] = lists_to_json(a.lines2);
  return j;
}

MqtArtifacts mqt_from_json(const Json& j) {
  require_object(j, "a construction witness");
  check_keys(j, {"q", "t", "e", "triangle", "pencil", "tfamily", "x_points", "lines1", "lines2"});
  MqtArtifacts a;
  a.q = get_int(j, "q");
  a.t = get_int(j, "t");
  a.e = get_int(j, "e");
  const auto tri = get_int_list(j, "triangle");
  if (tri.size() != 3) throw SchemaError("field 'triangle' must hold three line indices");
  std::copy(tri.begin(), tri.end(), a.triangle.begin());
  a.pencil = get_int_list(j, "pencil");
  a.tfamily = get_int_lists(j, "tfamily");
  a.x_points = get_int_list(j, "x_points");
  a.lines1 = get_int_lists(j, "lines1");
  a.lines2 = get_int_lists(j, "lines2");
  return a;
}

Json tower_to_json(const TowerSpec& s) {
  Json j;
  j["ell"] = s.ell;
  j["r"] = s.r;
  j["k"] = s.k;
  j["base"] = matroid_to_json(s.base);
  j["base_e"] = s.base_e;
  j["attachment_size"] = s.attachment_size;
  j["basepoint_image"] = s.basepoint_image;
  j["ground_size"] = s.ground_size;
  return j;
}

TowerSpec tower_from_json(const Json& j) {
  require_object(j, "a tower witness");
  check_keys(j, {"ell", "r", "k", "base", "base_e", "attachment_size", "basepoint_image",
                 "ground_size"});
  return TowerSpec{get_int(j, "ell"),
                   get_int(j, "r"),
                   get_int(j, "k"),
                   matroid_from_json(get_field(j, "base")),
                   get_int(j, "base_e"),
                   get_int(j, "attachment_size"),
                   get_int(j, "basepoint_image"),
                   get_int(j, "ground_size")};
}

Json report_to_json(const Report& rep) {
  Json j;
  j["ell"] = rep.ell;
  j["r"] = rep.r;
  j["ground_size"] = rep.ground_size;
  j["w2"] = rep.w2;
  j["w2e"] = rep.w2e;
  Json hyper;
  hyper["value"] = rep.hyperplane_count.str();
  hyper["exact"] = rep.hyperplane_exact;
  j["hyperplanes"] = std::move(hyper);
  j["bonin_bound"] = rep.bonin.str();
  j["max_line_minor"] = rep.max_line_minor;
  j["in_u"] = rep.in_u;
  j["beats_bound"] = rep.beats_bound;
  j["kung_ok"] = rep.kung_ok;
  return j;
}

Report report_from_json(const Json& j) {
  require_object(j, "a report");
  check_keys(j, {"ell", "r", "ground_size", "w2", "w2e", "hyperplanes", "bonin_bound",
                 "max_line_minor", "in_u", "beats_bound", "kung_ok"});
  Report rep;
  rep.ell = get_int(j, "ell");
  rep.r = get_int(j, "r");
  rep.ground_size = get_int(j, "ground_size");
  rep.w2 = get_int(j, "w2");
  rep.w2e = get_int(j, "w2e");
  const Json& hyper = get_field(j, "hyperplanes");
  require_object(hyper, "field 'hyperplanes'");
  check_keys(hyper, {"value", "exact"});
  rep.hyperplane_count = get_bigint(hyper, "value");
  rep.hyperplane_exact = get_bool(hyper, "exact");
  rep.bonin = get_bigint(j, "bonin_bound");
  rep.max_line_minor = get_int(j, "max_line_minor");
  rep.in_u = get_bool(j, "in_u");
  rep.beats_bound = get_bool(j, "beats_bound");
  rep.kung_ok = get_bool(j, "kung_ok");
  return rep;
}

std::string report_text(const Report& rep) {
  std::ostringstream out;
  out << "ell " << rep.ell << ", rank " << rep.r << ", ground size " << rep.ground_size << "\n";
  out << "lines of base: " << rep.w2 << " total, " << rep.w2e << " avoiding the basepoint\n";
  out << "hyperplanes: " << (rep.hyperplane_exact ? "" : ">= ") << rep.hyperplane_count.str()
      << "\n";
  out << "required bound: " << rep.bonin.str() << "\n";
  out << "largest line minor: " << rep.max_line_minor << " points\n";
  out << "verdicts: in_u=" << (rep.in_u ? "true" : "false")
      << " beats_bound=" << (rep.beats_bound ? "true" : "false")
      << " kung_ok=" << (rep.kung_ok ? "true" : "false") << "\n";
  return out.str();
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error("cannot read " + path);
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path + " for writing");
  out << content;
  out.flush();
  if (!out) throw Error("cannot write " + path);
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace hypermat
