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

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "hypermat/analysis.hpp"
#include "hypermat/errors.hpp"
#include "hypermat/gf.hpp"
#include "hypermat/io.hpp"
#include "hypermat/mqt.hpp"
#include "hypermat/params.hpp"
#include "hypermat/pg.hpp"
#include "hypermat/tower.hpp"

namespace hm = hypermat;

namespace {

int parse_strict_int(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw hm::BadParams("expected a nonnegative integer, got '" + s + "'");
  try {
    return std::stoi(s);
  } catch (const std::exception&) {
    throw hm::BadParams("integer out of range: '" + s + "'");
  }
}

struct Range {
  int lo = 0;
  int hi = -1;  // empty unless lo <= hi
};

// "N" or "A..B"; an empty range (A > B) is legal and yields no rows.
Range parse_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    const int v = parse_strict_int(s);
    return {v, v};
  }
  return {parse_strict_int(s.substr(0, dots)), parse_strict_int(s.substr(dots + 2))};
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty())
    std::cout << text;
  else
    hm::write_text_file(out_path, text);
}

const std::vector<std::string> kSweepHeader = {"ell", "r",     "q",    "t",
                                               "ground", "W2", "W2e",  "hyperplanes",
                                               "bound",  "in_U", "beats_bound"};

std::string bool_cell(bool b) { return b ? "true" : "false"; }

std::string csv_line(const std::vector<std::string>& cells) {
  std::string line;
  for (size_t i = 0; i < cells.size(); ++i) {
    if (i) line += ',';
    line += cells[i];
  }
  return line + "\n";
}

std::string aligned_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  std::string out;
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out += "  ";
      out += row[i];
      if (i + 1 < row.size()) out += std::string(width[i] - row[i].size(), ' ');
    }
    out += "\n";
  }
  return out;
}

// One sweep/verdict row. q, t describe the base construction.
struct SweepRow {
  int ell, r, q, t, ground;
  long long w2, w2e;
  hm::BigInt hyper;
  bool exact;
  hm::BigInt bound;
  bool in_u, beats;
};

std::vector<std::string> row_cells(const SweepRow& row) {
  return {std::to_string(row.ell),
          std::to_string(row.r),
          std::to_string(row.q),
          std::to_string(row.t),
          std::to_string(row.ground),
          std::to_string(row.w2),
          std::to_string(row.w2e),
          (row.exact ? "" : ">=") + row.hyper.str(),
          row.bound.str(),
          bool_cell(row.in_u),
          bool_cell(row.beats)};
}

hm::Json row_json(const SweepRow& row) {
  hm::Json j;
  j["ell"] = row.ell;
  j["r"] = row.r;
  j["q"] = row.q;
  j["t"] = row.t;
  j["ground"] = row.ground;
  j["W2"] = row.w2;
  j["W2e"] = row.w2e;
  hm::Json hyper;
  hyper["value"] = row.hyper.str();
  hyper["exact"] = row.exact;
  j["hyperplanes"] = std::move(hyper);
  j["bound"] = row.bound.str();
  j["in_U"] = row.in_u;
  j["beats_bound"] = row.beats;
  return j;
}

// Base construction shared by the counterexample and report pipelines.
struct Pipeline {
  int q, t, e;
  hm::Matroid base;
  hm::MqtArtifacts mqt;
};

Pipeline pipeline_base(int ell) {
  const hm::LemmaParams p = hm::select_params_lemma(ell);
  auto built = hm::build_mqt(p.q, p.t);
  const int e = hm::min_degree_element(built.first);
  return Pipeline{p.q, p.t, e, std::move(built.first), std::move(built.second)};
}

// Report row without per-member verification: structural counts on the base
// plus the closed-form family size (exact line count when r = 3).
SweepRow sweep_row(const Pipeline& pipe, int ell, int r, int threads) {
  auto [tower, spec] = hm::build_tower(pipe.base, pipe.e, ell, r);
  (void)tower;
  SweepRow row;
  row.ell = ell;
  row.r = r;
  row.q = pipe.q;
  row.t = pipe.t;
  row.ground = spec.ground_size;
  row.w2 = hm::count_lines(spec.base, threads);
  row.w2e = hm::count_lines_avoiding(spec.base, spec.base_e, threads);
  if (r == 3) {
    row.hyper = row.w2;  // hyperplanes of a rank-3 matroid are its lines
    row.exact = true;
  } else {
    row.hyper = hm::big_pow(hm::BigInt(row.w2e), spec.k);
    if (spec.attachment_size > 0) row.hyper *= ell;
    row.exact = false;
  }
  row.bound = hm::bonin_bound(ell, r);
  int minor = hm::max_rank2_minor_points(spec.base, threads);
  if (spec.attachment_size > 0) minor = std::max(minor, spec.attachment_size);
  row.in_u = minor <= ell + 1;
  row.beats = row.hyper > row.bound;
  return row;
}

hm::VerifyMode parse_mode(const std::string& mode) {
  return mode == "exact" ? hm::VerifyMode::exact : hm::VerifyMode::family_only;
}

struct FieldArgs {
  int q = 0;
  std::string op;
  int a = 0, b = 0;
  bool has_b = false;
  std::string format = "json", out;
};

int run_field(const FieldArgs& args) {
  const hm::Field f = hm::Field::make(args.q);
  std::optional<int> result;
  if (!args.op.empty()) {
    hm::FieldOp op;
    if (args.op == "add")
      op = hm::FieldOp::add;
    else if (args.op == "mul")
      op = hm::FieldOp::mul;
    else if (args.op == "neg")
      op = hm::FieldOp::neg;
    else
      op = hm::FieldOp::inv;
    result = hm::field_arith(f, op, args.a,
                             args.has_b ? std::optional<int>(args.b) : std::nullopt);
  }
  if (args.format == "text") {
    std::ostringstream text;
    text << "GF(" << f.q() << "): p=" << f.p() << " k=" << f.k() << " modulus";
    for (int c : f.modulus()) text << ' ' << c;
    text << "\n";
    if (result) text << args.op << " -> " << *result << "\n";
    emit(text.str(), args.out);
    return 0;
  }
  hm::Json j;
  j["q"] = f.q();
  j["p"] = f.p();
  j["k"] = f.k();
  j["modulus"] = f.modulus();
  if (result) {
    j["op"] = args.op;
    j["a"] = args.a;
    if (args.has_b) j["b"] = args.b;
    j["result"] = *result;
  }
  emit(hm::dump_json(j), args.out);
  return 0;
}

struct PgArgs {
  int q = 0, rank = 3;
  std::string format = "json", out;
};

int run_pg(const PgArgs& args) {
  const hm::Field f = hm::Field::make(args.q);
  const auto points = hm::pg_points(args.rank, f);
  std::vector<hm::LineOfPlane> lines;
  if (args.rank == 3) lines = hm::pg_lines_plane(f);
  if (args.format == "text") {
    std::ostringstream text;
    text << "PG(" << args.rank - 1 << "," << args.q << "): " << points.size() << " points";
    if (args.rank == 3) text << ", " << lines.size() << " lines";
    text << "\n";
    for (size_t i = 0; i < points.size(); ++i) {
      text << "point " << i << ":";
      for (int c : points[i].coords) text << ' ' << c;
      text << "\n";
    }
    for (size_t l = 0; l < lines.size(); ++l) {
      text << "line " << l << ": coeffs";
      for (int c : lines[l].coeffs) text << ' ' << c;
      text << " points";
      for (int p : lines[l].points) text << ' ' << p;
      text << "\n";
    }
    emit(text.str(), args.out);
    return 0;
  }
  hm::Json j;
  j["q"] = args.q;
  j["rank"] = args.rank;
  hm::Json jp = hm::Json::array();
  for (const auto& p : points) jp.push_back(p.coords);
  j["points"] = std::move(jp);
  if (args.rank == 3) {
    hm::Json jl = hm::Json::array();
    for (const auto& line : lines) {
      hm::Json one;
      one["coeffs"] = std::vector<int>(line.coeffs.begin(), line.coeffs.end());
      one["points"] = line.points;
      jl.push_back(std::move(one));
    }
    j["lines"] = std::move(jl);
  }
  emit(hm::dump_json(j), args.out);
  return 0;
}

struct MqtArgs {
  int q = 0, t = 0;
  std::string out;
};

int run_mqt(const MqtArgs& args) {
  auto [m, art] = hm::build_mqt(args.q, args.t);
  hm::Json j;
  j["matroid"] = hm::matroid_to_json(m);
  j["witness"] = hm::mqt_to_json(art);
  emit(hm::dump_json(j), args.out);
  return 0;
}

struct CounterexampleArgs {
  int ell = 0, r = 0;
  std::string mode = "family";
  std::string format = "json", out;
  int threads = 1;
  std::uint64_t seed = 0;
};

int run_counterexample(const CounterexampleArgs& args) {
  const Pipeline pipe = pipeline_base(args.ell);
  auto [tower, spec] = hm::build_tower(pipe.base, pipe.e, args.ell, args.r);
  const hm::Report rep = hm::verify_counterexample(tower, spec, parse_mode(args.mode),
                                                   args.threads, args.seed);
  if (args.format == "csv" || args.format == "text") {
    SweepRow row{args.ell,  args.r,
                 pipe.q,    pipe.t,
                 spec.ground_size, rep.w2,
                 rep.w2e,   rep.hyperplane_count,
                 rep.hyperplane_exact, rep.bonin,
                 rep.in_u,  rep.beats_bound};
    if (args.format == "csv") {
      emit(csv_line(kSweepHeader) + csv_line(row_cells(row)), args.out);
    } else {
      std::ostringstream text;
      text << "parameters: q=" << pipe.q << " t=" << pipe.t << " basepoint=" << pipe.e
           << " mode=" << args.mode << "\n"
           << hm::report_text(rep);
      emit(text.str(), args.out);
    }
  } else {
    hm::Json params;
    params["ell"] = args.ell;
    params["r"] = args.r;
    params["q"] = pipe.q;
    params["t"] = pipe.t;
    params["basepoint"] = pipe.e;
    params["mode"] = args.mode;
    params["seed"] = args.seed;
    hm::Json witness;
    witness["mqt"] = hm::mqt_to_json(pipe.mqt);
    witness["tower"] = hm::tower_to_json(spec);
    hm::Json doc;
    doc["parameters"] = std::move(params);
    doc["report"] = hm::report_to_json(rep);
    doc["witness"] = std::move(witness);
    emit(hm::dump_json(doc), args.out);
  }
  return rep.beats_bound && rep.in_u ? 0 : 2;
}

struct FlatsArgs {
  std::string input;
  int rank = 0;
  std::string format = "json", out;
  int threads = 1;
};

int run_flats(const FlatsArgs& args) {
  hm::Json doc = hm::parse_json(hm::read_text_file(args.input));
  // Wrapper documents (the mqt subcommand's output) carry the matroid inside.
  if (doc.is_object() && !doc.contains("type") && doc.contains("matroid"))
    doc = doc["matroid"];
  const hm::Matroid m = hm::matroid_from_json(doc);
  const auto flats = hm::flats_by_rank(m, args.rank, args.threads);
  if (args.format == "text") {
    std::ostringstream text;
    for (const auto& f : flats) {
      bool first = true;
      for (int x : f.elements.to_indices()) {
        if (!first) text << ' ';
        text << x;
        first = false;
      }
      text << "\n";
    }
    emit(text.str(), args.out);
    return 0;
  }
  hm::Json j;
  j["rank"] = args.rank;
  j["count"] = flats.size();
  hm::Json jf = hm::Json::array();
  for (const auto& f : flats) jf.push_back(f.elements.to_indices());
  j["flats"] = std::move(jf);
  emit(hm::dump_json(j), args.out);
  return 0;
}

struct VerifyArgs {
  std::string input;
  int threads = 1;
  bool has_seed = false;
  std::uint64_t seed = 0;
};

int run_verify(const VerifyArgs& args) {
  const hm::Json doc = hm::parse_json(hm::read_text_file(args.input));
  if (!doc.is_object()) throw hm::SchemaError("a report document must be an object");
  const auto need = [](const hm::Json& j, const char* key) -> const hm::Json& {
    const auto it = j.find(key);
    if (it == j.end()) throw hm::SchemaError(std::string("missing field '") + key + "'");
    return *it;
  };
  const hm::Json& jparams = need(doc, "parameters");
  const hm::Json& jwitness = need(doc, "witness");
  const hm::Report stored = hm::report_from_json(need(doc, "report"));
  const hm::MqtArtifacts wit_mqt = hm::mqt_from_json(need(jwitness, "mqt"));
  const hm::TowerSpec wit_tower = hm::tower_from_json(need(jwitness, "tower"));

  const hm::Json& jmode = need(jparams, "mode");
  if (!jmode.is_string()) throw hm::SchemaError("field 'mode' must be a string");
  const hm::Json& jseed = need(jparams, "seed");
  if (!jseed.is_number_integer()) throw hm::SchemaError("field 'seed' must be an integer");
  const std::uint64_t seed = args.has_seed ? args.seed : jseed.get<std::uint64_t>();

  // Rebuild everything from scratch and insist the witness matches exactly.
  auto rebuilt = hm::build_mqt(wit_mqt.q, wit_mqt.t);
  if (hm::mqt_to_json(rebuilt.second) != need(jwitness, "mqt"))
    throw hm::VerificationFailed("construction witness does not match a rebuild");
  auto [tower, spec] =
      hm::build_tower(rebuilt.first, wit_tower.base_e, wit_tower.ell, wit_tower.r);
  if (hm::tower_to_json(spec) != need(jwitness, "tower"))
    throw hm::VerificationFailed("tower witness does not match a rebuild");

  const hm::Report rep = hm::verify_counterexample(
      tower, spec, parse_mode(jmode.get<std::string>()), args.threads, seed);
  if (hm::report_to_json(rep) != need(doc, "report"))
    throw hm::VerificationFailed("stored report does not match recomputation");
  (void)stored;
  if (!(rep.beats_bound && rep.in_u)) return 2;
  std::cout << "report verified\n";
  return 0;
}

struct ReportArgs {
  std::string ell_range, rank_range;
  std::string format = "csv", out;
  int threads = 1;
};

int run_report(const ReportArgs& args) {
  const Range ells = parse_range(args.ell_range);
  const Range ranks = parse_range(args.rank_range);
  const bool empty = ells.lo > ells.hi || ranks.lo > ranks.hi;
  if (!empty) {
    if (ells.lo < 10 || ells.hi > 254) throw hm::BadParams("ell range must lie in 10..254");
    if (ranks.lo < 3) throw hm::BadParams("rank range must start at 3 or higher");
  }
  std::vector<SweepRow> rows;
  if (!empty) {
    for (int ell = ells.lo; ell <= ells.hi; ++ell) {
      const Pipeline pipe = pipeline_base(ell);
      for (int r = ranks.lo; r <= ranks.hi; ++r)
        rows.push_back(sweep_row(pipe, ell, r, args.threads));
    }
  }
  if (args.format == "json") {
    hm::Json j;
    hm::Json jr = hm::Json::array();
    for (const auto& row : rows) jr.push_back(row_json(row));
    j["rows"] = std::move(jr);
    emit(hm::dump_json(j), args.out);
  } else if (args.format == "text") {
    std::vector<std::vector<std::string>> table{kSweepHeader};
    for (const auto& row : rows) table.push_back(row_cells(row));
    emit(aligned_table(table), args.out);
  } else {
    std::string csv = csv_line(kSweepHeader);
    for (const auto& row : rows) csv += csv_line(row_cells(row));
    emit(csv, args.out);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rank-3 line-count constructions, glued towers, and hyperplane bounds"};
  app.require_subcommand(1);

  FieldArgs field_args;
  auto* field = app.add_subcommand("field", "finite field tables and arithmetic");
  field->add_option("--q", field_args.q, "field order")->required();
  auto* op = field->add_option("--op", field_args.op, "operation")
                 ->check(CLI::IsMember({"add", "mul", "neg", "inv"}));
  field->add_option("--a", field_args.a, "first operand")->needs(op);
  auto* field_b = field->add_option("--b", field_args.b, "second operand")->needs(op);
  field->add_option("--format", field_args.format)->check(CLI::IsMember({"json", "text"}));
  field->add_option("--out", field_args.out, "output path");

  PgArgs pg_args;
  auto* pg = app.add_subcommand("pg", "projective geometry points and plane lines");
  pg->add_option("--q", pg_args.q, "field order")->required();
  pg->add_option("--rank", pg_args.rank, "geometry rank (dimension + 1)");
  pg->add_option("--format", pg_args.format)->check(CLI::IsMember({"json", "text"}));
  pg->add_option("--out", pg_args.out, "output path");

  MqtArgs mqt_args;
  auto* mqt = app.add_subcommand("mqt", "build the planar line-count construction");
  mqt->add_option("--q", mqt_args.q, "plane order")->required();
  mqt->add_option("--t", mqt_args.t, "subset size")->required();
  mqt->add_option("--out", mqt_args.out, "output path");

  CounterexampleArgs cex_args;
  auto* cex = app.add_subcommand("counterexample", "build and verify one glued tower");
  cex->add_option("--ell", cex_args.ell, "line-minor parameter")->required();
  cex->add_option("--rank", cex_args.r, "target rank")->required();
  cex->add_option("--mode", cex_args.mode)->check(CLI::IsMember({"exact", "family"}));
  cex->add_option("--format", cex_args.format)->check(CLI::IsMember({"json", "csv", "text"}));
  cex->add_option("--out", cex_args.out, "output path");
  cex->add_option("--threads", cex_args.threads)->check(CLI::PositiveNumber);
  cex->add_option("--seed", cex_args.seed, "sampling seed");

  FlatsArgs flats_args;
  auto* flats = app.add_subcommand("flats", "enumerate flats of a given rank");
  flats->add_option("input", flats_args.input,
                    "matroid document path (bare, or wrapping one under 'matroid')")
      ->required();
  flats->add_option("--rank", flats_args.rank, "flat rank")->required();
  flats->add_option("--format", flats_args.format)->check(CLI::IsMember({"json", "text"}));
  flats->add_option("--out", flats_args.out, "output path");
  flats->add_option("--threads", flats_args.threads)->check(CLI::PositiveNumber);

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "re-verify a counterexample report");
  verify->add_option("input", verify_args.input, "report document path")->required();
  verify->add_option("--threads", verify_args.threads)->check(CLI::PositiveNumber);
  auto* seed_opt = verify->add_option("--seed", verify_args.seed, "override sampling seed");

  ReportArgs report_args;
  auto* report = app.add_subcommand("report", "sweep ell and rank ranges into a table");
  report->add_option("--ell", report_args.ell_range, "ell value or A..B range")->required();
  report->add_option("--rank", report_args.rank_range, "rank value or A..B range")->required();
  report->add_option("--format", report_args.format)
      ->check(CLI::IsMember({"json", "csv", "text"}));
  report->add_option("--out", report_args.out, "output path");
  report->add_option("--threads", report_args.threads)->check(CLI::PositiveNumber);

  int code = 0;
  field->callback([&] {
    field_args.has_b = field_b->count() > 0;
    code = run_field(field_args);
  });
  pg->callback([&] { code = run_pg(pg_args); });
  mqt->callback([&] { code = run_mqt(mqt_args); });
  cex->callback([&] { code = run_counterexample(cex_args); });
  flats->callback([&] { code = run_flats(flats_args); });
  verify->callback([&] {
    verify_args.has_seed = seed_opt->count() > 0;
    code = run_verify(verify_args);
  });
  report->callback([&] { code = run_report(report_args); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int cli_code = app.exit(e);
    return cli_code == 0 ? 0 : 1;
  } catch (const hm::VerificationFailed& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return 2;
  } catch (const hm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return code;
}
