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

#include "mforge/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace mforge {
namespace {

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  throw FormatError((path.empty() ? std::string("/") : path) + ": " + what);
}

const Json& member(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) bad(path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) bad(path, "missing key '" + key + "'");
  return *it;
}

long long integer(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) bad(path, "expected an integer");
  return j.get<long long>();
}

std::string string_at(const Json& j, const std::string& path) {
  if (!j.is_string()) bad(path, "expected a string");
  return j.get<std::string>();
}

Labels labels(const Json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "expected an array of labels");
  Labels out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(string_at(j[i], path + "/" + std::to_string(i)));
  return out;
}

Labels distinct_labels(const Json& j, const std::string& path) {
  Labels out = labels(j, path);
  if (std::set<std::string>(out.begin(), out.end()).size() != out.size()) bad(path, "labels are not distinct");
  return out;
}

void check_labels(const Matroid& m, const Labels& ls, const std::string& path) {
  for (std::size_t i = 0; i < ls.size(); ++i) {
    if (!m.has(ls[i])) bad(path + "/" + std::to_string(i), "unknown label '" + ls[i] + "'");
  }
}

Json codes(const std::vector<std::uint32_t>& v) { return Json(v); }

}  // namespace

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FormatError(source + ": byte " + std::to_string(e.byte) + ": invalid JSON");
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json_file(const std::string& path) { return parse_json(read_file(path), path); }

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json field_to_json(const FieldSpec& field) {
  return Json{{"p", field.characteristic()}, {"k", field.degree()}, {"modulus", field.modulus()}};
}

FieldSpec field_from_json(const Json& j, const std::string& path) {
  const long long p = integer(member(j, "p", path), path + "/p");
  const long long k = integer(member(j, "k", path), path + "/k");
  const Json& mod = member(j, "modulus", path);
  if (!mod.is_array()) bad(path + "/modulus", "expected an array");
  std::vector<int> coeffs;
  for (std::size_t i = 0; i < mod.size(); ++i) {
    coeffs.push_back(static_cast<int>(integer(mod[i], path + "/modulus/" + std::to_string(i))));
  }
  if (static_cast<long long>(coeffs.size()) != k + 1) bad(path + "/modulus", "length must be k + 1");
  if (p < 2 || p > 65536) bad(path + "/p", "characteristic out of range");
  try {
    return FieldSpec(static_cast<int>(p), coeffs);
  } catch (const PreconditionError& e) {
    bad(path, e.what());
  }
}

Json matrix_to_json(const Matrix& a) {
  Json rows = Json::array();
  for (int i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (int c = 0; c < a.cols(); ++c) row.push_back(a(i, c).code);
    rows.push_back(row);
  }
  return Json{{"field", field_to_json(a.field())},
              {"colLabels", a.col_labels()},
              {"rowLabels", a.row_labels()},
              {"rows", rows}};
}

Matrix matrix_from_json(const Json& j, const std::string& path) {
  const FieldSpec field = field_from_json(member(j, "field", path), path + "/field");
  const Labels cols = distinct_labels(member(j, "colLabels", path), path + "/colLabels");
  const Json& rows = member(j, "rows", path);
  if (!rows.is_array()) bad(path + "/rows", "expected an array");
  Labels row_labels = Matrix::default_row_labels(static_cast<int>(rows.size()));
  if (j.contains("rowLabels")) {
    row_labels = distinct_labels(j["rowLabels"], path + "/rowLabels");
    if (row_labels.size() != rows.size()) bad(path + "/rowLabels", "one label per row expected");
  }
  std::vector<Element> entries;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string rp = path + "/rows/" + std::to_string(i);
    if (!rows[i].is_array()) bad(rp, "expected an array");
    if (rows[i].size() != cols.size()) bad(rp, "row length differs from the number of column labels");
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const long long v = integer(rows[i][c], rp + "/" + std::to_string(c));
      if (v < 0 || v >= field.order()) bad(rp + "/" + std::to_string(c), "entry is not a field element code");
      entries.push_back(Element{static_cast<std::uint32_t>(v)});
    }
  }
  if (cols.size() > static_cast<std::size_t>(kMaxGround)) bad(path + "/colLabels", "more than 64 columns");
  return Matrix(field, row_labels, cols, std::move(entries));
}

Json matroid_to_json(const Matroid& m) {
  if (const auto* lin = dynamic_cast<const LinearMatroid*>(&m)) {
    return Json{{"kind", "linear"}, {"matrix", matrix_to_json(lin->matrix())}};
  }
  if (const auto* rel = dynamic_cast<const RelaxedMatroid*>(&m)) {
    return Json{{"kind", "relaxed"},
                {"base", matroid_to_json(*rel->base())},
                {"relaxedSet", rel->base()->labels_of(rel->relaxed_set())}};
  }
  if (const auto* mn = dynamic_cast<const MinorMatroid*>(&m)) {
    const MinorSpec spec = mn->spec();
    return Json{{"kind", "minor"},
                {"base", matroid_to_json(*mn->base())},
                {"contract", spec.contract},
                {"delete", spec.remove}};
  }
  throw FormatError("matroids of kind '" + m.kind() + "' have no file format");
}

MatroidPtr matroid_from_json(const Json& j, const std::string& path) {
  const std::string kind = string_at(member(j, "kind", path), path + "/kind");
  if (kind == "linear") {
    return std::make_shared<const LinearMatroid>(matrix_from_json(member(j, "matrix", path), path + "/matrix"));
  }
  if (kind == "relaxed") {
    const MatroidPtr base = matroid_from_json(member(j, "base", path), path + "/base");
    const Labels c = distinct_labels(member(j, "relaxedSet", path), path + "/relaxedSet");
    check_labels(*base, c, path + "/relaxedSet");
    try {
      return relax(base, base->set_of(c));
    } catch (const PreconditionError& e) {
      bad(path + "/relaxedSet", e.what());
    }
  }
  if (kind == "minor") {
    const MatroidPtr base = matroid_from_json(member(j, "base", path), path + "/base");
    MinorSpec spec;
    spec.contract = distinct_labels(member(j, "contract", path), path + "/contract");
    spec.remove = distinct_labels(member(j, "delete", path), path + "/delete");
    check_labels(*base, spec.contract, path + "/contract");
    check_labels(*base, spec.remove, path + "/delete");
    try {
      return minor(base, spec);
    } catch (const PreconditionError& e) {
      bad(path, e.what());
    }
  }
  bad(path + "/kind", "unknown matroid kind '" + kind + "'");
}

Json minor_spec_to_json(const MinorSpec& spec) { return Json{{"contract", spec.contract}, {"delete", spec.remove}}; }

MinorSpec minor_spec_from_json(const Json& j, const std::string& path) {
  MinorSpec spec;
  spec.contract = distinct_labels(member(j, "contract", path), path + "/contract");
  spec.remove = distinct_labels(member(j, "delete", path), path + "/delete");
  return spec;
}

namespace {

Json pairs_to_json(const std::vector<std::pair<std::string, std::string>>& map) {
  Json out = Json::array();
  for (const auto& [a, b] : map) out.push_back(Json::array({a, b}));
  return out;
}

std::vector<std::pair<std::string, std::string>> pairs_from_json(const Json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "expected an array of label pairs");
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string ip = path + "/" + std::to_string(i);
    if (!j[i].is_array() || j[i].size() != 2) bad(ip, "expected a label pair");
    out.emplace_back(string_at(j[i][0], ip + "/0"), string_at(j[i][1], ip + "/1"));
  }
  return out;
}

}  // namespace

Json certificate_to_json(const Certificate& cert) {
  if (cert.kind == Certificate::Kind::kPappusViolation) {
    Json claims = Json::array();
    for (const auto& c : cert.claims) claims.push_back(Json{{"set", c.set}, {"rank", c.rank}});
    return Json{{"kind", "pappus-violation"},
                {"minor", minor_spec_to_json(cert.minor)},
                {"points", cert.points},
                {"claims", claims}};
  }
  return Json{{"kind", "char-conflict"},
              {"fanoMinor", minor_spec_to_json(cert.fano_minor)},
              {"fanoMap", pairs_to_json(cert.fano_map)},
              {"nonFanoMinor", minor_spec_to_json(cert.non_fano_minor)},
              {"nonFanoMap", pairs_to_json(cert.non_fano_map)}};
}

Certificate certificate_from_json(const Json& j, const std::string& path) {
  const std::string kind = string_at(member(j, "kind", path), path + "/kind");
  Certificate cert;
  if (kind == "pappus-violation") {
    cert.kind = Certificate::Kind::kPappusViolation;
    cert.minor = minor_spec_from_json(member(j, "minor", path), path + "/minor");
    const Labels pts = labels(member(j, "points", path), path + "/points");
    if (pts.size() != 9) bad(path + "/points", "expected nine points");
    std::copy(pts.begin(), pts.end(), cert.points.begin());
    const Json& claims = member(j, "claims", path);
    if (!claims.is_array()) bad(path + "/claims", "expected an array");
    for (std::size_t i = 0; i < claims.size(); ++i) {
      const std::string cp = path + "/claims/" + std::to_string(i);
      RankClaim claim;
      claim.set = labels(member(claims[i], "set", cp), cp + "/set");
      claim.rank = static_cast<int>(integer(member(claims[i], "rank", cp), cp + "/rank"));
      cert.claims.push_back(std::move(claim));
    }
    return cert;
  }
  if (kind == "char-conflict") {
    cert.kind = Certificate::Kind::kCharConflict;
    cert.fano_minor = minor_spec_from_json(member(j, "fanoMinor", path), path + "/fanoMinor");
    cert.fano_map = pairs_from_json(member(j, "fanoMap", path), path + "/fanoMap");
    cert.non_fano_minor = minor_spec_from_json(member(j, "nonFanoMinor", path), path + "/nonFanoMinor");
    cert.non_fano_map = pairs_from_json(member(j, "nonFanoMap", path), path + "/nonFanoMap");
    return cert;
  }
  bad(path + "/kind", "unknown certificate kind '" + kind + "'");
}

Json scaling_to_json(const ScalingCertificate& cert) {
  Json out{{"scaled", cert.scaled}};
  if (cert.scaled) {
    Json rows = Json::array();
    Json cols = Json::array();
    for (Element e : cert.row_scales) rows.push_back(e.code);
    for (Element e : cert.col_scales) cols.push_back(e.code);
    out["rowScales"] = rows;
    out["colScales"] = cols;
  } else {
    Json cycle = Json::array();
    for (const auto& [r, c] : cert.cycle) cycle.push_back(Json::array({r, c}));
    out["cycle"] = cycle;
    out["cycleProduct"] = cert.cycle_product.code;
  }
  return out;
}

Json trace_to_json(const WitnessTrace& t) {
  Json out{{"x", t.x}, {"y", t.y ? Json(*t.y) : Json(nullptr)}, {"stage", t.stage}, {"route", t.route}};
  if (t.stage >= 1) {
    out["f"] = t.f;
    out["g"] = t.g;
    out["omega"] = t.omega;
  }
  if (t.stage >= 2) {
    out["hyperplane"] = t.hyperplane;
    out["z"] = t.z;
    out["cocircuit"] = t.cocircuit;
  }
  if (t.stage >= 3) {
    Json coloring = Json::object();
    for (const auto& [label, c] : t.coloring) coloring[label] = c;
    out["coloring"] = coloring;
    out["distinctColors"] = t.distinct_colors;
  }
  if (t.stage >= 4 && !t.monochromatic.empty()) {
    out["monochromatic"] = t.monochromatic;
    out["beta"] = t.beta;
  }
  if (t.stage >= 5) {
    out["linking"] = t.linking;
    out["linkingValue"] = t.linking_value;
  }
  if (t.stage >= 6) {
    out["contracted"] = t.contracted;
    out["u"] = codes(t.u);
    if (!t.border.empty()) {
      out["border"] = Json{{"rowLabels", t.border_rows}, {"colLabels", t.border_cols}, {"entries", codes(t.border)}};
      out["ratio"] = t.ratio;
    }
    if (!t.alpha.empty()) {
      out["alpha"] = codes(t.alpha);
      out["alphaPrime"] = codes(t.alpha_prime);
      out["contractedColumn"] = codes(t.contracted_column);
    }
  }
  if (t.stage >= 7) {
    out["badLines"] = t.bad_lines;
    out["e"] = t.e;
  }
  if (t.k > 0) {
    out["output"] = minor_spec_to_json(t.output);
    out["k"] = t.k;
  }
  return out;
}

}  // namespace mforge
