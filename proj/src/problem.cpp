// Copyright 2026 The dualqf Authors
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

#include "dualqf/problem.hpp"

#include <functional>
#include <map>
#include <set>

#include <json.hpp>

#include "dualqf/dualize.hpp"
#include "dualqf/normal.hpp"
#include "dualqf/simgrp.hpp"

namespace dualqf {

namespace {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

[[noreturn]] void fail(Errc code, const std::string& where, const std::string& what) {
  throw Error(code, "at " + (where.empty() ? std::string("/") : where) + ": " + what);
}

std::size_t read_count(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) fail(Errc::ParseError, where, "expected a non-negative integer");
  return j.get<std::size_t>();
}

Scalar read_scalar(const FieldSpec& field, const json& j, const std::string& where) {
  try {
    if (j.is_string()) return Scalar::parse(field, j.get<std::string>());
    if (j.is_number_integer()) return Scalar::parse(field, j.dump());
  } catch (const Error& e) {
    fail(Errc::ParseError, where, e.what());
  }
  fail(Errc::ParseError, where, "expected a scalar string");
}

Vector read_vector(const FieldSpec& field, const json& j, const std::string& where, std::optional<std::size_t> len) {
  if (!j.is_array()) fail(Errc::ParseError, where, "expected an array");
  if (len && j.size() != *len) {
    fail(Errc::ParseError, where, "expected " + std::to_string(*len) + " entries, got " + std::to_string(j.size()));
  }
  Vector v;
  v.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(read_scalar(field, j[i], where + "/" + std::to_string(i)));
  return v;
}

Matrix read_matrix(const FieldSpec& field, const json& j, const std::string& where, std::optional<std::size_t> rows,
                   std::optional<std::size_t> cols) {
  if (!j.is_array()) fail(Errc::ParseError, where, "expected an array of rows");
  if (rows && j.size() != *rows) fail(Errc::ParseError, where, "expected " + std::to_string(*rows) + " rows");
  if (!cols) cols = j.empty() ? 0 : j[0].size();
  std::vector<Vector> out;
  for (std::size_t r = 0; r < j.size(); ++r) out.push_back(read_vector(field, j[r], where + "/" + std::to_string(r), cols));
  return Matrix::from_rows(field, *cols, out);
}

const json* member(const json& obj, const char* key) {
  auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

ojson scalar_json(const Scalar& s) { return s.to_string(); }

ojson vector_json(std::span<const Scalar> v) {
  ojson out = ojson::array();
  for (const auto& s : v) out.push_back(scalar_json(s));
  return out;
}

ojson rows_json(const std::vector<Vector>& rows) {
  ojson out = ojson::array();
  for (const auto& r : rows) out.push_back(vector_json(r));
  return out;
}

ojson matrix_json(const Matrix& m) { return rows_json(m.row_list()); }

ojson range_json(IndexRange r) {
  ojson out = ojson::array();
  for (std::size_t i = r.begin; i < r.end; ++i) out.push_back(i);
  return out;
}

ojson instance_json(const MetricSpaceInstance& inst) {
  ojson upper = ojson::array();
  for (const auto& [ij, v] : inst.Q().upper()) upper.push_back(ojson::array({ij.first, ij.second, v.to_string()}));
  ojson doc;
  doc["field"] = inst.field().name();
  doc["n"] = inst.n();
  doc["S"] = rows_json(inst.s_basis());
  doc["Q"] = ojson{{"diag", vector_json(inst.Q().diag())}, {"upper", std::move(upper)}};
  return doc;
}

std::string render(const ojson& doc) { return doc.dump(2) + "\n"; }

template <class T>
const T& require_section(const std::optional<T>& section, const char* key, std::string_view command) {
  if (!section) {
    throw Error(Errc::InvalidArgument, std::string(command) + " needs a \"" + key + "\" section in the problem file");
  }
  return *section;
}

ojson cmd_radical(const ProblemFile& p, const RunOptions&) {
  const auto& inst = p.instance;
  const auto rad = radical(inst);
  ojson doc;
  doc["n"] = inst.n();
  doc["m"] = inst.m();
  doc["d"] = rad.d;
  doc["polar_gram"] = matrix_json(polar_gram(inst));
  doc["R"] = matrix_json(rad.R.basis());
  doc["R_in_S"] = matrix_json(rad.R_in_S.basis());
  return doc;
}

ojson cmd_check_condition(const ProblemFile& p, const RunOptions&) {
  return ojson{{"condition", check_radical_condition(p.instance)}};
}

ojson cmd_dualize(const ProblemFile& p, const RunOptions& opt) {
  const auto& inst = p.instance;
  if (opt.half_gram && inst.field().is_char_two()) {
    throw Error(Errc::CharTwo, "--half-gram is only defined in characteristic != 2");
  }
  const auto res = dualize(inst);
  const auto& ab = res.adapted;
  ojson doc;
  doc["n"] = ab.n;
  doc["m"] = ab.m;
  doc["d"] = ab.d;
  doc["I1"] = range_json(ab.I1());
  doc["I2"] = range_json(ab.I2());
  doc["I3"] = range_json(ab.I3());
  doc["adapted_basis"] = rows_json(ab.A.column_list());
  doc["dual_basis"] = matrix_json(ab.A_inv);
  doc["G22"] = matrix_json(res.G22);
  doc["G22_inv"] = matrix_json(res.G22_inv);
  doc["S_hat"] = matrix_json(res.S_hat.basis());
  doc["R_hat"] = matrix_json(res.R_hat.basis());
  doc["dual"] = instance_json(res.dual_inst);
  if (opt.half_gram) {
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < ab.m; ++j) cols.push_back(inst.to_coords(ab.vector(j)));
    const auto adapted = change_of_basis(inst, Matrix::from_columns(inst.field(), ab.m, cols));
    doc["half_gram"] = ojson{{"primal", matrix_json(polar_gram(adapted))},
                             {"dual", matrix_json(polar_gram(res.dual_inst))}};
  }
  return doc;
}

ojson cmd_double_dual(const ProblemFile& p, const RunOptions&) {
  return ojson{{"double_dual_equals_original", double_dual_check(p.instance)}};
}

ojson coset_json(const LinkedCoset& c) {
  return ojson{{"representative", vector_json(c.representative)}, {"radical", matrix_json(c.radical.basis())}};
}

ojson cmd_linked(const ProblemFile& p, const RunOptions&) {
  return coset_json(linked_coset(p.instance, require_section(p.form, "form", "linked")));
}

ojson cmd_linked_forms(const ProblemFile& p, const RunOptions&) {
  return coset_json(linked_forms(p.instance, require_section(p.vector, "vector", "linked-forms")));
}

ojson cmd_normalize(const ProblemFile& p, const RunOptions&) {
  const auto& inst = p.instance;
  const auto res = inst.field().is_char_two() ? char2_normal_form(inst) : diagonalize(inst);
  ojson doc;
  doc["kind"] = res.kind == NormalKind::Diagonal ? "Diagonal" : "MinorDiagonalChar2";
  doc["d"] = res.d;
  doc["T"] = matrix_json(res.T);
  doc["gram"] = matrix_json(polar_gram(res.normalized));
  doc["normalized"] = instance_json(res.normalized);
  return doc;
}

ojson cmd_similarity(const ProblemFile& p, const RunOptions&) {
  const auto psi = LinearMap(require_section(p.map, "map", "similarity"));
  const auto c = p.ratio ? *p.ratio : Scalar::one(p.instance.field());
  const auto rep = theorem_psi_check(p.instance, psi, c);
  const auto& b = rep.blocks;
  ojson doc;
  doc["preserves_S"] = rep.preserves_S;
  doc["ratio"] = rep.ratio ? ojson(rep.ratio->to_string()) : ojson(nullptr);
  doc["primal_ok"] = rep.primal_ok;
  doc["dual_ok"] = rep.dual_ok;
  doc["adapted_matrix"] = matrix_json(rep.adapted_matrix);
  doc["blocks"] = ojson{{"P11", matrix_json(b.P11)}, {"P12", matrix_json(b.P12)}, {"P13", matrix_json(b.P13)},
                        {"P22", matrix_json(b.P22)}, {"P23", matrix_json(b.P23)}, {"P33", matrix_json(b.P33)}};
  doc["zero_blocks"] = ojson{{"P21", b.P21_zero}, {"P31", b.P31_zero}, {"P32", b.P32_zero}};
  doc["P11_identity"] = b.P11_identity;
  doc["P33_identity"] = b.P33_identity;
  return doc;
}

ojson cmd_adjugate(const ProblemFile& p, const RunOptions&) {
  const Matrix m = p.matrix ? *p.matrix : polar_gram(p.instance);
  if (!m.is_square()) throw Error(Errc::InvalidArgument, "adjugate needs a square matrix");
  ojson doc;
  doc["matrix"] = matrix_json(m);
  doc["determinant"] = determinant(m).to_string();
  doc["adjugate"] = matrix_json(adjugate(m));
  return doc;
}

using Handler = std::function<ojson(const ProblemFile&, const RunOptions&)>;

const std::map<std::string, Handler, std::less<>>& handlers() {
  static const std::map<std::string, Handler, std::less<>> table = {
      {"radical", cmd_radical},
      {"check-condition", cmd_check_condition},
      {"dualize", cmd_dualize},
      {"double-dual", cmd_double_dual},
      {"linked", cmd_linked},
      {"linked-forms", cmd_linked_forms},
      {"normalize", cmd_normalize},
      {"similarity", cmd_similarity},
      {"adjugate", cmd_adjugate},
  };
  return table;
}

}  // namespace

ProblemFile parse_problem(std::string_view text, const std::optional<FieldSpec>& field_override) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::ParseError, std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_object()) fail(Errc::ParseError, "", "expected a JSON object");

  FieldSpec field;
  if (field_override) {
    field = *field_override;
  } else {
    const json* f = member(root, "field");
    if (!f || !f->is_string()) fail(Errc::ParseError, "/field", "expected a field descriptor such as \"Q\" or \"GF(5)\"");
    try {
      field = FieldSpec::parse(f->get<std::string>());
    } catch (const Error& e) {
      fail(e.code() == Errc::ParseError ? Errc::ParseError : Errc::ValidationError, "/field", e.what());
    }
  }

  const json* n_json = member(root, "n");
  if (!n_json) fail(Errc::ParseError, "/n", "missing ambient dimension");
  const std::size_t n = read_count(*n_json, "/n");

  std::vector<Vector> s_basis;
  if (const json* s = member(root, "S")) {
    if (!s->is_array()) fail(Errc::ParseError, "/S", "expected an array of basis vectors");
    for (std::size_t i = 0; i < s->size(); ++i) s_basis.push_back(read_vector(field, (*s)[i], "/S/" + std::to_string(i), n));
  } else {
    fail(Errc::ParseError, "/S", "missing basis of S");
  }
  const std::size_t m = s_basis.size();

  QuadFormCoeffs q(field, m);
  const json* q_json = member(root, "Q");
  if (!q_json || !q_json->is_object()) fail(Errc::ParseError, "/Q", "expected an object with \"diag\" and \"upper\"");
  if (const json* diag = member(*q_json, "diag")) {
    auto values = read_vector(field, *diag, "/Q/diag", m);
    for (std::size_t i = 0; i < m; ++i) q.set_diag(i, values[i]);
  } else {
    fail(Errc::ParseError, "/Q/diag", "missing diagonal coefficients");
  }
  if (const json* upper = member(*q_json, "upper")) {
    if (!upper->is_array()) fail(Errc::ParseError, "/Q/upper", "expected an array of [i, j, value]");
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t e = 0; e < upper->size(); ++e) {
      const auto where = "/Q/upper/" + std::to_string(e);
      const json& entry = (*upper)[e];
      if (!entry.is_array() || entry.size() != 3) fail(Errc::ParseError, where, "expected [i, j, value]");
      const auto i = read_count(entry[0], where + "/0");
      const auto j = read_count(entry[1], where + "/1");
      if (!(i < j && j < m)) {
        fail(Errc::ValidationError, where, "indices must satisfy i < j < " + std::to_string(m));
      }
      if (!seen.insert({i, j}).second) fail(Errc::ValidationError, where, "duplicate entry");
      q.set_upper(i, j, read_scalar(field, entry[2], where + "/2"));
    }
  }

  ProblemFile p;
  try {
    p.instance = MetricSpaceInstance::make(field, n, std::move(s_basis), std::move(q));
  } catch (const Error& e) {
    fail(Errc::ValidationError, "/S", e.what());
  }

  if (const json* j = member(root, "map")) p.map = read_matrix(field, *j, "/map", n, n);
  if (const json* j = member(root, "ratio")) p.ratio = read_scalar(field, *j, "/ratio");
  if (const json* j = member(root, "form")) p.form = read_vector(field, *j, "/form", n);
  if (const json* j = member(root, "vector")) p.vector = read_vector(field, *j, "/vector", n);
  if (const json* j = member(root, "matrix")) {
    p.matrix = read_matrix(field, *j, "/matrix", std::nullopt, std::nullopt);
    if (!p.matrix->is_square()) fail(Errc::ValidationError, "/matrix", "matrix must be square");
  }
  return p;
}

std::string serialize_problem(const ProblemFile& problem) {
  ojson doc = instance_json(problem.instance);
  if (problem.map) doc["map"] = matrix_json(*problem.map);
  if (problem.ratio) doc["ratio"] = scalar_json(*problem.ratio);
  if (problem.form) doc["form"] = vector_json(*problem.form);
  if (problem.vector) doc["vector"] = vector_json(*problem.vector);
  if (problem.matrix) doc["matrix"] = matrix_json(*problem.matrix);
  return render(doc);
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"radical",      "check-condition", "dualize",
                                                 "double-dual",  "linked",          "linked-forms",
                                                 "normalize",    "similarity",      "adjugate"};
  return names;
}

std::string run_command(const ProblemFile& problem, std::string_view command, const RunOptions& options) {
  const auto& table = handlers();
  auto it = table.find(command);
  if (it == table.end()) throw Error(Errc::InvalidArgument, "unknown command \"" + std::string(command) + "\"");
  return render(it->second(problem, options));
}

int exit_code_for(Errc code) noexcept { return code == Errc::RadicalConditionViolated ? 2 : 1; }

}  // namespace dualqf
