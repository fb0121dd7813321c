#include "hopf/serialize.hpp"

#include <algorithm>
#include <map>

#include "hopf/errors.hpp"

namespace hopf {

namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("missing key '") + key + "'");
  return j.at(key);
}

std::size_t as_index(const Json& j) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    throw SchemaError("expected a non-negative integer");
  return j.get<std::size_t>();
}

Scalar scalar_from_json(const Field& f, const Json& j) {
  if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
  if (j.is_number_integer()) return Scalar(f, j.get<long long>());
  throw SchemaError("scalar must be a string or integer");
}

}  // namespace

Json vector_to_json(const Vector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.to_string());
  return a;
}

Vector vector_from_json(const Field& f, const Json& j, std::size_t expected_len) {
  if (!j.is_array() || j.size() != expected_len) throw SchemaError("vector has wrong length");
  Vector v;
  for (const auto& x : j) v.push_back(scalar_from_json(f, x));
  return v;
}

Json matrix_to_json(const Matrix& m) {
  Json a = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(vector_to_json(m.row(r)));
  return a;
}

Matrix matrix_from_json(const Field& f, const Json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) throw SchemaError("matrix has wrong row count");
  std::vector<Vector> rs;
  for (const auto& r : j) rs.push_back(vector_from_json(f, r, cols));
  return Matrix::from_rows(f, cols, rs);
}

Json cotable_to_json(const CoTable& t) {
  Json a = Json::array();
  for (const auto& terms : canonical_cotable(t)) {
    Json row = Json::array();
    for (const auto& term : terms) row.push_back(Json::array({term.left, term.right, term.coeff.to_string()}));
    a.push_back(std::move(row));
  }
  return a;
}

CoTable cotable_from_json(const Field& f, const Json& j, std::size_t count, std::size_t left_dim,
                          std::size_t right_dim) {
  if (!j.is_array() || j.size() != count) throw SchemaError("co-table has wrong length");
  CoTable t(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (!j[i].is_array()) throw SchemaError("co-table entry must be a list");
    for (const auto& term : j[i]) {
      if (!term.is_array() || term.size() != 3) throw SchemaError("co-table term must be a triple");
      std::size_t l = as_index(term[0]), r = as_index(term[1]);
      if (l >= left_dim || r >= right_dim) throw SchemaError("co-table index out of range");
      t[i].push_back({l, r, scalar_from_json(f, term[2])});
    }
  }
  return t;
}

Json to_json(const FiniteBialgebra& b) {
  Json j;
  j["kind"] = "bialgebra";
  j["field"] = b.field.name();
  j["dim"] = b.dim;
  j["labels"] = b.labels;
  Json mult = Json::array();
  for (std::size_t i = 0; i < b.dim; ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < b.dim; ++k) row.push_back(vector_to_json(b.basis_product(i, k)));
    mult.push_back(std::move(row));
  }
  j["mult"] = std::move(mult);
  j["comult"] = cotable_to_json(b.comult);
  j["unit"] = vector_to_json(b.unit);
  j["counit"] = vector_to_json(b.counit);
  return j;
}

Json to_json(const FiniteHopf& h) {
  Json j = to_json(static_cast<const FiniteBialgebra&>(h));
  j["kind"] = "hopf";
  j["antipode"] = matrix_to_json(h.antipode);
  if (h.antipode_inverse) j["antipode_inverse"] = matrix_to_json(*h.antipode_inverse);
  return j;
}

FiniteBialgebra bialgebra_from_json(const Json& j) {
  Field f = Field::parse(require(j, "field").get<std::string>());
  std::size_t n = as_index(require(j, "dim"));
  FiniteBialgebra b = FiniteBialgebra::empty(f, n);
  const Json& labels = require(j, "labels");
  if (!labels.is_array() || labels.size() != n) throw SchemaError("labels have wrong length");
  for (std::size_t i = 0; i < n; ++i) b.labels[i] = labels[i].get<std::string>();
  const Json& mult = require(j, "mult");
  if (!mult.is_array() || mult.size() != n) throw SchemaError("mult has wrong shape");
  for (std::size_t i = 0; i < n; ++i) {
    if (!mult[i].is_array() || mult[i].size() != n) throw SchemaError("mult has wrong shape");
    for (std::size_t k = 0; k < n; ++k) {
      Vector v = vector_from_json(f, mult[i][k], n);
      for (std::size_t l = 0; l < n; ++l) b.m(i, k, l) = v[l];
    }
  }
  b.comult = cotable_from_json(f, require(j, "comult"), n, n, n);
  b.unit = vector_from_json(f, require(j, "unit"), n);
  b.counit = vector_from_json(f, require(j, "counit"), n);
  b.validate();
  return b;
}

FiniteHopf hopf_from_json(const Json& j) {
  FiniteHopf h;
  static_cast<FiniteBialgebra&>(h) = bialgebra_from_json(j);
  h.antipode = matrix_from_json(h.field, require(j, "antipode"), h.dim, h.dim);
  if (j.contains("antipode_inverse"))
    h.antipode_inverse = matrix_from_json(h.field, j.at("antipode_inverse"), h.dim, h.dim);
  return h;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace hopf
