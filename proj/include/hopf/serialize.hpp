#pragma once

#include <string>

#include <json.hpp>

#include "hopf/bialgebra.hpp"

namespace hopf {

using Json = nlohmann::ordered_json;

Json vector_to_json(const Vector& v);
Vector vector_from_json(const Field& f, const Json& j, std::size_t expected_len);
Json matrix_to_json(const Matrix& m);  // list of rows
Matrix matrix_from_json(const Field& f, const Json& j, std::size_t rows, std::size_t cols);
Json cotable_to_json(const CoTable& t);  // canonical: merged, zero-free, sorted
CoTable cotable_from_json(const Field& f, const Json& j, std::size_t count, std::size_t left_dim,
                          std::size_t right_dim);

Json to_json(const FiniteBialgebra& b);
Json to_json(const FiniteHopf& h);
FiniteBialgebra bialgebra_from_json(const Json& j);
// Requires an "antipode" entry.
FiniteHopf hopf_from_json(const Json& j);

// Two-space indented text with trailing newline; stable across runs.
std::string dump(const Json& j);

}  // namespace hopf
